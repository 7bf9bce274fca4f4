#pragma once

// Closed strong spacelike index-1 test curves.

#include "mink/curve.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mink {

enum class GeneratorKind { PlanarCircle, TiltedEllipse, GraphOverConvex, RandomFourier };

/// Kind-specific parameters; unused fields are ignored.
///
/// - PlanarCircle:    (R cos t, R sin t, 0)                     uses radius
/// - TiltedEllipse:   (a cos t, b sin t, c a cos t), |c| < 1     uses a, b, tilt
/// - GraphOverConvex: (a cos t, b sin t, h(t))                  uses a, b, height_cos, height_sin
/// - RandomFourier:   (R cos t, R sin t, h(t)), random h         uses radius, harmonics, amplitude, seed
///
/// h(t) = sum_k height_cos[k-1] cos(k t) + height_sin[k-1] sin(k t). For GraphOverConvex the
/// coefficients must satisfy sum_k (k + k^2) |h_k| < min(a, b), which makes the curve strong
/// spacelike a priori. RandomFourier draws |h_k| uniformly in [0, amplitude / k] with a uniform
/// phase and rejects draws that fail the strong-spacelike or index-1 check.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::PlanarCircle;
    double radius = 1.0;
    double a = 1.0;
    double b = 1.0;
    double tilt = 0.0;
    std::vector<double> height_cos;
    std::vector<double> height_sin;
    int harmonics = 3;
    double amplitude = 0.15;
    std::uint64_t seed = 0;
    std::size_t samples = 512;
};

/// Random draws attempted before RandomFourier gives up.
inline constexpr int kMaxRejections = 1000;

/// Throws InvalidArgument for out-of-range parameters and RejectionExhausted
/// when no RandomFourier draw passes the checks.
ClosedCurve generate(const GeneratorSpec& spec);

/// Height coefficients of the RandomFourier draw that generate() accepts for this spec.
struct HeightFunction {
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;
    double operator()(double t) const;
};
HeightFunction random_fourier_heights(const GeneratorSpec& spec);

/// (cos t, sin t, eps sin 2t). Strong spacelike only for eps < 0.25 (the curve is
/// spacelike up to eps < 0.5), so larger values throw InvalidArgument.
ClosedCurve equality_gap_family(double eps, std::size_t samples = 1024);

GeneratorKind parse_generator_kind(const std::string& name);
std::string to_string(GeneratorKind kind);

} // namespace mink
