#include "mink/generators.hpp"

#include "mink/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <utility>

namespace mink {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t input_points_for(std::size_t max_harmonic)
{
    return std::max<std::size_t>(64, 8 * (max_harmonic + 1));
}

template <typename F>
std::vector<MinkVec3d> sample_parametric(std::size_t m, F&& f)
{
    std::vector<MinkVec3d> pts;
    pts.reserve(m);
    for (std::size_t k = 0; k < m; ++k) pts.push_back(f(kTwoPi * static_cast<double>(k) / static_cast<double>(m)));
    return pts;
}

bool passes_hypotheses(const ClosedCurve& c)
{
    if (!is_strong_spacelike(c).ok) return false;
    try {
        const IndexResult idx = curve_index(c);
        return idx.value == 1 && !idx.reversed;
    } catch (const Error&) {
        return false;
    }
}

void require(bool cond, const std::string& msg)
{
    if (!cond) throw Error(ErrorCode::InvalidArgument, msg);
}

ClosedCurve verified(ClosedCurve c, const char* what)
{
    if (!passes_hypotheses(c)) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " is not a strong spacelike index-1 curve");
    }
    return c;
}

ClosedCurve graph_curve(double a, double b, const HeightFunction& h, std::size_t samples)
{
    const std::size_t m = input_points_for(std::max(h.cos_coeffs.size(), h.sin_coeffs.size()));
    const auto pts = sample_parametric(m, [&](double t) { return MinkVec3d(a * std::cos(t), b * std::sin(t), h(t)); });
    return resample_arclength(pts, samples);
}

std::pair<ClosedCurve, HeightFunction> draw_random_fourier(const GeneratorSpec& spec)
{
    require(spec.radius > 0, "radius must be positive");
    require(spec.harmonics >= 1, "harmonics must be at least 1");
    require(spec.amplitude >= 0 && std::isfinite(spec.amplitude), "amplitude must be finite and non-negative");

    std::mt19937_64 rng(spec.seed);
    const auto n = static_cast<std::size_t>(spec.harmonics);
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        HeightFunction h;
        h.cos_coeffs.resize(n);
        h.sin_coeffs.resize(n);
        for (std::size_t k = 1; k <= n; ++k) {
            const double r = spec.amplitude * uniform01(rng) / static_cast<double>(k);
            const double phase = kTwoPi * uniform01(rng);
            h.cos_coeffs[k - 1] = r * std::cos(phase);
            h.sin_coeffs[k - 1] = r * std::sin(phase);
        }
        std::optional<ClosedCurve> c;
        try {
            c = graph_curve(spec.radius, spec.radius, h, spec.samples);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NonSpacelikeSegment) throw;
            continue;
        }
        if (passes_hypotheses(*c)) return {std::move(*c), std::move(h)};
    }
    throw Error(ErrorCode::RejectionExhausted, "no strong spacelike index-1 draw in " + std::to_string(kMaxRejections)
            + " attempts; amplitude " + std::to_string(spec.amplitude) + " is too large");
}

} // namespace

double HeightFunction::operator()(double t) const
{
    double h = 0;
    for (std::size_t k = 1; k <= cos_coeffs.size(); ++k) h += cos_coeffs[k - 1] * std::cos(static_cast<double>(k) * t);
    for (std::size_t k = 1; k <= sin_coeffs.size(); ++k) h += sin_coeffs[k - 1] * std::sin(static_cast<double>(k) * t);
    return h;
}

HeightFunction random_fourier_heights(const GeneratorSpec& spec)
{
    return draw_random_fourier(spec).second;
}

ClosedCurve generate(const GeneratorSpec& spec)
{
    require(spec.samples >= 8, "samples must be at least 8");
    switch (spec.kind) {
    case GeneratorKind::PlanarCircle: {
        require(spec.radius > 0, "radius must be positive");
        const double r = spec.radius;
        const auto pts = sample_parametric(input_points_for(1), [r](double t) {
            return MinkVec3d(r * std::cos(t), r * std::sin(t), 0.0);
        });
        return verified(resample_arclength(pts, spec.samples), "planar circle");
    }
    case GeneratorKind::TiltedEllipse: {
        require(spec.a > 0 && spec.b > 0, "semi-axes must be positive");
        require(std::abs(spec.tilt) < 1, "tilt slope must satisfy |c| < 1 for a spacelike plane");
        const double a = spec.a, b = spec.b, c = spec.tilt;
        const auto pts = sample_parametric(input_points_for(1), [=](double t) {
            return MinkVec3d(a * std::cos(t), b * std::sin(t), c * a * std::cos(t));
        });
        return verified(resample_arclength(pts, spec.samples), "tilted ellipse");
    }
    case GeneratorKind::GraphOverConvex: {
        require(spec.a > 0 && spec.b > 0, "semi-axes must be positive");
        HeightFunction h{spec.height_cos, spec.height_sin};
        double bound = 0;
        const std::size_t n = std::max(h.cos_coeffs.size(), h.sin_coeffs.size());
        for (std::size_t k = 1; k <= n; ++k) {
            const double ck = k <= h.cos_coeffs.size() ? h.cos_coeffs[k - 1] : 0.0;
            const double sk = k <= h.sin_coeffs.size() ? h.sin_coeffs[k - 1] : 0.0;
            const double kd = static_cast<double>(k);
            bound += (kd + kd * kd) * std::hypot(ck, sk);
        }
        require(bound < std::min(spec.a, spec.b),
            "height coefficients exceed the strong-spacelike bound sum (k + k^2)|h_k| < min(a, b)");
        return verified(graph_curve(spec.a, spec.b, h, spec.samples), "graph over convex curve");
    }
    case GeneratorKind::RandomFourier:
        return draw_random_fourier(spec).first;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown generator kind");
}

ClosedCurve equality_gap_family(double eps, std::size_t samples)
{
    require(eps >= 0 && eps < 0.5, "eps must lie in [0, 0.5)");
    const auto pts = sample_parametric(input_points_for(2), [eps](double t) {
        return MinkVec3d(std::cos(t), std::sin(t), eps * std::sin(2 * t));
    });
    return verified(resample_arclength(pts, samples), "equality-gap curve");
}

GeneratorKind parse_generator_kind(const std::string& name)
{
    if (name == "planar-circle") return GeneratorKind::PlanarCircle;
    if (name == "tilted-ellipse") return GeneratorKind::TiltedEllipse;
    if (name == "graph-over-convex") return GeneratorKind::GraphOverConvex;
    if (name == "random-fourier") return GeneratorKind::RandomFourier;
    throw Error(ErrorCode::InvalidArgument, "unknown curve kind '" + name + "'");
}

std::string to_string(GeneratorKind kind)
{
    switch (kind) {
    case GeneratorKind::PlanarCircle: return "planar-circle";
    case GeneratorKind::TiltedEllipse: return "tilted-ellipse";
    case GeneratorKind::GraphOverConvex: return "graph-over-convex";
    case GeneratorKind::RandomFourier: return "random-fourier";
    }
    return "unknown";
}

} // namespace mink
