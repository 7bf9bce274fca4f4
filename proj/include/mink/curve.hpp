#pragma once

// Discrete closed spacelike curves in R^3_1.

#include "mink/lorentz.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace mink {

/// Band-limited (trigonometric) interpolant through M points placed at the
/// equally spaced parameters u_k = 2*pi*k/M, together with a spectrally
/// accurate arc-length map s(u) and its inverse.
class PeriodicCurve {
public:
    explicit PeriodicCurve(std::span<const MinkVec3d> points);

    struct Jet {
        MinkVec3d position;
        MinkVec3d first;
        MinkVec3d second;
    };

    /// Position and parameter derivatives at u (any real, 2*pi-periodic).
    Jet jet(double u) const;

    double length() const { return length_; }
    /// Arc length from u = 0 to u, for u in [0, 2*pi].
    double arc_length_at(double u) const;
    /// Inverse of arc_length_at; s is reduced modulo length().
    double parameter_at(double s) const;
    /// Minimum of <P'(u), P'(u)> over the fine evaluation grid.
    double min_speed_squared() const { return min_speed_sq_; }
    std::size_t node_count() const { return node_count_; }

private:
    std::size_t node_count_ = 0;
    // a_[j] cos(j u) + b_[j] sin(j u), j = 0..a_.size()-1
    std::vector<MinkVec3d> a_;
    std::vector<MinkVec3d> b_;
    // arc length and speed on the fine grid u_q = 2*pi*q/Q, q = 0..Q
    std::vector<double> grid_s_;
    std::vector<double> grid_speed_;
    double length_ = 0;
    double min_speed_sq_ = 0;
};

/// Point of a curve at a given arc length: position, unit tangent T = gamma'(s)
/// and curvature vector kappa*N = gamma''(s).
struct CurvePoint {
    MinkVec3d position;
    MinkVec3d tangent;
    MinkVec3d curvature;
};

/// Closed curve sampled at N points equally spaced in Lorentzian arc length.
/// Immutable; the underlying interpolant is shared between derived curves.
class ClosedCurve {
public:
    std::size_t size() const { return positions_.size(); }
    double length() const { return length_; }
    double spacing() const { return length_ / static_cast<double>(size()); }
    double arc_length(std::size_t i) const { return spacing() * static_cast<double>(i); }

    const std::vector<MinkVec3d>& positions() const { return positions_; }
    const std::vector<MinkVec3d>& tangents() const { return tangents_; }
    const std::vector<MinkVec3d>& curvature_vectors() const { return curvature_vectors_; }
    /// sqrt(<kN, kN>) where the curvature vector is spacelike, NaN elsewhere.
    const std::vector<double>& kappas() const { return kappas_; }

    /// Evaluates the curve at arc length s (periodic in length()).
    CurvePoint at(double s) const;

    /// Same curve resampled at n points, starting at the same point.
    ClosedCurve resampled(std::size_t n) const;
    /// Same curve with the start point moved forward by arc length s0.
    ClosedCurve shifted(double s0) const;
    /// Same point set traversed in the opposite direction, same start point.
    ClosedCurve reversed() const;

    const PeriodicCurve& interpolant() const { return *curve_; }

private:
    friend ClosedCurve resample_arclength(std::span<const MinkVec3d>, std::size_t);
    ClosedCurve(std::shared_ptr<const PeriodicCurve> curve, std::size_t n, double offset, int direction);

    std::shared_ptr<const PeriodicCurve> curve_;
    double offset_ = 0;
    int direction_ = 1;
    double length_ = 0;
    std::vector<MinkVec3d> positions_;
    std::vector<MinkVec3d> tangents_;
    std::vector<MinkVec3d> curvature_vectors_;
    std::vector<double> kappas_;
};

/// Interpolates the closed polyline (first point not repeated) and resamples
/// it at n points equally spaced in arc length.
/// Throws TooFewPoints (fewer than 8 points or n < 8) or NonSpacelikeSegment.
ClosedCurve resample_arclength(std::span<const MinkVec3d> points, std::size_t n);

struct StrongSpacelikeReport {
    bool ok = false;
    /// min_i <kN_i, kN_i>
    double worst_margin = 0;
    std::size_t worst_index = 0;
    /// min_i cosh^2(phi) theta'^2 - phi'^2 from the indicatrix derivatives
    double indicatrix_margin = 0;
    /// both criteria give the same verdict at every sample
    bool criteria_agree = false;
};

StrongSpacelikeReport is_strong_spacelike(const ClosedCurve& c);

/// Longitude/latitude lift of the unit tangent, T = (cosh phi cos theta, cosh phi sin theta, sinh phi).
struct TangentIndicatrix {
    std::vector<double> theta;
    std::vector<double> phi;
    /// theta advance over the full loop, including the closing step
    double total_winding = 0;
    /// samples where theta fails to advance in the direction of total_winding
    std::size_t monotonicity_violations = 0;
    bool theta_monotone() const { return monotonicity_violations == 0; }
};

/// Throws AmbiguousLift when consecutive longitudes differ by pi or more.
TangentIndicatrix indicatrix(const ClosedCurve& c);

struct IndexResult {
    /// always positive for a winding curve
    int value = 0;
    /// the raw winding was negative, i.e. the curve runs clockwise seen from the future
    bool reversed = false;
};

IndexResult curve_index(const ClosedCurve& c);

/// Composite Simpson quadrature of kappa over the closed curve (trapezoid when size() is odd).
double total_curvature(const ClosedCurve& c);

/// Returns c, reversed if its tangent winding is negative.
ClosedCurve oriented_positively(const ClosedCurve& c);

} // namespace mink
