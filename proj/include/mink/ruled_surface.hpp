#pragma once

// Ruled spacelike surface X(s,t) = (1-t) gamma0(s) + t gamma1(s) spanning a
// closed strong spacelike curve, with curvature and Gauss-Bonnet diagnostics.

#include "mink/curve.hpp"

#include <string>
#include <vector>

namespace mink {

/// Local differential data of the ruled surface at (s, t).
///
/// On the endpoint rows s = 0 and s = L the rulings degenerate to a point; the
/// tangent plane there is the osculating plane of the curve (reparametrize by
/// u = s^2), so xs = T, xt = kN/2, normal = T x kN and gauss_k is NaN.
struct SurfaceSampleFrame {
    double s = 0;
    double t = 0;
    MinkVec3d position = MinkVec3d::Zero();
    MinkVec3d xs = MinkVec3d::Zero();
    MinkVec3d xt = MinkVec3d::Zero();
    /// xs x xt, oriented so that it is future-directed on a spacelike surface
    MinkVec3d normal = MinkVec3d::Zero();
    double E = 0, F = 0, G = 0;
    double e = 0, f = 0, g = 0;
    double gauss_k = 0;

    double metric_determinant() const { return E * G - F * F; }
};

/// Gauss curvature -(eg - f^2)/(EG - F^2) of a spacelike parametrized surface,
/// with the second fundamental form taken against the unit timelike normal.
/// Planes give 0, spacelike ruled surfaces K >= 0, the hyperboloid <X,X> = -1 gives -1.
double gauss_curvature(const MinkVec3d& xs, const MinkVec3d& xt, const MinkVec3d& xss, const MinkVec3d& xst,
    const MinkVec3d& xtt);

class RuledSurface {
public:
    const ClosedCurve& curve() const { return curve_; }
    /// L, the common length of the two arcs
    double arc_length() const { return half_length_; }
    const MinkVec3d& p() const { return rows0_.front().position; }
    const MinkVec3d& q() const { return rows0_.back().position; }
    std::size_t grid_s() const { return ns_; }
    std::size_t grid_t() const { return nt_; }
    double step_s() const { return half_length_ / static_cast<double>(ns_ - 1); }
    double step_t() const { return 1.0 / static_cast<double>(nt_ - 1); }
    double node_s(std::size_t j) const { return step_s() * static_cast<double>(j); }
    double node_t(std::size_t k) const { return step_t() * static_cast<double>(k); }
    /// +1 when T0 x v is future-directed, -1 when the curve runs the other way
    int orientation() const { return orientation_; }

    /// gamma0(s) = c(s); gamma1(s) = c(2L - s) with tangent T1 = -c'(2L - s).
    CurvePoint gamma0(double s) const;
    CurvePoint gamma1(double s) const;
    /// v(s) = gamma1(s) - gamma0(s)
    MinkVec3d ruling(double s) const;
    MinkVec3d position(double s, double t) const;

    /// Cached arc samples at the grid nodes s_j.
    const std::vector<CurvePoint>& grid_gamma0() const { return rows0_; }
    const std::vector<CurvePoint>& grid_gamma1() const { return rows1_; }

private:
    friend RuledSurface build_ruled(const ClosedCurve&, std::size_t, std::size_t, double);
    RuledSurface(ClosedCurve c, std::size_t ns, std::size_t nt);

    ClosedCurve curve_;
    double half_length_ = 0;
    std::size_t ns_ = 0;
    std::size_t nt_ = 0;
    int orientation_ = 1;
    std::vector<CurvePoint> rows0_;
    std::vector<CurvePoint> rows1_;
};

/// Splits c at arc length `start` and start + L_total/2 and builds the ruled
/// surface on an ns x nt node lattice over [0, L] x [0, 1].
/// Throws InvalidArgument unless c is strong spacelike of index 1 and ns, nt >= 3.
RuledSurface build_ruled(const ClosedCurve& c, std::size_t ns = 512, std::size_t nt = 64, double start = 0.0);

/// Partials from the ruling structure, gauss_k from centered differences of X
/// with the lattice steps. Throws DegenerateFrame if EG - F^2 <= 0 at an interior point.
SurfaceSampleFrame frame_at(const RuledSurface& rs, double s, double t);

/// Frames at every lattice node, s-major.
std::vector<SurfaceSampleFrame> evaluate_grid(const RuledSurface& rs);

struct SpacelikeReport {
    bool ok = false;
    /// max over the lattice of <n,n>/|n|^2_E (negative on a spacelike surface)
    double worst_margin = 0;
    double worst_s = 0;
    double worst_t = 0;
    /// min gauss_k over nodes with 0 < s < L
    double min_gauss_k = 0;
};

SpacelikeReport verify_spacelike(const RuledSurface& rs);

struct BoundarySample {
    double s = 0;
    /// 0 for the gamma0 arc, 1 for the gamma1 arc
    int side = 0;
    double kappa = 0;
    /// kappa * cosh(theta_p) from the angle between tangent and osculating planes
    double kappa_g = 0;
    /// <kN, nu> with nu the inward in-surface conormal and kN from second differences
    double kappa_g_intrinsic = 0;
    /// |theta_p|; the sign is not determined
    double hyperbolic_angle = 0;
};

/// One sample per boundary point: the gamma0 row including p and q, then the
/// interior of the gamma1 row.
std::vector<BoundarySample> boundary_geodesic_curvature(const RuledSurface& rs);

struct GaussBonnetReport {
    double area_integral_k = 0;
    double boundary_integral_kg = 0;
    double residual = 0;
    double min_gauss_k = 0;
    double spacelike_margin = 0;
};

GaussBonnetReport gauss_bonnet_check(const RuledSurface& rs);

/// Composite Simpson weights on n equally spaced nodes (3/8 rule on the last
/// three intervals when n - 1 is odd).
std::vector<double> simpson_weights(std::size_t n, double h);

/// Writes the lattice as an OBJ mesh, two triangles per quad. Throws IoError.
void export_mesh(const RuledSurface& rs, const std::string& path);

} // namespace mink
