#include "mink/ruled_surface.hpp"

#include "mink/error.hpp"
#include "mink/io.hpp"
#include "mink/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace mink {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct ArcPair {
    CurvePoint g0;
    CurvePoint g1;
};

MinkVec3d combine(const ArcPair& a, double t)
{
    return (1.0 - t) * a.g0.position + t * a.g1.position;
}

struct SecondForm {
    double e = kNaN, f = kNaN, g = kNaN, k = kNaN;
};

SecondForm second_form(const MinkVec3d& normal, double det, const MinkVec3d& xss, const MinkVec3d& xst,
    const MinkVec3d& xtt)
{
    const double nn = inner(normal, normal);
    if (!(nn < 0) || !(det > 0)) return {};
    const MinkVec3d unit = normal / std::sqrt(-nn);
    SecondForm sf;
    sf.e = inner(xss, unit);
    sf.f = inner(xst, unit);
    sf.g = inner(xtt, unit);
    sf.k = -(sf.e * sf.g - sf.f * sf.f) / det;
    return sf;
}

SurfaceSampleFrame endpoint_frame(const CurvePoint& c, double s, double t, int orientation)
{
    SurfaceSampleFrame fr;
    fr.s = s;
    fr.t = t;
    fr.position = c.position;
    fr.xs = c.tangent;
    fr.xt = 0.5 * c.curvature;
    fr.normal = orientation * cross(c.tangent, c.curvature);
    fr.E = inner(fr.xs, fr.xs);
    fr.F = inner(fr.xs, fr.xt);
    fr.G = inner(fr.xt, fr.xt);
    fr.e = fr.f = fr.g = fr.gauss_k = kNaN;
    return fr;
}

SurfaceSampleFrame interior_frame(const ArcPair& minus, const ArcPair& mid, const ArcPair& plus, double s, double t,
    double hs, double kt, int orientation)
{
    SurfaceSampleFrame fr;
    fr.s = s;
    fr.t = t;
    fr.position = combine(mid, t);
    fr.xs = (1.0 - t) * mid.g0.tangent + t * mid.g1.tangent;
    fr.xt = mid.g1.position - mid.g0.position;
    fr.normal = orientation * cross(fr.xs, fr.xt);
    fr.E = inner(fr.xs, fr.xs);
    fr.F = inner(fr.xs, fr.xt);
    fr.G = inner(fr.xt, fr.xt);

    const MinkVec3d xss = (combine(plus, t) - 2.0 * fr.position + combine(minus, t)) / (hs * hs);
    const MinkVec3d xst = (combine(plus, t + kt) - combine(plus, t - kt) - combine(minus, t + kt) + combine(minus, t - kt))
        / (4.0 * hs * kt);
    const MinkVec3d xtt = (combine(mid, t + kt) - 2.0 * fr.position + combine(mid, t - kt)) / (kt * kt);
    const SecondForm sf = second_form(fr.normal, fr.metric_determinant(), xss, xst, xtt);
    fr.e = sf.e;
    fr.f = sf.f;
    fr.g = sf.g;
    fr.gauss_k = sf.k;
    return fr;
}

// cosh of the hyperbolic angle between the surface tangent plane and the osculating plane.
double tilt_cosh(const MinkVec3d& surface_normal, const CurvePoint& c)
{
    const MinkVec3d osculating = cross(c.tangent, c.curvature);
    return std::abs(inner(lorentz_normalized(surface_normal), lorentz_normalized(osculating)));
}

double kappa_of(const CurvePoint& c)
{
    return std::sqrt(inner(c.curvature, c.curvature));
}

} // namespace

double gauss_curvature(const MinkVec3d& xs, const MinkVec3d& xt, const MinkVec3d& xss, const MinkVec3d& xst,
    const MinkVec3d& xtt)
{
    const double det = inner(xs, xs) * inner(xt, xt) - inner(xs, xt) * inner(xs, xt);
    return second_form(cross(xs, xt), det, xss, xst, xtt).k;
}

RuledSurface::RuledSurface(ClosedCurve c, std::size_t ns, std::size_t nt)
    : curve_(std::move(c))
    , half_length_(curve_.length() / 2.0)
    , ns_(ns)
    , nt_(nt)
    , rows0_(ns)
    , rows1_(ns)
{
    parallel_for(ns_, [this](std::size_t j) {
        const double s = j + 1 == ns_ ? half_length_ : node_s(j);
        rows0_[j] = gamma0(s);
        rows1_[j] = gamma1(s);
    });
    const std::size_t mid = (ns_ - 1) / 2;
    const MinkVec3d v = rows1_[mid].position - rows0_[mid].position;
    orientation_ = cross(rows0_[mid].tangent, v)(2) > 0 ? 1 : -1;
}

CurvePoint RuledSurface::gamma0(double s) const
{
    return curve_.at(s);
}

CurvePoint RuledSurface::gamma1(double s) const
{
    CurvePoint c = curve_.at(curve_.length() - s);
    c.tangent = -c.tangent;
    return c;
}

MinkVec3d RuledSurface::ruling(double s) const
{
    return gamma1(s).position - gamma0(s).position;
}

MinkVec3d RuledSurface::position(double s, double t) const
{
    return (1.0 - t) * gamma0(s).position + t * gamma1(s).position;
}

RuledSurface build_ruled(const ClosedCurve& c, std::size_t ns, std::size_t nt, double start)
{
    if (ns < 3 || nt < 3) throw Error(ErrorCode::InvalidArgument, "ruled surface lattice needs at least 3x3 nodes");
    if (!is_strong_spacelike(c).ok) throw Error(ErrorCode::InvalidArgument, "curve is not strong spacelike");
    if (curve_index(c).value != 1) throw Error(ErrorCode::InvalidArgument, "curve index is not 1");
    return RuledSurface(start == 0.0 ? c : c.shifted(start), ns, nt);
}

SurfaceSampleFrame frame_at(const RuledSurface& rs, double s, double t)
{
    const double len = rs.arc_length();
    if (s <= 0) return endpoint_frame(rs.gamma0(0.0), 0.0, t, rs.orientation());
    if (s >= len) return endpoint_frame(rs.gamma0(len), len, t, rs.orientation());
    const double hs = rs.step_s();
    const ArcPair minus{rs.gamma0(s - hs), rs.gamma1(s - hs)};
    const ArcPair mid{rs.gamma0(s), rs.gamma1(s)};
    const ArcPair plus{rs.gamma0(s + hs), rs.gamma1(s + hs)};
    SurfaceSampleFrame fr = interior_frame(minus, mid, plus, s, t, hs, rs.step_t(), rs.orientation());
    if (t > 0 && t < 1 && !(fr.metric_determinant() > 0)) {
        throw Error(ErrorCode::DegenerateFrame, "EG - F^2 = " + std::to_string(fr.metric_determinant()) + " at s = "
                + std::to_string(s) + ", t = " + std::to_string(t));
    }
    return fr;
}

std::vector<SurfaceSampleFrame> evaluate_grid(const RuledSurface& rs)
{
    const std::size_t ns = rs.grid_s();
    const std::size_t nt = rs.grid_t();
    const auto& r0 = rs.grid_gamma0();
    const auto& r1 = rs.grid_gamma1();
    std::vector<SurfaceSampleFrame> frames(ns * nt);
    parallel_for(ns, [&](std::size_t j) {
        const double s = j + 1 == ns ? rs.arc_length() : rs.node_s(j);
        for (std::size_t k = 0; k < nt; ++k) {
            const double t = k + 1 == nt ? 1.0 : rs.node_t(k);
            SurfaceSampleFrame& fr = frames[j * nt + k];
            if (j == 0 || j + 1 == ns) {
                fr = endpoint_frame(r0[j], s, t, rs.orientation());
            } else {
                fr = interior_frame({r0[j - 1], r1[j - 1]}, {r0[j], r1[j]}, {r0[j + 1], r1[j + 1]}, s, t, rs.step_s(),
                    rs.step_t(), rs.orientation());
            }
        }
    });
    return frames;
}

namespace {

SpacelikeReport spacelike_from_grid(const RuledSurface& rs, const std::vector<SurfaceSampleFrame>& frames)
{
    SpacelikeReport r;
    r.ok = true;
    r.worst_margin = -std::numeric_limits<double>::infinity();
    r.min_gauss_k = std::numeric_limits<double>::infinity();
    const std::size_t nt = rs.grid_t();
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const SurfaceSampleFrame& fr = frames[i];
        const double margin = normalized_causal_margin(fr.normal);
        if (!(margin < 0) || !(fr.normal(2) > 0)) r.ok = false;
        if (margin > r.worst_margin || std::isnan(margin)) {
            r.worst_margin = margin;
            r.worst_s = fr.s;
            r.worst_t = fr.t;
        }
        const std::size_t j = i / nt;
        if (j > 0 && j + 1 < rs.grid_s()) {
            if (std::isnan(fr.gauss_k)) {
                r.ok = false;
                r.min_gauss_k = kNaN;
            } else if (!std::isnan(r.min_gauss_k)) {
                r.min_gauss_k = std::min(r.min_gauss_k, fr.gauss_k);
            }
        }
    }
    return r;
}

} // namespace

SpacelikeReport verify_spacelike(const RuledSurface& rs)
{
    return spacelike_from_grid(rs, evaluate_grid(rs));
}

std::vector<BoundarySample> boundary_geodesic_curvature(const RuledSurface& rs)
{
    const std::size_t ns = rs.grid_s();
    const auto& r0 = rs.grid_gamma0();
    const auto& r1 = rs.grid_gamma1();
    const double hs = rs.step_s();

    std::vector<BoundarySample> out;
    out.reserve(2 * ns - 2);
    auto sample = [&](std::size_t j, int side) {
        const double s = j + 1 == ns ? rs.arc_length() : rs.node_s(j);
        const auto& row = side == 0 ? r0 : r1;
        const auto& other = side == 0 ? r1 : r0;
        const CurvePoint& c = row[j];
        const bool endpoint = j == 0 || j + 1 == ns;

        BoundarySample b;
        b.s = s;
        b.side = side;
        b.kappa = kappa_of(c);

        // Past either end of an arc the closed curve continues along the other arc.
        const MinkVec3d& prev = j == 0 ? other[1].position : row[j - 1].position;
        const MinkVec3d& next = j + 1 == ns ? other[ns - 2].position : row[j + 1].position;
        const MinkVec3d second = (next - 2.0 * c.position + prev) / (hs * hs);

        MinkVec3d normal;
        MinkVec3d conormal;
        if (endpoint) {
            normal = cross(c.tangent, c.curvature);
            conormal = c.curvature / b.kappa;
        } else {
            const MinkVec3d v = r1[j].position - r0[j].position;
            normal = cross(c.tangent, v);
            const MinkVec3d inward = side == 0 ? v : MinkVec3d(-v);
            conormal = lorentz_normalized(MinkVec3d(inward - inner(inward, c.tangent) * c.tangent));
        }
        const double ch = tilt_cosh(normal, c);
        b.kappa_g = b.kappa * ch;
        b.kappa_g_intrinsic = inner(second, conormal);
        b.hyperbolic_angle = std::acosh(std::max(1.0, ch));
        return b;
    };
    for (std::size_t j = 0; j < ns; ++j) out.push_back(sample(j, 0));
    for (std::size_t j = 1; j + 1 < ns; ++j) out.push_back(sample(j, 1));
    return out;
}

GaussBonnetReport gauss_bonnet_check(const RuledSurface& rs)
{
    const std::vector<SurfaceSampleFrame> frames = evaluate_grid(rs);
    const std::size_t ns = rs.grid_s();
    const std::size_t nt = rs.grid_t();
    const std::vector<double> ws = simpson_weights(ns, rs.step_s());
    const std::vector<double> wt = simpson_weights(nt, rs.step_t());

    GaussBonnetReport r;
    for (std::size_t j = 1; j + 1 < ns; ++j) {
        double row = 0;
        for (std::size_t k = 0; k < nt; ++k) {
            const SurfaceSampleFrame& fr = frames[j * nt + k];
            row += wt[k] * fr.gauss_k * std::sqrt(fr.metric_determinant());
        }
        r.area_integral_k += ws[j] * row;
    }

    const auto& r0 = rs.grid_gamma0();
    const auto& r1 = rs.grid_gamma1();
    for (std::size_t j = 0; j < ns; ++j) {
        const SurfaceSampleFrame& f0 = frames[j * nt];
        const SurfaceSampleFrame& f1 = frames[j * nt + nt - 1];
        const double kg0 = kappa_of(r0[j]) * tilt_cosh(f0.normal, r0[j]);
        const double kg1 = kappa_of(r1[j]) * tilt_cosh(f1.normal, r1[j]);
        r.boundary_integral_kg += ws[j] * (kg0 + kg1);
    }
    r.residual = r.area_integral_k + r.boundary_integral_kg - 2.0 * std::numbers::pi;

    const SpacelikeReport sl = spacelike_from_grid(rs, frames);
    r.min_gauss_k = sl.min_gauss_k;
    r.spacelike_margin = sl.worst_margin;
    return r;
}

std::vector<double> simpson_weights(std::size_t n, double h)
{
    if (n < 2) return std::vector<double>(n, 0.0);
    std::vector<double> w(n, 0.0);
    const std::size_t intervals = n - 1;
    if (intervals == 1) {
        w[0] = w[1] = h / 2;
        return w;
    }
    const std::size_t simpson_intervals = intervals % 2 == 0 ? intervals : intervals - 3;
    for (std::size_t i = 0; i + 2 <= simpson_intervals; i += 2) {
        w[i] += h / 3;
        w[i + 1] += 4 * h / 3;
        w[i + 2] += h / 3;
    }
    if (intervals % 2 == 1) {
        const std::size_t b = simpson_intervals;
        w[b] += 3 * h / 8;
        w[b + 1] += 9 * h / 8;
        w[b + 2] += 9 * h / 8;
        w[b + 3] += 3 * h / 8;
    }
    return w;
}

void export_mesh(const RuledSurface& rs, const std::string& path)
{
    if (path.empty()) throw Error(ErrorCode::IoError, "empty mesh path");
    const std::size_t ns = rs.grid_s();
    const std::size_t nt = rs.grid_t();
    const auto& r0 = rs.grid_gamma0();
    const auto& r1 = rs.grid_gamma1();
    ObjMesh mesh;
    mesh.vertices.reserve(ns * nt);
    for (std::size_t j = 0; j < ns; ++j) {
        for (std::size_t k = 0; k < nt; ++k) {
            const double t = k + 1 == nt ? 1.0 : rs.node_t(k);
            mesh.vertices.push_back(combine({r0[j], r1[j]}, t));
        }
    }
    auto id = [nt](std::size_t j, std::size_t k) { return static_cast<int>(j * nt + k); };
    for (std::size_t j = 0; j + 1 < ns; ++j) {
        for (std::size_t k = 0; k + 1 < nt; ++k) {
            mesh.faces.push_back({id(j, k), id(j + 1, k), id(j + 1, k + 1)});
            mesh.faces.push_back({id(j, k), id(j + 1, k + 1), id(j, k + 1)});
        }
    }
    write_obj(path, mesh);
}

} // namespace mink
