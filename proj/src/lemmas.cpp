#include "mink/lemmas.hpp"

#include "mink/error.hpp"
#include "mink/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace mink {

namespace {

constexpr double kPlaneTol = 1e-12;

double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct PlaneBasis {
    MinkVec3d first;
    MinkVec3d second;
};

PlaneBasis basis_of(const ProjectionPlane& plane)
{
    if (plane.kind == PlaneKind::Lightlike) {
        // sigma(v) = <sigma(v), e> e + <sigma(v), n*> n
        return {lorentz_normalized(cross(plane.normal, plane.transversal)), plane.transversal};
    }
    MinkVec3d e1 = cross(plane.normal, MinkVec3d::UnitX());
    if (e1.squaredNorm() < 1e-8 * plane.normal.squaredNorm()) e1 = cross(plane.normal, MinkVec3d::UnitY());
    e1 = lorentz_normalized(e1);
    return {e1, lorentz_normalized(cross(plane.normal, e1))};
}

} // namespace

ProjectionPlane ProjectionPlane::spacelike(const MinkVec3d& n)
{
    if (!n.allFinite() || classify(n).tag != CausalTag::Timelike) {
        throw Error(ErrorCode::DegeneratePlane, "spacelike plane needs a timelike normal");
    }
    ProjectionPlane p;
    p.kind = PlaneKind::Spacelike;
    p.normal = lorentz_normalized(n);
    return p;
}

ProjectionPlane ProjectionPlane::lightlike(const MinkVec3d& n, const MinkVec3d& n_star)
{
    ProjectionPlane p;
    p.kind = PlaneKind::Lightlike;
    p.normal = n;
    p.transversal = n_star;
    validate(p);
    return p;
}

ProjectionPlane ProjectionPlane::lightlike(const MinkVec3d& n)
{
    if (!(std::abs(n(2)) > 0)) throw Error(ErrorCode::DegeneratePlane, "lightlike normal must be nonzero");
    return lightlike(n, MinkVec3d(n(0), n(1), -n(2)) / (2.0 * n(2) * n(2)));
}

void validate(const ProjectionPlane& plane)
{
    const MinkVec3d& n = plane.normal;
    if (!n.allFinite() || !plane.transversal.allFinite()) {
        throw Error(ErrorCode::DegeneratePlane, "non-finite plane vectors");
    }
    if (plane.kind == PlaneKind::Spacelike) {
        if (std::abs(inner(n, n) + 1.0) > kPlaneTol) {
            throw Error(ErrorCode::DegeneratePlane, "spacelike plane normal must satisfy <n,n> = -1");
        }
        return;
    }
    const MinkVec3d& m = plane.transversal;
    const double sn = std::max(1.0, n.squaredNorm());
    const double sm = std::max(1.0, m.squaredNorm());
    if (n.squaredNorm() == 0 || std::abs(inner(n, n)) > kPlaneTol * sn || std::abs(inner(m, m)) > kPlaneTol * sm
        || std::abs(inner(n, m) - 1.0) > kPlaneTol * std::sqrt(sn * sm)) {
        throw Error(ErrorCode::DegeneratePlane, "lightlike plane needs <n,n> = <n*,n*> = 0 and <n,n*> = 1");
    }
}

MinkVec3d project(const MinkVec3d& v, const ProjectionPlane& plane)
{
    if (plane.kind == PlaneKind::Spacelike) return v + inner(v, plane.normal) * plane.normal;
    return v - inner(v, plane.normal) * plane.transversal;
}

Vec2d plane_coordinates(const MinkVec3d& projected, const ProjectionPlane& plane)
{
    const PlaneBasis b = basis_of(plane);
    return Vec2d(inner(projected, b.first), inner(projected, b.second));
}

bool is_simple_polygon(const std::vector<Vec2d>& poly)
{
    const std::size_t n = poly.size();
    if (n < 3) return false;
    auto next = [n](std::size_t i) { return (i + 1) % n; };

    // Adjacent edges only meet at their shared vertex unless they fold back collinearly.
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2d& a = poly[i];
        const Vec2d& b = poly[next(i)];
        const Vec2d& c = poly[next(next(i))];
        if (a == b) return false;
        if (orient2d(a, b, c) == 0 && (b - a).dot(c - b) <= 0) return false;
    }

    // Sweep over edges sorted by their leftmost x; the active set holds edges whose x-range is still open.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto xmin = [&](std::size_t e) { return std::min(poly[e].x(), poly[next(e)].x()); };
    auto xmax = [&](std::size_t e) { return std::max(poly[e].x(), poly[next(e)].x()); };
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return xmin(l) < xmin(r); });

    std::vector<std::size_t> active;
    for (std::size_t e : order) {
        const double x = xmin(e);
        std::erase_if(active, [&](std::size_t f) { return xmax(f) < x; });
        for (std::size_t f : active) {
            if (next(e) == f || next(f) == e) continue;
            if (segments_intersect(poly[e], poly[next(e)], poly[f], poly[next(f)])) return false;
        }
        active.push_back(e);
    }
    return true;
}

ProjectionReport check_projection_lemma(const ClosedCurve& c, const ProjectionPlane& plane)
{
    validate(plane);
    const PlaneBasis b = basis_of(plane);
    auto coords = [&](const MinkVec3d& v) {
        const MinkVec3d p = project(v, plane);
        return Vec2d(inner(p, b.first), inner(p, b.second));
    };

    ProjectionReport r;
    std::vector<Vec2d> polygon;
    polygon.reserve(c.size());
    std::size_t positive = 0;
    std::size_t negative = 0;
    r.min_turn_rate = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < c.size(); ++i) {
        polygon.push_back(coords(c.positions()[i]));
        const Vec2d t = coords(c.tangents()[i]);
        const Vec2d k = coords(c.curvature_vectors()[i]);
        const double det = t.x() * k.y() - t.y() * k.x();
        if (det > 0) ++positive;
        if (det < 0) ++negative;
        r.min_turn_rate = std::min(r.min_turn_rate, std::abs(det));
    }
    r.convex = positive == c.size() || negative == c.size();
    r.injective = is_simple_polygon(polygon);
    return r;
}

SectionReport check_section_lemma(const ClosedCurve& c, std::size_t trials, std::uint64_t seed, PairSampling pairs)
{
    SectionReport r;
    r.worst_margin = std::numeric_limits<double>::infinity();
    const std::size_t n = c.size();
    const auto& p = c.positions();
    const auto& t = c.tangents();

    auto check_pair = [&](std::size_t i, std::size_t j) {
        const MinkVec3d d = p[j] - p[i];
        const double chord = normalized_causal_margin(d);
        const double tangent_plane = -normalized_causal_margin(cross(d, t[i]));
        if (!(chord > 0)) r.chords_ok = false;
        if (!(tangent_plane > 0)) r.chord_tangent_ok = false;
        r.worst_margin = std::min({r.worst_margin, chord, tangent_plane});
        ++r.pairs_checked;
    };

    std::mt19937_64 rng(seed);
    auto pick = [&] { return static_cast<std::size_t>(rng() % n); };

    if (pairs == PairSampling::Exhaustive) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) check_pair(i, j);
            }
        }
    } else {
        for (std::size_t k = 0; k < trials; ++k) {
            const std::size_t i = pick();
            std::size_t j = pick();
            while (j == i) j = pick();
            check_pair(i, j);
        }
    }

    for (std::size_t k = 0; k < trials; ++k) {
        const std::size_t i = pick();
        std::size_t j = pick();
        while (j == i) j = pick();
        std::size_t l = pick();
        while (l == i || l == j) l = pick();
        const double m = -normalized_causal_margin(cross(p[j] - p[i], p[l] - p[i]));
        if (!(m > 0)) r.triples_ok = false;
        r.worst_margin = std::min(r.worst_margin, m);
        ++r.triples_checked;
    }
    return r;
}

ProjectionPlane random_spacelike_plane(std::mt19937_64& rng)
{
    const double rho = 2.0 * uniform01(rng);
    const double alpha = 2.0 * std::numbers::pi * uniform01(rng);
    return ProjectionPlane::spacelike(
        MinkVec3d(std::sinh(rho) * std::cos(alpha), std::sinh(rho) * std::sin(alpha), std::cosh(rho)));
}

ProjectionPlane random_lightlike_plane(std::mt19937_64& rng)
{
    const double alpha = 2.0 * std::numbers::pi * uniform01(rng);
    const double lambda = 0.5 + 1.5 * uniform01(rng);
    return ProjectionPlane::lightlike(lambda * MinkVec3d(std::cos(alpha), std::sin(alpha), 1.0));
}

} // namespace mink
