#include "mink/plateau.hpp"

#include "mink/delaunay.hpp"
#include "mink/error.hpp"
#include "mink/io.hpp"
#include "mink/parallel.hpp"
#include "mink/predicates.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

namespace mink {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct TriGeom {
    double area = 0;
    std::array<Vec2d, 3> grad;
};

std::vector<TriGeom> geometry(const ConvexDomainMesh& mesh)
{
    std::vector<TriGeom> out(mesh.triangles.size());
    for (std::size_t t = 0; t < out.size(); ++t) {
        const auto& v = mesh.triangles[t];
        const Vec2d& a = mesh.vertices[v[0]];
        const Vec2d& b = mesh.vertices[v[1]];
        const Vec2d& c = mesh.vertices[v[2]];
        const double twice = (b - a).x() * (c - a).y() - (b - a).y() * (c - a).x();
        out[t].area = twice / 2;
        out[t].grad[0] = Vec2d(b.y() - c.y(), c.x() - b.x()) / twice;
        out[t].grad[1] = Vec2d(c.y() - a.y(), a.x() - c.x()) / twice;
        out[t].grad[2] = Vec2d(a.y() - b.y(), b.x() - a.x()) / twice;
    }
    return out;
}

Vec2d gradient_on(const TriGeom& g, const std::array<int, 3>& v, const Eigen::VectorXd& u)
{
    return u[v[0]] * g.grad[0] + u[v[1]] * g.grad[1] + u[v[2]] * g.grad[2];
}

class NeumaierSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0;
    double comp_ = 0;
};

double distance_to_segment(const Vec2d& p, const Vec2d& a, const Vec2d& b)
{
    const Vec2d d = b - a;
    const double t = std::clamp((p - a).dot(d) / d.squaredNorm(), 0.0, 1.0);
    return (p - a - t * d).norm();
}

double distance_to_polygon(const Vec2d& p, const std::vector<Vec2d>& poly)
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) best = std::min(best, distance_to_segment(p, poly[i], poly[(i + 1) % poly.size()]));
    return best;
}

bool strictly_inside(const Vec2d& p, const std::vector<Vec2d>& poly, int inward)
{
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (orient2d(poly[i], poly[(i + 1) % poly.size()], p) != inward) return false;
    }
    return true;
}

double cross2(const Vec2d& a, const Vec2d& b)
{
    return a.x() * b.y() - a.y() * b.x();
}

Vec2d planar(const MinkVec3d& x)
{
    return Vec2d(x(0), x(1));
}

std::vector<int> interior_numbering(const ConvexDomainMesh& mesh, int& count)
{
    std::vector<int> dof(mesh.vertices.size(), -1);
    count = 0;
    for (std::size_t i = 0; i < dof.size(); ++i) {
        if (!mesh.boundary_flags[i]) dof[i] = count++;
    }
    return dof;
}

} // namespace

ClosedCurve boundary_sampling(const ClosedCurve& c, double h)
{
    if (!(h > 0) || !std::isfinite(h)) throw Error(ErrorCode::InvalidArgument, "mesh size must be positive");
    const auto& pts = c.positions();
    double perimeter = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) perimeter += (planar(pts[(i + 1) % pts.size()]) - planar(pts[i])).norm();
    const auto n = static_cast<std::size_t>(std::max(8.0, std::ceil(perimeter / h)));
    return c.resampled(n);
}

ConvexDomainMesh build_domain(const ClosedCurve& c, double h)
{
    if (!(h > 0) || !std::isfinite(h)) throw Error(ErrorCode::InvalidArgument, "mesh size must be positive");
    ConvexDomainMesh mesh;
    mesh.target_h = h;
    for (const auto& x : c.positions()) {
        mesh.boundary_polygon.push_back(planar(x));
        mesh.boundary_heights.push_back(x(2));
    }
    const auto& poly = mesh.boundary_polygon;
    ConvexDelaunay dt(poly);
    const int inward = orient2d(poly[0], poly[1], poly[2]);

    Vec2d lo = poly.front();
    Vec2d hi = poly.front();
    Vec2d centroid = Vec2d::Zero();
    for (const Vec2d& p : poly) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
        centroid += p;
    }
    centroid /= static_cast<double>(poly.size());

    const double row = h * std::sqrt(3.0) / 2;
    const int jmin = static_cast<int>(std::floor((lo.y() - centroid.y()) / row)) - 1;
    const int jmax = static_cast<int>(std::ceil((hi.y() - centroid.y()) / row)) + 1;
    const int imin = static_cast<int>(std::floor((lo.x() - centroid.x()) / h)) - 1;
    const int imax = static_cast<int>(std::ceil((hi.x() - centroid.x()) / h)) + 1;
    for (int j = jmin; j <= jmax; ++j) {
        const double shift = (j % 2 != 0) ? 0.5 : 0.0;
        for (int i = imin; i <= imax; ++i) {
            const Vec2d p = centroid + Vec2d((i + shift) * h, j * row);
            if (!strictly_inside(p, poly, inward)) continue;
            if (distance_to_polygon(p, poly) < 0.55 * h) continue;
            dt.insert(p);
        }
    }

    for (int pass = 0; pass < 6; ++pass) {
        std::vector<Vec2d> accepted;
        for (std::size_t t = 0; t < dt.triangle_count(); ++t) {
            if (dt.circumradius(t) <= 0.8 * h) continue;
            const Vec2d cc = dt.circumcenter(t);
            if (!strictly_inside(cc, poly, inward) || distance_to_polygon(cc, poly) < 0.4 * h) continue;
            const bool crowded = std::any_of(accepted.begin(), accepted.end(), [&](const Vec2d& q) { return (q - cc).norm() < 0.5 * h; });
            if (!crowded) accepted.push_back(cc);
        }
        if (accepted.empty()) break;
        for (const Vec2d& p : accepted) dt.insert(p);
    }

    mesh.vertices = dt.points();
    mesh.triangles = dt.triangles();
    mesh.boundary_flags.assign(mesh.vertices.size(), false);
    std::fill_n(mesh.boundary_flags.begin(), poly.size(), true);
    return mesh;
}

ConvexDomainMesh make_domain_mesh(std::vector<Vec2d> vertices, std::vector<std::array<int, 3>> triangles,
    std::size_t boundary_count, std::vector<double> boundary_heights)
{
    if (boundary_count < 3 || boundary_count > vertices.size() || boundary_heights.size() != boundary_count) {
        throw Error(ErrorCode::InvalidArgument, "inconsistent boundary description");
    }
    std::map<std::pair<int, int>, int> edges;
    const int nv = static_cast<int>(vertices.size());
    for (const auto& t : triangles) {
        for (int i = 0; i < 3; ++i) {
            if (t[i] < 0 || t[i] >= nv) throw Error(ErrorCode::InvalidArgument, "triangle index out of range");
        }
        if (orient2d(vertices[t[0]], vertices[t[1]], vertices[t[2]]) <= 0) {
            throw Error(ErrorCode::InvalidArgument, "triangle is not counterclockwise");
        }
        for (int i = 0; i < 3; ++i) {
            if (++edges[{t[i], t[(i + 1) % 3]}] > 1) throw Error(ErrorCode::InvalidArgument, "nonconforming edge");
        }
    }
    std::size_t hull_edges = 0;
    for (const auto& [e, count] : edges) {
        if (edges.count({e.second, e.first})) continue;
        const auto b = static_cast<std::size_t>(boundary_count);
        const auto a0 = static_cast<std::size_t>(e.first);
        const auto a1 = static_cast<std::size_t>(e.second);
        if (a0 >= b || a1 >= b || !((a0 + 1) % b == a1 || (a1 + 1) % b == a0)) {
            throw Error(ErrorCode::InvalidArgument, "open edge away from the boundary polygon");
        }
        ++hull_edges;
    }
    if (hull_edges != boundary_count) throw Error(ErrorCode::InvalidArgument, "boundary polygon is not covered");

    ConvexDomainMesh mesh;
    mesh.boundary_polygon.assign(vertices.begin(), vertices.begin() + static_cast<std::ptrdiff_t>(boundary_count));
    if (!strictly_convex(mesh.boundary_polygon)) throw Error(ErrorCode::NonConvexProjection, "boundary polygon is not strictly convex");
    mesh.boundary_heights = std::move(boundary_heights);
    mesh.vertices = std::move(vertices);
    mesh.triangles = std::move(triangles);
    mesh.boundary_flags.assign(mesh.vertices.size(), false);
    std::fill_n(mesh.boundary_flags.begin(), boundary_count, true);
    return mesh;
}

std::vector<double> dirichlet_data(const ClosedCurve& c, const ConvexDomainMesh& mesh)
{
    if (c.size() != mesh.boundary_count()) {
        throw Error(ErrorCode::CorrespondenceMismatch, "curve has " + std::to_string(c.size()) + " samples, mesh boundary has "
                + std::to_string(mesh.boundary_count()) + " vertices");
    }
    std::vector<double> heights(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const MinkVec3d& x = c.positions()[i];
        const Vec2d& b = mesh.vertices[i];
        if ((planar(x) - b).norm() > 1e-12 * (1 + b.norm())) {
            throw Error(ErrorCode::CorrespondenceMismatch, "boundary vertex " + std::to_string(i) + " is not the projected sample");
        }
        heights[i] = x(2);
    }
    return heights;
}

std::vector<Vec2d> triangle_gradients(const ConvexDomainMesh& mesh, const Eigen::VectorXd& u)
{
    const std::vector<TriGeom> geo = geometry(mesh);
    std::vector<Vec2d> out(geo.size());
    for (std::size_t t = 0; t < geo.size(); ++t) out[t] = gradient_on(geo[t], mesh.triangles[t], u);
    return out;
}

double gradient_bound(const ConvexDomainMesh& mesh, const Eigen::VectorXd& u)
{
    double bound = 0;
    for (const Vec2d& g : triangle_gradients(mesh, u)) bound = std::max(bound, g.norm());
    return bound;
}

GraphSurface zero_extension(std::shared_ptr<const ConvexDomainMesh> mesh)
{
    GraphSurface g;
    g.u = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(mesh->vertices.size()));
    for (std::size_t i = 0; i < mesh->boundary_count(); ++i) g.u[static_cast<Eigen::Index>(i)] = mesh->boundary_heights[i];
    g.grad_bound = gradient_bound(*mesh, g.u);
    g.mesh = std::move(mesh);
    return g;
}

GraphSurface initial_guess(const RuledSurface& rs, std::shared_ptr<const ConvexDomainMesh> mesh)
{
    const std::size_t ns = rs.grid_s();
    const double len = rs.arc_length();
    const auto& r0 = rs.grid_gamma0();
    const auto& r1 = rs.grid_gamma1();

    auto side_at = [&](double s) {
        const Vec2d a = planar(rs.gamma0(s).position);
        const Vec2d b = planar(rs.gamma1(s).position);
        return std::pair{a, b};
    };

    Eigen::VectorXd u = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(mesh->vertices.size()));
    for (std::size_t i = 0; i < mesh->boundary_count(); ++i) u[static_cast<Eigen::Index>(i)] = mesh->boundary_heights[i];

    parallel_for(mesh->vertices.size(), [&](std::size_t vi) {
        if (mesh->boundary_flags[vi]) return;
        const Vec2d& p = mesh->vertices[vi];
        auto f_of = [&](const Vec2d& a, const Vec2d& b) { return cross2(b - a, p - a); };

        std::vector<double> f(ns, 0.0);
        for (std::size_t j = 1; j + 1 < ns; ++j) f[j] = f_of(planar(r0[j].position), planar(r1[j].position));

        double lo = 0, hi = 0, flo = 0, fhi = 0;
        bool bracketed = false;
        for (std::size_t j = 1; j + 2 < ns && !bracketed; ++j) {
            if (f[j] == 0 || (f[j] > 0) != (f[j + 1] > 0)) {
                lo = rs.node_s(j);
                hi = rs.node_s(j + 1);
                flo = f[j];
                fhi = f[j + 1];
                bracketed = true;
            }
        }
        if (!bracketed) {
            const double eps = 1e-7 * rs.step_s();
            const double sigma = f[1];
            auto [a0, b0] = side_at(eps);
            auto [a1, b1] = side_at(len - eps);
            const double f_start = f_of(a0, b0);
            const double f_end = f_of(a1, b1);
            if ((f_start > 0) != (sigma > 0)) {
                lo = eps, hi = rs.node_s(1), flo = f_start, fhi = f[1];
                bracketed = true;
            } else if ((f_end > 0) != (sigma > 0)) {
                lo = rs.node_s(ns - 2), hi = len - eps, flo = f[ns - 2], fhi = f_end;
                bracketed = true;
            }
        }
        if (!bracketed) {
            throw Error(ErrorCode::LookupMiss, "vertex (" + std::to_string(p.x()) + ", " + std::to_string(p.y())
                    + ") is outside the ruled surface footprint");
        }

        // Illinois variant of regula falsi.
        double s = lo;
        int stale = 0;
        for (int it = 0; it < 200 && flo != 0; ++it) {
            if (fhi == 0) {
                s = hi;
                break;
            }
            s = (lo * fhi - hi * flo) / (fhi - flo);
            if (!(s > lo && s < hi)) s = 0.5 * (lo + hi);
            auto [a, b] = side_at(s);
            const double fs = f_of(a, b);
            if (fs == 0 || hi - lo < 1e-14 * len) break;
            if ((fs > 0) == (flo > 0)) {
                lo = s, flo = fs;
                if (stale == -1) fhi /= 2;
                stale = -1;
            } else {
                hi = s, fhi = fs;
                if (stale == 1) flo /= 2;
                stale = 1;
            }
        }

        const CurvePoint g0 = rs.gamma0(s);
        const CurvePoint g1 = rs.gamma1(s);
        const Vec2d a = planar(g0.position);
        const Vec2d v = planar(g1.position) - a;
        const double t = (p - a).dot(v) / v.squaredNorm();
        const double offset = std::abs(cross2(v, p - a)) / v.norm();
        if (t < -1e-9 || t > 1 + 1e-9 || offset > 1e-9) {
            throw Error(ErrorCode::LookupMiss, "no ruling passes through vertex " + std::to_string(vi));
        }
        const double tc = std::clamp(t, 0.0, 1.0);
        u[static_cast<Eigen::Index>(vi)] = (1 - tc) * g0.position(2) + tc * g1.position(2);
    });

    GraphSurface g;
    g.u = std::move(u);
    g.grad_bound = gradient_bound(*mesh, g.u);
    g.mesh = std::move(mesh);
    if (!(g.grad_bound < 1)) {
        throw Error(ErrorCode::GradientBlowup, "initial guess has |Du| = " + std::to_string(g.grad_bound));
    }
    return g;
}

double spacelike_area(const ConvexDomainMesh& mesh, const Eigen::VectorXd& u)
{
    const std::vector<TriGeom> geo = geometry(mesh);
    NeumaierSum sum;
    for (std::size_t t = 0; t < geo.size(); ++t) {
        const double q = gradient_on(geo[t], mesh.triangles[t], u).squaredNorm();
        if (!(q < 1)) return kNaN;
        sum.add(geo[t].area * std::sqrt(1 - q));
    }
    return sum.value();
}

Eigen::VectorXd area_gradient(const ConvexDomainMesh& mesh, const Eigen::VectorXd& u)
{
    const std::vector<TriGeom> geo = geometry(mesh);
    Eigen::VectorXd g = Eigen::VectorXd::Zero(u.size());
    for (std::size_t t = 0; t < geo.size(); ++t) {
        const auto& v = mesh.triangles[t];
        const Vec2d du = gradient_on(geo[t], v, u);
        const double w = std::sqrt(1 - du.squaredNorm());
        for (int a = 0; a < 3; ++a) g[v[a]] -= geo[t].area * du.dot(geo[t].grad[a]) / w;
    }
    for (std::size_t i = 0; i < mesh.boundary_count(); ++i) g[static_cast<Eigen::Index>(i)] = 0;
    return g;
}

Eigen::VectorXd mean_curvature_residual(const ConvexDomainMesh& mesh, const Eigen::VectorXd& u)
{
    const std::vector<TriGeom> geo = geometry(mesh);
    const std::size_t nv = mesh.vertices.size();
    std::vector<Vec2d> flux(nv, Vec2d::Zero());
    std::vector<double> weight(nv, 0.0);
    std::vector<Vec2d> tri_flux(geo.size());
    for (std::size_t t = 0; t < geo.size(); ++t) {
        const auto& v = mesh.triangles[t];
        const Vec2d du = gradient_on(geo[t], v, u);
        tri_flux[t] = du / std::sqrt(1 - du.squaredNorm());
        for (int a = 0; a < 3; ++a) {
            flux[v[a]] += geo[t].area * tri_flux[t];
            weight[v[a]] += geo[t].area;
        }
    }
    for (std::size_t i = 0; i < nv; ++i) flux[i] /= weight[i];

    Eigen::VectorXd r = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(nv));
    for (std::size_t t = 0; t < geo.size(); ++t) {
        const auto& v = mesh.triangles[t];
        double div = 0;
        for (int a = 0; a < 3; ++a) div += flux[v[a]].dot(geo[t].grad[a]);
        for (int a = 0; a < 3; ++a) r[v[a]] += geo[t].area * div;
    }
    for (std::size_t i = 0; i < nv; ++i) {
        r[static_cast<Eigen::Index>(i)] = mesh.boundary_flags[i] ? 0.0 : r[static_cast<Eigen::Index>(i)] / weight[i];
    }
    return r;
}

double residual_norm(const ConvexDomainMesh& mesh, const Eigen::VectorXd& u)
{
    const Eigen::VectorXd r = mean_curvature_residual(mesh, u);
    const std::vector<TriGeom> geo = geometry(mesh);
    int ndof = 0;
    const std::vector<int> dof = interior_numbering(mesh, ndof);
    if (ndof == 0) return 0;

    Eigen::VectorXd load = Eigen::VectorXd::Zero(ndof);
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(9 * geo.size());
    for (std::size_t t = 0; t < geo.size(); ++t) {
        const auto& v = mesh.triangles[t];
        for (int a = 0; a < 3; ++a) {
            if (dof[v[a]] < 0) continue;
            load[dof[v[a]]] += geo[t].area / 3 * r[v[a]];
            for (int b = 0; b < 3; ++b) {
                if (dof[v[b]] >= 0) triplets.emplace_back(dof[v[a]], dof[v[b]], geo[t].area * geo[t].grad[a].dot(geo[t].grad[b]));
            }
        }
    }
    Eigen::SparseMatrix<double> stiffness(ndof, ndof);
    stiffness.setFromTriplets(triplets.begin(), triplets.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(stiffness);
    if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "Laplacian factorization failed");
    return std::sqrt(std::max(0.0, load.dot(solver.solve(load))));
}

SolveResult solve_maximal(const GraphSurface& g0, double tol, int max_iter)
{
    if (!g0.mesh) throw Error(ErrorCode::InvalidArgument, "graph has no mesh");
    if (!(tol > 0) || max_iter < 0) throw Error(ErrorCode::InvalidArgument, "tol must be positive and maxIter non-negative");
    const ConvexDomainMesh& mesh = *g0.mesh;
    const std::vector<TriGeom> geo = geometry(mesh);
    int ndof = 0;
    const std::vector<int> dof = interior_numbering(mesh, ndof);

    Eigen::VectorXd u = g0.u;
    double bound = gradient_bound(mesh, u);
    if (!(bound < 1)) throw Error(ErrorCode::GradientBlowup, "starting graph is not spacelike");

    SolveResult result;
    for (int k = 0;; ++k) {
        const double area = spacelike_area(mesh, u);
        const Eigen::VectorXd grad_full = area_gradient(mesh, u);
        Eigen::VectorXd rhs(ndof);
        for (std::size_t i = 0; i < dof.size(); ++i) {
            if (dof[i] >= 0) rhs[dof[i]] = grad_full[static_cast<Eigen::Index>(i)];
        }
        const double gnorm = rhs.norm();
        result.history.push_back({area, gnorm, bound, 0.0});
        result.gradient_norm = gnorm;
        if (gnorm < tol) {
            result.converged = true;
            result.iterations = k + 1;
            break;
        }
        if (k == max_iter) {
            throw Error(ErrorCode::NoConvergence, "no convergence after " + std::to_string(max_iter)
                    + " Newton steps, gradient norm " + std::to_string(gnorm));
        }

        std::vector<std::array<double, 9>> local(geo.size());
        parallel_for(geo.size(), [&](std::size_t t) {
            const auto& v = mesh.triangles[t];
            const Vec2d du = gradient_on(geo[t], v, u);
            const double w = std::sqrt(1 - du.squaredNorm());
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) {
                    local[t][3 * a + b] = geo[t].area
                        * (geo[t].grad[a].dot(geo[t].grad[b]) / w
                            + du.dot(geo[t].grad[a]) * du.dot(geo[t].grad[b]) / (w * w * w));
                }
            }
        });
        std::vector<Eigen::Triplet<double>> triplets;
        triplets.reserve(9 * geo.size());
        for (std::size_t t = 0; t < geo.size(); ++t) {
            const auto& v = mesh.triangles[t];
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) {
                    if (dof[v[a]] >= 0 && dof[v[b]] >= 0) triplets.emplace_back(dof[v[a]], dof[v[b]], local[t][3 * a + b]);
                }
            }
        }
        Eigen::SparseMatrix<double> neg_hessian(ndof, ndof);
        neg_hessian.setFromTriplets(triplets.begin(), triplets.end());
        Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(neg_hessian);
        if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "Newton system factorization failed");
        const Eigen::VectorXd delta = solver.solve(rhs);

        double alpha = 1;
        bool accepted = false;
        bool hit_bound = false;
        for (int halving = 0; halving < 60; ++halving, alpha /= 2) {
            Eigen::VectorXd trial = u;
            for (std::size_t i = 0; i < dof.size(); ++i) {
                if (dof[i] >= 0) trial[static_cast<Eigen::Index>(i)] += alpha * delta[dof[i]];
            }
            const double trial_bound = gradient_bound(mesh, trial);
            if (trial_bound > 1 - kGradientSafety) {
                hit_bound = true;
                continue;
            }
            if (!(spacelike_area(mesh, trial) >= area)) continue;
            u = std::move(trial);
            bound = trial_bound;
            accepted = true;
            break;
        }
        if (!accepted) {
            if (hit_bound) throw Error(ErrorCode::GradientBlowup, "line search cannot keep |Du| below 1");
            throw Error(ErrorCode::NoConvergence, "line search stalled at gradient norm " + std::to_string(gnorm));
        }
        result.history.back().damping = alpha;
    }

    result.surface.mesh = g0.mesh;
    result.surface.u = std::move(u);
    result.surface.grad_bound = bound;
    result.residual_norm = residual_norm(mesh, result.surface.u);
    return result;
}

MaximalReport verify_maximal(const GraphSurface& g)
{
    MaximalReport r;
    r.grad_bound = gradient_bound(*g.mesh, g.u);
    r.residual_norm = residual_norm(*g.mesh, g.u);
    r.area_value = spacelike_area(*g.mesh, g.u);
    return r;
}

SecondStartReport compare_second_start(const ClosedCurve& c, const GraphSurface& solved, double tol, int max_iter)
{
    SecondStartReport report;
    GraphSurface start = zero_extension(solved.mesh);
    report.start = "zero-extension";
    if (start.grad_bound > 1 - kGradientSafety) {
        start = initial_guess(build_ruled(c, 512, 64, c.length() / 4), solved.mesh);
        report.start = "rotated-ruled";
    }
    const SolveResult second = solve_maximal(start, tol, max_iter);
    report.sup_difference = (second.surface.u - solved.u).lpNorm<Eigen::Infinity>();
    report.flagged = report.sup_difference > 1e-6;
    return report;
}

void export_graph(const GraphSurface& g, const std::string& path)
{
    ObjMesh obj;
    obj.vertices.reserve(g.mesh->vertices.size());
    for (std::size_t i = 0; i < g.mesh->vertices.size(); ++i) {
        const Vec2d& p = g.mesh->vertices[i];
        obj.vertices.emplace_back(p.x(), p.y(), g.u[static_cast<Eigen::Index>(i)]);
    }
    obj.faces = g.mesh->triangles;
    write_obj(path, obj);
}

} // namespace mink
