// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "mink/cli.hpp"
#include "mink/curve.hpp"
#include "mink/generators.hpp"
#include "mink/lemmas.hpp"
#include "mink/parallel.hpp"
#include "mink/plateau.hpp"
#include "mink/ruled_surface.hpp"

#include "test_support.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace mink;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

constexpr double kFenchelEqualityTol = 1e-6;
constexpr double kFenchelSlack = 1e-4;
constexpr double kGaussFloor = -1e-4;
constexpr double kRefinementRatio = 4.0;
constexpr double kViolationRoundoff = 1e-10;
constexpr double kGaussBonnetTol = 1e-3;
constexpr double kGaussBonnetOrder = 2.0;
constexpr double kKappaSlack = 1e-6;
constexpr double kRouteAgreement = 1e-3;
constexpr double kPlaneExactness = 1e-12;
constexpr double kResidualOrder = 1.0;
constexpr double kGradientRelTol = 1e-6;
constexpr double kSolverTol = 1e-8;
constexpr int kSolverMaxIter = 50;
constexpr std::size_t kSeededCurves = 50;

struct Verdict {
    bool pass = true;
    std::string detail;
};

ClosedCurve seeded(std::uint64_t seed)
{
    GeneratorSpec spec;
    spec.kind = GeneratorKind::RandomFourier;
    spec.seed = seed;
    return generate(spec);
}

std::vector<ClosedCurve> seeded_curves()
{
    std::vector<ClosedCurve> curves;
    for (std::uint64_t s = 1; s <= kSeededCurves; ++s) curves.push_back(seeded(s));
    return curves;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Verdict fenchel_equality()
{
    const ClosedCurve circle = resample_arclength(mink::testing::planar_ellipse(1, 1), 1024);
    const ClosedCurve ellipse = resample_arclength(mink::testing::planar_ellipse(2, 1), 1024);
    const double e1 = std::abs(total_curvature(circle) - kTwoPi);
    const double e2 = std::abs(total_curvature(ellipse) - kTwoPi);
    return {e1 < kFenchelEqualityTol && e2 < kFenchelEqualityTol, fmt("circle %.2e, ellipse %.2e", e1, e2)};
}

Verdict reversed_fenchel()
{
    bool ok = true;
    double worst = -1e300;
    for (std::uint64_t s = 0; s < 200; ++s) {
        const ClosedCurve c = seeded(s);
        ok = ok && is_strong_spacelike(c).ok && curve_index(c).value == 1;
        const double tc = total_curvature(c);
        worst = std::max(worst, tc - kTwoPi);
        ok = ok && tc <= kTwoPi + kFenchelSlack;
    }
    double prev = kTwoPi;
    for (double eps : {0.05, 0.1, 0.2}) {
        const double tc = total_curvature(equality_gap_family(eps));
        ok = ok && tc < kTwoPi && tc < prev;
        prev = tc;
    }
    return {ok, fmt("max TC - 2pi over 200 curves %.3e", worst)};
}

Verdict projection_lemma(const std::vector<ClosedCurve>& curves)
{
    std::vector<int> good(curves.size(), 0);
    parallel_for(curves.size(), [&](std::size_t i) {
        std::mt19937_64 rng(1000 + i);
        bool ok = true;
        for (int k = 0; k < 20; ++k) {
            const ProjectionReport a = check_projection_lemma(curves[i], random_spacelike_plane(rng));
            const ProjectionReport b = check_projection_lemma(curves[i], random_lightlike_plane(rng));
            ok = ok && a.convex && a.injective && b.convex && b.injective;
        }
        good[i] = ok;
    });
    const auto n = std::count(good.begin(), good.end(), 1);
    return {n == static_cast<long>(curves.size()), fmt("%.0f of %.0f curves", static_cast<double>(n), static_cast<double>(curves.size()))};
}

Verdict section_lemma(const std::vector<ClosedCurve>& curves)
{
    std::vector<int> good(curves.size(), 0);
    parallel_for(curves.size(), [&](std::size_t i) {
        const SectionReport r = check_section_lemma(curves[i], 10000, 2000 + i, PairSampling::Exhaustive);
        good[i] = r.all_ok() && r.triples_checked == 10000;
    });
    const auto n = std::count(good.begin(), good.end(), 1);
    return {n == static_cast<long>(curves.size()), fmt("%.0f of %.0f curves", static_cast<double>(n), static_cast<double>(curves.size()))};
}

double violation(const SpacelikeReport& r)
{
    return std::max(0.0, -r.min_gauss_k);
}

Verdict ruled_spacelike(const std::vector<ClosedCurve>& curves)
{
    std::vector<int> good(curves.size(), 0);
    std::vector<double> min_k(curves.size(), 0);
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const SpacelikeReport a = verify_spacelike(build_ruled(curves[i], 512, 64));
        const SpacelikeReport b = verify_spacelike(build_ruled(curves[i], 1024, 128));
        const double va = violation(a), vb = violation(b);
        min_k[i] = a.min_gauss_k;
        good[i] = a.ok && a.min_gauss_k >= kGaussFloor && (vb <= va / kRefinementRatio || vb <= kViolationRoundoff);
    }
    const auto n = std::count(good.begin(), good.end(), 1);
    return {n == static_cast<long>(curves.size()),
        fmt("%.0f of 50 curves, min gaussK %.3e", static_cast<double>(n), *std::min_element(min_k.begin(), min_k.end()))};
}

Verdict gauss_bonnet(const std::vector<ClosedCurve>& curves)
{
    double worst = 0;
    for (const ClosedCurve& c : curves) worst = std::max(worst, std::abs(gauss_bonnet_check(build_ruled(c, 512, 64)).residual));
    double min_order = 1e300;
    std::string orders;
    for (std::size_t i = 0; i < 5; ++i) {
        const double r1 = std::abs(gauss_bonnet_check(build_ruled(curves[i], 257, 33)).residual);
        const double r2 = std::abs(gauss_bonnet_check(build_ruled(curves[i], 513, 65)).residual);
        min_order = std::min(min_order, std::log2(r1 / r2));
        orders += fmt(" %.4f", std::log2(r1 / r2));
    }
    return {worst < kGaussBonnetTol && min_order >= kGaussBonnetOrder,
        fmt("max |residual| %.3e, orders", worst) + orders};
}

Verdict boundary_curvature(const std::vector<ClosedCurve>& curves)
{
    double min_excess = 1e300, max_rel = 0;
    for (const ClosedCurve& c : curves) {
        for (const BoundarySample& b : boundary_geodesic_curvature(build_ruled(c, 512, 64))) {
            min_excess = std::min(min_excess, b.kappa_g - b.kappa);
            max_rel = std::max(max_rel, std::abs(b.kappa_g_intrinsic - b.kappa_g) / b.kappa_g);
        }
    }
    return {min_excess >= -kKappaSlack && max_rel <= kRouteAgreement,
        fmt("min kappa_g - kappa %.3e, max route disagreement %.3e", min_excess, max_rel)};
}

double plateau_error(const ClosedCurve& c, const std::function<double(const Vec2d&)>& exact)
{
    const ClosedCurve b = boundary_sampling(c, 0.1);
    const auto mesh = std::make_shared<const ConvexDomainMesh>(build_domain(b, 0.1));
    const SolveResult r = solve_maximal(initial_guess(build_ruled(b, 512, 64), mesh), kSolverTol, kSolverMaxIter);
    double err = 0;
    for (std::size_t i = 0; i < mesh->vertices.size(); ++i) {
        err = std::max(err, std::abs(r.surface.u(static_cast<Eigen::Index>(i)) - exact(mesh->vertices[i])));
    }
    return err;
}

Verdict plateau_planes()
{
    GeneratorSpec circle;
    circle.samples = 1024;
    GeneratorSpec tilt;
    tilt.kind = GeneratorKind::TiltedEllipse;
    tilt.a = 1.5;
    tilt.tilt = 0.5;
    tilt.samples = 1024;
    const double e1 = plateau_error(generate(circle), [](const Vec2d&) { return 0.0; });
    const double e2 = plateau_error(generate(tilt), [](const Vec2d& p) { return 0.5 * p(0); });
    return {e1 < kPlaneExactness && e2 < kPlaneExactness, fmt("circle %.2e, tilted %.2e", e1, e2)};
}

Verdict plateau_nonplanar()
{
    GeneratorSpec spec;
    spec.kind = GeneratorKind::RandomFourier;
    spec.seed = 42;
    spec.amplitude = 0.15;
    const ClosedCurve c = generate(spec);
    bool ok = true;
    std::vector<double> residuals;
    for (double h : {0.1, 0.05, 0.025}) {
        const ClosedCurve b = boundary_sampling(c, h);
        const auto mesh = std::make_shared<const ConvexDomainMesh>(build_domain(b, h));
        const SolveResult r = solve_maximal(initial_guess(build_ruled(b, 512, 64), mesh), kSolverTol, kSolverMaxIter);
        ok = ok && r.converged;
        for (std::size_t k = 0; k < r.history.size(); ++k) {
            ok = ok && r.history[k].grad_bound < 1;
            if (k > 0) ok = ok && r.history[k].area >= r.history[k - 1].area;
        }
        residuals.push_back(r.residual_norm);
    }
    const double o1 = std::log2(residuals[0] / residuals[1]);
    const double o2 = std::log2(residuals[1] / residuals[2]);
    ok = ok && o1 >= kResidualOrder && o2 >= kResidualOrder;
    return {ok, fmt("residuals %.3e -> %.3e -> %.3e", residuals[0], residuals[1], residuals[2]) +
                    fmt(", orders %.2f %.2f", o1, o2)};
}

Verdict area_gradient_check()
{
    GeneratorSpec spec;
    spec.kind = GeneratorKind::RandomFourier;
    spec.seed = 42;
    const ClosedCurve b = boundary_sampling(generate(spec), 0.1);
    const auto mesh = std::make_shared<const ConvexDomainMesh>(build_domain(b, 0.1));
    const GraphSurface g = initial_guess(build_ruled(b, 512, 64), mesh);
    const Eigen::VectorXd grad = area_gradient(*mesh, g.u);
    std::mt19937_64 rng(10);
    std::normal_distribution<double> normal;
    const double step = 1e-5;
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
        Eigen::VectorXd d(g.u.size());
        for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = mesh->boundary_flags[static_cast<std::size_t>(i)] ? 0.0 : normal(rng);
        d /= d.norm();
        const double fd = (spacelike_area(*mesh, g.u + step * d) - spacelike_area(*mesh, g.u - step * d)) / (2 * step);
        const double exact = grad.dot(d);
        worst = std::max(worst, std::abs(fd - exact) / std::abs(exact));
    }
    std::uniform_int_distribution<std::size_t> vertex(mesh->boundary_count(), mesh->vertices.size() - 1);
    for (int k = 0; k < 20; ++k) {
        const auto i = static_cast<Eigen::Index>(vertex(rng));
        Eigen::VectorXd up = g.u, um = g.u;
        up(i) += step;
        um(i) -= step;
        const double fd = (spacelike_area(*mesh, up) - spacelike_area(*mesh, um)) / (2 * step);
        worst = std::max(worst, std::abs(fd - grad(i)) / std::abs(grad(i)));
    }
    return {worst < kGradientRelTol, fmt("max relative error %.3e", worst)};
}

Verdict fuzz_determinism()
{
    RunConfig cfg;
    cfg.command = "fuzz";
    cfg.count = 50;
    cfg.seed = 7;
    const FuzzOutcome a = run_fuzz(cfg);
    const FuzzOutcome b = run_fuzz(cfg);
    return {a.summary == b.summary && !a.summary.empty(), a.ok ? "identical, all invariants hold" : "identical, invariant failures"};
}

} // namespace

int main()
{
    const std::vector<ClosedCurve> curves = seeded_curves();
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"fenchel equality on planar convex curves", fenchel_equality},
        {"reversed fenchel inequality", reversed_fenchel},
        {"projection lemma", [&] { return projection_lemma(curves); }},
        {"section lemma", [&] { return section_lemma(curves); }},
        {"ruled surface spacelike with K >= 0", [&] { return ruled_spacelike(curves); }},
        {"gauss-bonnet balance", [&] { return gauss_bonnet(curves); }},
        {"boundary curvature inequality", [&] { return boundary_curvature(curves); }},
        {"plateau exact on planes", plateau_planes},
        {"plateau on nonplanar data", plateau_nonplanar},
        {"area gradient vs finite differences", area_gradient_check},
        {"fuzz determinism", fuzz_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %2zu %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str(), secs);
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
