#include "mink/cli.hpp"

#include "mink/error.hpp"
#include "mink/io.hpp"
#include "mink/lemmas.hpp"
#include "mink/parallel.hpp"
#include "mink/plateau.hpp"
#include "mink/ruled_surface.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <ostream>
#include <random>

namespace mink {

using nlohmann::json;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

json config_object(const RunConfig& cfg)
{
    json gen;
    gen["kind"] = to_string(cfg.generator.kind);
    gen["radius"] = cfg.generator.radius;
    gen["a"] = cfg.generator.a;
    gen["b"] = cfg.generator.b;
    gen["tilt"] = cfg.generator.tilt;
    gen["heightCos"] = cfg.generator.height_cos;
    gen["heightSin"] = cfg.generator.height_sin;
    gen["harmonics"] = cfg.generator.harmonics;
    gen["amplitude"] = cfg.generator.amplitude;

    json c;
    c["command"] = cfg.command;
    c["input"] = cfg.input;
    c["output"] = cfg.output;
    c["report"] = cfg.report;
    c["samples"] = cfg.samples;
    c["grid"] = {cfg.grid_s, cfg.grid_t};
    c["h"] = cfg.h;
    c["tol"] = cfg.tol;
    c["maxIter"] = cfg.max_iter;
    c["seed"] = cfg.seed;
    c["trials"] = cfg.trials;
    c["planes"] = cfg.planes;
    c["count"] = cfg.count;
    if (cfg.command == "gen") c["generator"] = gen;
    return c;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
    } else {
        write_file_atomic(path, text);
    }
}

ClosedCurve load_curve(const RunConfig& cfg)
{
    const std::vector<MinkVec3d> pts = read_curve_json(cfg.input);
    return resample_arclength(pts, cfg.samples > 0 ? cfg.samples : pts.size());
}

json strong_json(const StrongSpacelikeReport& r)
{
    return {{"ok", r.ok}, {"worstMargin", r.worst_margin}, {"worstIndex", r.worst_index},
        {"indicatrixMargin", r.indicatrix_margin}, {"criteriaAgree", r.criteria_agree}};
}

json verify_report(const RunConfig& cfg, const ClosedCurve& c)
{
    json rep;
    rep["config"] = config_object(cfg);
    rep["samples"] = c.size();
    rep["length"] = c.length();
    rep["spacelike"] = {{"ok", true}, {"minSpeedSquared", c.interpolant().min_speed_squared()}};

    const StrongSpacelikeReport strong = is_strong_spacelike(c);
    rep["strongSpacelike"] = strong_json(strong);

    bool index_one = false;
    try {
        const TangentIndicatrix ind = indicatrix(c);
        const IndexResult idx = curve_index(c);
        index_one = idx.value == 1;
        rep["index"] = {{"value", idx.value}, {"reversed", idx.reversed}, {"totalWinding", ind.total_winding},
            {"thetaMonotone", ind.theta_monotone()}, {"monotonicityViolations", ind.monotonicity_violations}};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::AmbiguousLift) throw;
        rep["index"] = {{"value", nullptr}, {"error", e.what()}};
    }

    std::mt19937_64 rng(cfg.seed);
    bool convex = true;
    bool injective = true;
    double min_turn = std::numeric_limits<double>::infinity();
    std::size_t planes = 0;
    for (std::size_t k = 0; k < cfg.planes; ++k) {
        for (const ProjectionPlane& plane : {random_spacelike_plane(rng), random_lightlike_plane(rng)}) {
            const ProjectionReport pr = check_projection_lemma(c, plane);
            convex = convex && pr.convex;
            injective = injective && pr.injective;
            min_turn = std::min(min_turn, pr.min_turn_rate);
            ++planes;
        }
    }
    rep["projectionLemma"] = {{"planes", planes}, {"convex", convex}, {"injective", injective}, {"minTurnRate", min_turn}};

    const SectionReport sec = check_section_lemma(c, cfg.trials, cfg.seed, PairSampling::Exhaustive);
    rep["sectionLemma"] = {{"ok", sec.all_ok()}, {"chordsOk", sec.chords_ok}, {"triplesOk", sec.triples_ok},
        {"chordTangentOk", sec.chord_tangent_ok}, {"worstMargin", sec.worst_margin}, {"pairsChecked", sec.pairs_checked},
        {"triplesChecked", sec.triples_checked}};
    rep["ok"] = strong.ok && index_one && convex && injective && sec.all_ok();
    return rep;
}

struct RuledSummary {
    json report;
    bool ok = false;
};

RuledSummary ruled_report(const RuledSurface& rs)
{
    const SpacelikeReport sl = verify_spacelike(rs);
    const GaussBonnetReport gb = gauss_bonnet_check(rs);
    const std::vector<BoundarySample> bs = boundary_geodesic_curvature(rs);
    double min_excess = std::numeric_limits<double>::infinity();
    double max_disagreement = 0;
    double max_angle = 0;
    for (const BoundarySample& b : bs) {
        min_excess = std::min(min_excess, b.kappa_g - b.kappa);
        max_disagreement = std::max(max_disagreement, std::abs(b.kappa_g - b.kappa_g_intrinsic) / std::max(b.kappa_g, 1e-300));
        max_angle = std::max(max_angle, b.hyperbolic_angle);
    }
    RuledSummary s;
    s.report["grid"] = {rs.grid_s(), rs.grid_t()};
    s.report["arcLength"] = rs.arc_length();
    s.report["orientation"] = rs.orientation();
    s.report["spacelike"] = {{"ok", sl.ok}, {"worstMargin", sl.worst_margin}, {"worstS", sl.worst_s},
        {"worstT", sl.worst_t}, {"minGaussK", sl.min_gauss_k}};
    s.report["gaussBonnet"] = {{"areaIntegralK", gb.area_integral_k}, {"boundaryIntegralKg", gb.boundary_integral_kg},
        {"residual", gb.residual}};
    s.report["boundary"] = {{"samples", bs.size()}, {"minKappaGMinusKappa", min_excess},
        {"maxRelativeDisagreement", max_disagreement}, {"maxHyperbolicAngle", max_angle}};
    s.ok = sl.ok && sl.min_gauss_k >= -1e-4 && min_excess >= -1e-6 && max_disagreement <= 1e-3;
    s.report["ok"] = s.ok;
    return s;
}

int command_gen(const RunConfig& cfg, std::ostream& out)
{
    GeneratorSpec spec = cfg.generator;
    spec.seed = cfg.seed;
    if (cfg.samples > 0) spec.samples = cfg.samples;
    const ClosedCurve c = generate(spec);
    emit(curve_json(c.positions()), cfg.output, out);
    return 0;
}

int command_verify(const RunConfig& cfg, std::ostream& out)
{
    const ClosedCurve c = load_curve(cfg);
    emit(dump(verify_report(cfg, c)), cfg.report.empty() ? cfg.output : cfg.report, out);
    return 0;
}

int command_curvature(const RunConfig& cfg, std::ostream& out)
{
    const ClosedCurve c = load_curve(cfg);
    const double tc = total_curvature(c);
    std::string text = "totalCurvature,fenchelMargin\n" + format_double(tc) + "," + format_double(kTwoPi - tc) + "\n\n";
    text += "index,s,kappa\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
        text += std::to_string(i) + "," + format_double(c.arc_length(i)) + "," + format_double(c.kappas()[i]) + "\n";
    }
    emit(text, cfg.output, out);
    return 0;
}

int command_ruled(const RunConfig& cfg, std::ostream& out)
{
    const ClosedCurve c = load_curve(cfg);
    const RuledSurface rs = build_ruled(c, cfg.grid_s, cfg.grid_t);
    if (!cfg.output.empty()) export_mesh(rs, cfg.output);
    RuledSummary s = ruled_report(rs);
    s.report["config"] = config_object(cfg);
    emit(dump(s.report), cfg.report, out);
    return 0;
}

int command_plateau(const RunConfig& cfg, std::ostream& out)
{
    const ClosedCurve input = load_curve(cfg);
    build_ruled(input, 3, 3);
    const ClosedCurve c = boundary_sampling(input, cfg.h);
    auto mesh = std::make_shared<const ConvexDomainMesh>(build_domain(c, cfg.h));
    dirichlet_data(c, *mesh);
    const GraphSurface g0 = initial_guess(build_ruled(c, cfg.grid_s, cfg.grid_t), mesh);
    const SolveResult res = solve_maximal(g0, cfg.tol, cfg.max_iter);
    const MaximalReport mr = verify_maximal(res.surface);
    const SecondStartReport second = compare_second_start(c, res.surface, cfg.tol, cfg.max_iter);
    if (!cfg.output.empty()) export_graph(res.surface, cfg.output);

    json rep;
    rep["config"] = config_object(cfg);
    rep["gradBound"] = mr.grad_bound;
    rep["residualNorm"] = mr.residual_norm;
    rep["areaValue"] = mr.area_value;
    rep["iterations"] = res.iterations;
    rep["converged"] = res.converged;
    rep["gradientNorm"] = res.gradient_norm;
    rep["mesh"] = {{"vertices", mesh->vertices.size()}, {"triangles", mesh->triangles.size()},
        {"boundaryVertices", mesh->boundary_count()}};
    json history = json::array();
    for (const NewtonStep& st : res.history) {
        history.push_back({{"area", st.area}, {"gradientNorm", st.gradient_norm}, {"gradBound", st.grad_bound},
            {"damping", st.damping}});
    }
    rep["history"] = history;
    rep["initialGradBound"] = g0.grad_bound;
    rep["secondStart"] = {{"start", second.start}, {"supDifference", second.sup_difference}, {"flagged", second.flagged}};
    emit(dump(rep), cfg.report, out);
    return 0;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct FuzzCase {
    std::uint64_t seed = 0;
    double total_curvature = 0;
    double gauss_bonnet = 0;
    double min_gauss_k = 0;
    double min_kg_excess = 0;
    std::vector<std::string> failures;
};

FuzzCase fuzz_one(const RunConfig& cfg, std::uint64_t seed)
{
    FuzzCase fc;
    fc.seed = seed;
    GeneratorSpec spec = cfg.generator;
    spec.kind = GeneratorKind::RandomFourier;
    spec.seed = seed;
    spec.samples = cfg.samples > 0 ? cfg.samples : 512;
    const ClosedCurve c = generate(spec);

    if (!is_strong_spacelike(c).ok) fc.failures.push_back("strong-spacelike");
    if (curve_index(c).value != 1) fc.failures.push_back("index");
    fc.total_curvature = total_curvature(c);
    if (!(fc.total_curvature <= kTwoPi + 1e-4)) fc.failures.push_back("fenchel");

    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < cfg.planes; ++k) {
        for (const ProjectionPlane& plane : {random_spacelike_plane(rng), random_lightlike_plane(rng)}) {
            const ProjectionReport pr = check_projection_lemma(c, plane);
            if (!(pr.convex && pr.injective)) {
                fc.failures.push_back(plane.kind == PlaneKind::Spacelike ? "projection-spacelike" : "projection-lightlike");
            }
        }
    }
    if (!check_section_lemma(c, cfg.trials, seed).all_ok()) fc.failures.push_back("section");

    const RuledSurface rs = build_ruled(c, cfg.grid_s, cfg.grid_t);
    const RuledSummary rsum = ruled_report(rs);
    fc.gauss_bonnet = rsum.report["gaussBonnet"]["residual"].get<double>();
    fc.min_gauss_k = rsum.report["spacelike"]["minGaussK"].get<double>();
    fc.min_kg_excess = rsum.report["boundary"]["minKappaGMinusKappa"].get<double>();
    if (!rsum.ok) fc.failures.push_back("ruled-surface");
    if (!(std::abs(fc.gauss_bonnet) < 1e-2)) fc.failures.push_back("gauss-bonnet");
    std::sort(fc.failures.begin(), fc.failures.end());
    fc.failures.erase(std::unique(fc.failures.begin(), fc.failures.end()), fc.failures.end());
    return fc;
}

int exit_code(ErrorCategory cat)
{
    switch (cat) {
    case ErrorCategory::Precondition: return 2;
    case ErrorCategory::Numerical: return 3;
    case ErrorCategory::Io: return 1;
    }
    return 1;
}

std::string category_name(ErrorCategory cat)
{
    switch (cat) {
    case ErrorCategory::Precondition: return "precondition";
    case ErrorCategory::Numerical: return "numerical";
    case ErrorCategory::Io: return "io";
    }
    return "io";
}

} // namespace

std::string config_json(const RunConfig& cfg)
{
    return config_object(cfg).dump();
}

void validate(const RunConfig& cfg)
{
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw Error(ErrorCode::InvalidArgument, what + " must be positive");
    };
    require(cfg.grid_s > 0 && cfg.grid_t > 0, "grid");
    require(cfg.h > 0 && std::isfinite(cfg.h), "h");
    require(cfg.tol > 0 && std::isfinite(cfg.tol), "tol");
    require(cfg.max_iter > 0, "max-iter");
    require(cfg.trials > 0, "trials");
    require(cfg.planes > 0, "planes");
    require(cfg.count > 0, "count");
    require(cfg.generator.samples > 0, "samples");
}

FuzzOutcome run_fuzz(const RunConfig& cfg)
{
    std::vector<FuzzCase> cases(cfg.count);
    parallel_for(cfg.count, [&](std::size_t i) { cases[i] = fuzz_one(cfg, splitmix64(cfg.seed + i)); });

    json rep;
    rep["config"] = config_object(cfg);
    double worst_margin = std::numeric_limits<double>::infinity();
    double worst_gb = 0;
    double min_k = std::numeric_limits<double>::infinity();
    double min_excess = std::numeric_limits<double>::infinity();
    std::size_t passed = 0;
    json failures = json::array();
    for (const FuzzCase& fc : cases) {
        worst_margin = std::min(worst_margin, kTwoPi - fc.total_curvature);
        worst_gb = std::max(worst_gb, std::abs(fc.gauss_bonnet));
        min_k = std::min(min_k, fc.min_gauss_k);
        min_excess = std::min(min_excess, fc.min_kg_excess);
        if (fc.failures.empty()) {
            ++passed;
        } else {
            failures.push_back({{"seed", fc.seed}, {"failed", fc.failures}});
        }
    }
    rep["count"] = cfg.count;
    rep["passed"] = passed;
    rep["failures"] = failures;
    rep["worstFenchelMargin"] = worst_margin;
    rep["worstGaussBonnetResidual"] = worst_gb;
    rep["minGaussK"] = min_k;
    rep["minKappaGMinusKappa"] = min_excess;
    rep["ok"] = passed == cfg.count;
    return {dump(rep), passed == cfg.count};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        validate(cfg);
        if (cfg.command == "gen") return command_gen(cfg, out);
        if (cfg.command == "verify") return command_verify(cfg, out);
        if (cfg.command == "curvature") return command_curvature(cfg, out);
        if (cfg.command == "ruled") return command_ruled(cfg, out);
        if (cfg.command == "plateau") return command_plateau(cfg, out);
        if (cfg.command == "fuzz") {
            const FuzzOutcome fo = run_fuzz(cfg);
            emit(fo.summary, cfg.report.empty() ? cfg.output : cfg.report, out);
            return fo.ok ? 0 : 3;
        }
        throw Error(ErrorCode::InvalidArgument, "unknown command '" + cfg.command + "'");
    } catch (const Error& e) {
        const json j = {{"error", to_string(e.code())}, {"category", category_name(e.category())}, {"message", e.what()},
            {"command", cfg.command}};
        err << j.dump() << "\n";
        return exit_code(e.category());
    } catch (const std::exception& e) {
        const json j = {{"error", "IoError"}, {"category", "io"}, {"message", e.what()}, {"command", cfg.command}};
        err << j.dump() << "\n";
        return 1;
    }
}

} // namespace mink
