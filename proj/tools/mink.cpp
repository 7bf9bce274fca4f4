#include "mink/cli.hpp"
#include "mink/error.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <regex>
#include <string>

namespace {

void parse_grid(const std::string& text, mink::RunConfig& cfg)
{
    static const std::regex pattern(R"((\d+)[xX](\d+))");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw CLI::ValidationError("--grid", "expected NsxNt, e.g. 512x64");
    cfg.grid_s = std::stoul(m[1]);
    cfg.grid_t = std::stoul(m[2]);
}

} // namespace

int main(int argc, char** argv)
{
    mink::RunConfig cfg;
    std::string kind = "planar-circle";
    std::string grid = "512x64";

    CLI::App app{"Closed strong spacelike curves in Minkowski 3-space: generation, checks, ruled and maximal surfaces"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "write a test curve");
    gen->add_option("--kind", kind, "planar-circle | tilted-ellipse | graph-over-convex | random-fourier")->capture_default_str();
    gen->add_option("--radius", cfg.generator.radius)->capture_default_str();
    gen->add_option("--a", cfg.generator.a)->capture_default_str();
    gen->add_option("--b", cfg.generator.b)->capture_default_str();
    gen->add_option("--tilt", cfg.generator.tilt, "slope c of the tilted plane x3 = c x1")->capture_default_str();
    gen->add_option("--height-cos", cfg.generator.height_cos, "cosine coefficients of h(t)")->delimiter(',');
    gen->add_option("--height-sin", cfg.generator.height_sin, "sine coefficients of h(t)")->delimiter(',');
    gen->add_option("--harmonics", cfg.generator.harmonics)->capture_default_str();
    gen->add_option("--amplitude", cfg.generator.amplitude)->capture_default_str();
    gen->add_option("--samples", cfg.generator.samples)->capture_default_str();
    gen->add_option("--seed", cfg.seed)->capture_default_str();
    gen->add_option("-o,--output", cfg.output, "curve JSON (stdout if omitted)");

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("curve", cfg.input, "curve JSON")->required();
        sub->add_option("--samples", cfg.samples, "resample to this many points (default: as in the file)");
    };

    auto* verify = app.add_subcommand("verify", "check spacelike, strong spacelike, index, projection and section properties");
    add_input(verify);
    verify->add_option("--trials", cfg.trials, "random triples in the section check")->capture_default_str();
    verify->add_option("--planes", cfg.planes, "random planes of each kind")->capture_default_str();
    verify->add_option("--seed", cfg.seed)->capture_default_str();
    verify->add_option("--report,-o", cfg.report, "report JSON (stdout if omitted)");

    auto* curvature = app.add_subcommand("curvature", "total curvature, Fenchel margin and per-sample curvature as CSV");
    add_input(curvature);
    curvature->add_option("-o,--output", cfg.output, "CSV file (stdout if omitted)");

    auto* ruled = app.add_subcommand("ruled", "build and check the ruled spanning surface");
    add_input(ruled);
    ruled->add_option("--grid", grid, "Ns x Nt lattice nodes")->capture_default_str();
    ruled->add_option("-o,--output", cfg.output, "OBJ mesh");
    ruled->add_option("--report", cfg.report, "report JSON (stdout if omitted)");

    auto* plateau = app.add_subcommand("plateau", "solve for the maximal graph spanning the curve");
    plateau->set_help_flag("--help", "Print this help message and exit");
    add_input(plateau);
    plateau->add_option("--h", cfg.h, "target mesh size")->capture_default_str();
    plateau->add_option("--tol", cfg.tol, "stop when |dA/du| < tol")->capture_default_str();
    plateau->add_option("--max-iter", cfg.max_iter)->capture_default_str();
    plateau->add_option("--grid", grid, "lattice of the ruled initial surface")->capture_default_str();
    plateau->add_option("-o,--output", cfg.output, "OBJ mesh of the graph");
    plateau->add_option("--report", cfg.report, "report JSON (stdout if omitted)");

    auto* fuzz = app.add_subcommand("fuzz", "random curves against the full invariant suite");
    fuzz->add_option("--count", cfg.count)->capture_default_str();
    fuzz->add_option("--seed", cfg.seed)->capture_default_str();
    fuzz->add_option("--samples", cfg.samples, "points per curve (default 512)");
    fuzz->add_option("--harmonics", cfg.generator.harmonics)->capture_default_str();
    fuzz->add_option("--amplitude", cfg.generator.amplitude)->capture_default_str();
    fuzz->add_option("--trials", cfg.trials)->capture_default_str();
    fuzz->add_option("--planes", cfg.planes)->capture_default_str();
    fuzz->add_option("--grid", grid)->capture_default_str();
    fuzz->add_option("--report,-o", cfg.report, "summary JSON (stdout if omitted)");

    try {
        app.parse(argc, argv);
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.generator.kind = mink::parse_generator_kind(kind);
        parse_grid(grid, cfg);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        const nlohmann::json j = {{"error", "InvalidArgument"}, {"category", "precondition"}, {"message", e.what()}};
        std::cerr << j.dump() << "\n";
        return 2;
    }
    return mink::run(cfg, std::cout, std::cerr);
}
