#pragma once

// Command implementations behind the `mink` executable.

#include "mink/generators.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace mink {

struct RunConfig {
    /// gen, verify, curvature, ruled, plateau or fuzz
    std::string command;
    std::string input;
    std::string output;
    std::string report;

    GeneratorSpec generator;
    /// resampling size for input curves; 0 keeps the file's point count
    std::size_t samples = 0;
    std::size_t grid_s = 512;
    std::size_t grid_t = 64;
    double h = 0.05;
    double tol = 1e-8;
    int max_iter = 50;
    std::uint64_t seed = 0;
    /// random triples per curve in the section check
    std::size_t trials = 10000;
    /// random planes of each kind in the projection check
    std::size_t planes = 20;
    std::size_t count = 200;
};

/// The configuration as canonical JSON (sorted keys), as embedded in reports.
std::string config_json(const RunConfig& cfg);

/// Throws InvalidArgument if a numeric knob is not positive.
void validate(const RunConfig& cfg);

struct FuzzOutcome {
    std::string summary;
    bool ok = false;
};

/// Generates cfg.count RandomFourier curves from cfg.seed and checks the
/// invariant suite on each. The summary is deterministic for a fixed config.
FuzzOutcome run_fuzz(const RunConfig& cfg);

/// Runs one command. Reports go to cfg.report (or `out` when empty), errors to
/// `err` as JSON. Returns the process exit status: 0 success, 1 I/O failure,
/// 2 precondition violation, 3 numerical failure or fuzz invariant failure.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace mink
