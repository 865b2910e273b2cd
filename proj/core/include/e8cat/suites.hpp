#pragma once

#include "e8cat/report.hpp"

#include <cstdio>

namespace e8cat {

/// Suite runner configuration. With a fixed seed, report content is
/// bit-identical between runs.
struct RunConfig {
    std::vector<std::string> suites{"all"};
    uint64_t seed = 1;
    bool jacobi_full = false;
    size_t jacobi_samples = 10000;
    unsigned parallel = 2;
};

struct UnknownSuite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string>& known_suites();

VerificationReport run_verify(const RunConfig& config);

/// Acceptance gate: every criterion at full strength, one line per criterion.
/// Returns a process exit code (0 = all pass).
int run_acceptance(std::FILE* out);

}  // namespace e8cat
