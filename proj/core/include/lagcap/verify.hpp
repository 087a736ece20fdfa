#pragma once

// The acceptance suite: one named check per criterion, shared by the
// `verify-all` command and the acceptance test.

#include <cstdint>
#include <string>
#include <vector>

namespace lagcap {

struct VerifyOptions {
    std::uint64_t seed = 20'240'601;  // randomized sweeps
    double tol = 1e-10;               // residual tolerance for polynomial solutions
};

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Names of the checks, index i holding check i + 1.
const std::vector<std::string>& check_names();

/// Runs check `id` (1-based); exceptions become failed results with the message as detail.
CheckResult run_check(int id, const VerifyOptions& opt = {});

std::vector<CheckResult> run_all(const VerifyOptions& opt = {});

}  // namespace lagcap
