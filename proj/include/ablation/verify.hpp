#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ablation {
namespace verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Suite names: params, specfun, infinite-parabolic, infinite-hyperbolic,
/// finite-spectral, fd-oracle; "all" runs everything.
std::vector<std::string> suite_names();

/// Runs one suite; results appended. Returns false on unknown suite.
bool run_suite(const std::string& name, std::vector<CheckResult>& results);

/// Prints one PASS/FAIL line per check; returns true when all passed.
bool report(std::ostream& out, const std::vector<CheckResult>& results);

} // namespace verify
} // namespace ablation
