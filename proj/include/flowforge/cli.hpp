#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace flowforge::cli {

/// Exit codes: 0 yes/pass, 1 no/fail, 2 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct SuiteResult {
    bool pass = false;
    int checked = 0;
    std::string detail;  // failure description plus offending graph, when failing
};

/// Property suites behind `verify`: thm-4trees, thm-f4le3, prop-extend,
/// lemma-2sum, ltwz, density, mader, strong-z5.
SuiteResult run_suite(const std::string& name, uint64_t seed, int count);

}  // namespace flowforge::cli
