#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bcm::verify {

struct SuiteResult {
    std::string suite;
    int n = 0;
    int trials = 0;
    bool passed = false;
    std::string first_failure;  // empty when passed
};

/// zb, satake, wilson, bethe-comm, dunkl, n2-golden, multisym, cm-identity.
const std::vector<std::string>& suite_names();

/// Runs one named suite.  inject_fault mutates one relation constant on the
/// computed side, which must flip the result to failure; it exists so the
/// harness itself can be tested.  Throws std::invalid_argument for an
/// unknown suite name or an unusable n.
SuiteResult run_suite(const std::string& name, int n, std::uint64_t seed, int trials,
                      bool inject_fault = false);

SuiteResult run_zb(int n, std::uint64_t seed, int trials, bool inject_fault);
SuiteResult run_satake(int n, bool inject_fault);
SuiteResult run_wilson(int n, std::uint64_t seed, int trials, bool inject_fault);
SuiteResult run_bethe_comm(int n, std::uint64_t seed, int trials, bool inject_fault);
SuiteResult run_dunkl(int n, std::uint64_t seed, int trials, bool inject_fault);
SuiteResult run_n2_golden(bool inject_fault);
SuiteResult run_multisym(int n, bool inject_fault);
SuiteResult run_cm_identity(int n, std::uint64_t seed, int trials, bool inject_fault);

}  // namespace bcm::verify
