#pragma once

// Invariant suites driven by `copart verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace copart {

struct SuiteReport {
    std::string name;
    std::uint64_t checks = 0;
    /// Set when a check failed; the suite stops at the first failure.
    std::optional<std::string> counterexample;

    bool passed() const { return !counterexample.has_value(); }
};

struct VerifyBounds {
    unsigned k_max = 6;
    std::uint64_t n_max = 500;
};

/// "totient", "partition", "binet", "golden".
const std::vector<std::string>& suite_names();

/// Runs one suite by name, or every suite for "all". Throws domain_error for
/// an unknown name.
std::vector<SuiteReport> run_suites(const std::string& suite, const VerifyBounds& bounds);

}  // namespace copart
