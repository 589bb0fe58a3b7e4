#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace m11 {

struct CheckResult {
    std::string name;
    bool passed = false;
    /// What the check establishes.
    std::string reference;
    /// Summary on success, first counterexample on failure.
    std::string detail;
    double elapsed_ms = 0;
};

struct Report {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const;
    /// Line-stable text; elapsed times only when requested so that default
    /// output is byte-identical across runs.
    [[nodiscard]] std::string text(bool timings = false) const;
    [[nodiscard]] nlohmann::json json(bool timings = false) const;
};

/// Names of all checks, in report order.
const std::vector<std::string>& suite_names();

/// Runs one named check. Each check draws from its own generator derived
/// from (seed, name), so results do not depend on which other checks run.
CheckResult run_check(const std::string& name, std::uint64_t seed);

/// "all" or a single check name; throws std::invalid_argument otherwise.
Report run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace m11
