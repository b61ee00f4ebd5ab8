#pragma once

// Verification suites shared by the command-line tool and the acceptance run.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qschur/report.hpp"

namespace qschur {

struct IntRange {
    int lo = 0;
    int hi = 0;
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// "A..B" or a single integer "A"; throws std::invalid_argument.
IntRange parse_range(const std::string& text);

/// Unset fields fall back to per-check defaults.
struct SuiteOptions {
    std::optional<IntRange> d;
    std::optional<IntRange> lambda;
    std::optional<int> deg;
    std::optional<int> n;
    std::vector<std::string> checks;  // empty: every check of the suite
    int jobs = 1;
    std::uint64_t seed = 1;
};

struct SuiteInfo {
    std::string name;
    std::string summary;
    std::vector<std::string> checks;
    void (*run)(const SuiteOptions&, Report&);
};

const std::vector<SuiteInfo>& suites();
/// nullptr for an unknown name.
const SuiteInfo* find_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite or check name.
Report run_suite(const std::string& name, const SuiteOptions& options);

struct SuiteRun {
    std::string suite;
    SuiteOptions options;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;  // 0: no limit
    std::vector<SuiteRun> runs;
};

/// The acceptance criteria with their suite selections.
std::vector<Criterion> acceptance_criteria(int jobs, std::uint64_t seed);

/// Every run of criteria 1-8 in order.
Report run_full_suite(int jobs, std::uint64_t seed);

}  // namespace qschur
