#pragma once

#include <string>
#include <vector>

namespace qschur {

/// Outcome of a batch of exact identity checks.
struct RelationReport {
    int checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void expect(bool condition, const std::string& what) {
        ++checked;
        if (!condition) failures.push_back(what);
    }
    void merge(const RelationReport& o) {
        checked += o.checked;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

}  // namespace qschur
