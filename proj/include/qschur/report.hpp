#pragma once

// Check results and their two renderings.
//
// JSON mode writes one object per line (schema "qschur-report/1") followed by a
// summary line.  Nothing time-dependent is written, so equal inputs give
// byte-identical output.

#include <iosfwd>
#include <string>
#include <vector>

#include "qschur/check.hpp"
#include "qschur/serialize.hpp"

namespace qschur {

inline constexpr const char* kReportSchema = "qschur-report/1";

struct CheckResult {
    std::string suite;
    std::string check;
    Json params = Json::object();
    bool pass = true;
    int checked = 0;
    std::vector<std::string> failures;
    Json data;                       // optional payload, null if absent
    std::vector<std::string> lines;  // extra text-mode output

    Json to_json() const;
    static CheckResult from_json(const Json& j);
};

class Report {
public:
    void add(CheckResult r) { results_.push_back(std::move(r)); }
    void add(const std::string& suite, const std::string& check, Json params, const RelationReport& rep);
    /// A single boolean check with an explanation used on failure.
    void add(const std::string& suite, const std::string& check, Json params, bool pass, const std::string& failure);
    void append(const Report& o);

    const std::vector<CheckResult>& results() const noexcept { return results_; }
    int failed() const;
    bool ok() const { return failed() == 0; }

    Json summary() const;
    void write_jsonl(std::ostream& os) const;
    void write_text(std::ostream& os) const;
    std::string to_jsonl() const;

    /// Parses output of write_jsonl; throws std::invalid_argument on schema mismatch.
    static Report from_jsonl(std::istream& is);

private:
    std::vector<CheckResult> results_;
};

/// "d=3 sign=-" style rendering of a params object.
std::string params_to_string(const Json& params);

}  // namespace qschur
