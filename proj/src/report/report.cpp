#include "qschur/report.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qschur {

namespace {

constexpr std::size_t kMaxListedFailures = 20;

}  // namespace

Json CheckResult::to_json() const {
    Json j;
    j["schema"] = kReportSchema;
    j["suite"] = suite;
    j["check"] = check;
    j["params"] = params;
    j["pass"] = pass;
    j["checked"] = checked;
    j["failures"] = failures;
    if (!data.is_null()) j["data"] = data;
    return j;
}

CheckResult CheckResult::from_json(const Json& j) {
    if (j.value("schema", "") != kReportSchema) throw std::invalid_argument("report: unknown schema");
    CheckResult r;
    r.suite = j.at("suite").get<std::string>();
    r.check = j.at("check").get<std::string>();
    r.params = j.at("params");
    r.pass = j.at("pass").get<bool>();
    r.checked = j.at("checked").get<int>();
    r.failures = j.at("failures").get<std::vector<std::string>>();
    if (j.contains("data")) r.data = j.at("data");
    return r;
}

void Report::add(const std::string& suite, const std::string& check, Json params, const RelationReport& rep) {
    CheckResult r;
    r.suite = suite;
    r.check = check;
    r.params = std::move(params);
    r.pass = rep.ok();
    r.checked = rep.checked;
    for (std::size_t i = 0; i < rep.failures.size() && i < kMaxListedFailures; ++i) r.failures.push_back(rep.failures[i]);
    if (rep.failures.size() > kMaxListedFailures)
        r.failures.push_back("... " + std::to_string(rep.failures.size() - kMaxListedFailures) + " more");
    results_.push_back(std::move(r));
}

void Report::add(const std::string& suite, const std::string& check, Json params, bool pass,
                 const std::string& failure) {
    RelationReport rep;
    rep.expect(pass, failure);
    add(suite, check, std::move(params), rep);
}

void Report::append(const Report& o) { results_.insert(results_.end(), o.results_.begin(), o.results_.end()); }

int Report::failed() const {
    int n = 0;
    for (const auto& r : results_) n += r.pass ? 0 : 1;
    return n;
}

std::string params_to_string(const Json& params) {
    std::string out;
    for (const auto& [k, v] : params.items()) {
        if (!out.empty()) out += ' ';
        out += k + '=' + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    return out;
}

Json Report::summary() const {
    Json s;
    s["checks"] = results_.size();
    s["passed"] = results_.size() - static_cast<std::size_t>(failed());
    s["failed"] = failed();
    Json list = Json::array();
    for (const auto& r : results_) {
        if (r.pass) continue;
        Json f;
        f["suite"] = r.suite;
        f["check"] = r.check;
        f["params"] = r.params;
        f["failures"] = r.failures;
        list.push_back(std::move(f));
    }
    s["failures"] = std::move(list);
    Json j;
    j["schema"] = kReportSchema;
    j["summary"] = std::move(s);
    return j;
}

void Report::write_jsonl(std::ostream& os) const {
    for (const auto& r : results_) os << r.to_json().dump() << '\n';
    os << summary().dump() << '\n';
}

std::string Report::to_jsonl() const {
    std::ostringstream os;
    write_jsonl(os);
    return os.str();
}

void Report::write_text(std::ostream& os) const {
    for (const auto& r : results_) {
        for (const auto& line : r.lines) os << line << '\n';
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << '/' << r.check;
        std::string p = params_to_string(r.params);
        if (!p.empty()) os << ' ' << p;
        os << " (" << r.checked << (r.checked == 1 ? " identity)" : " identities)") << '\n';
        for (const auto& f : r.failures) os << "    " << f << '\n';
    }
    os << failed() << " of " << results_.size() << " checks failed\n";
}

Report Report::from_jsonl(std::istream& is) {
    Report rep;
    std::string line;
    bool seen_summary = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        Json j = Json::parse(line);
        if (j.value("schema", "") != kReportSchema) throw std::invalid_argument("report: unknown schema");
        if (j.contains("summary")) {
            seen_summary = true;
            const Json& s = j.at("summary");
            if (s.at("checks").get<std::size_t>() != rep.results_.size() || s.at("failed").get<int>() != rep.failed())
                throw std::invalid_argument("report: summary does not match the check lines");
            continue;
        }
        if (seen_summary) throw std::invalid_argument("report: check line after summary");
        rep.results_.push_back(CheckResult::from_json(j));
    }
    if (!seen_summary) throw std::invalid_argument("report: missing summary line");
    return rep;
}

}  // namespace qschur
