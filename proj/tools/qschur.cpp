// qschur: batch verification of quantum osp(1|2), its modules and its q-Schur algebras.
//
// Exit status: 0 if every check passes, 1 if any fails, 2 on usage errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qschur/laurent.hpp"
#include "qschur/suites.hpp"

namespace {

struct Flags {
    std::optional<int> d;
    std::string d_range;
    std::string lambda;
    std::optional<int> deg;
    std::optional<int> n;
    std::vector<std::string> checks;
    bool json = false;
    int jobs = 1;
    std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--d", f.d, "single degree d");
    cmd->add_option("--d-range", f.d_range, "degree range A..B");
    cmd->add_option("--lambda", f.lambda, "weight window A..B");
    cmd->add_option("--deg", f.deg, "degree bound (word length, divided-power degree)");
    cmd->add_option("--n", f.n, "integer parameter (qnum: n; u-verify: largest n)");
    cmd->add_option("--check", f.checks, "restrict to the named checks")->delimiter(',');
    cmd->add_flag("--json", f.json, "JSON lines instead of text");
    cmd->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "random seed");
}

qschur::SuiteOptions to_options(const Flags& f) {
    qschur::SuiteOptions o;
    if (f.d && !f.d_range.empty()) throw std::invalid_argument("--d and --d-range are exclusive");
    if (f.d) {
        if (*f.d < 0) throw std::invalid_argument("--d must be nonnegative");
        o.d = qschur::IntRange{*f.d, *f.d};
    }
    if (!f.d_range.empty()) {
        o.d = qschur::parse_range(f.d_range);
        if (o.d->lo < 0) throw std::invalid_argument("--d-range must be nonnegative");
    }
    if (!f.lambda.empty()) o.lambda = qschur::parse_range(f.lambda);
    if (f.deg && *f.deg < 0) throw std::invalid_argument("--deg must be nonnegative");
    o.deg = f.deg;
    o.n = f.n;
    o.checks = f.checks;
    o.jobs = f.jobs;
    o.seed = f.seed;
    return o;
}

void apply_degree_cap() {
    const char* cap = std::getenv("QSCHUR_MAX_DEGREE");
    if (!cap || !*cap) return;
    char* end = nullptr;
    const long value = std::strtol(cap, &end, 10);
    if (*end != '\0' || value <= 0) throw std::invalid_argument("QSCHUR_MAX_DEGREE must be a positive integer");
    qschur::set_max_degree(static_cast<int>(value));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suites for quantum osp(1|2) and its q-Schur algebras"};
    app.require_subcommand(1);
    std::map<std::string, Flags> flags;
    std::map<std::string, CLI::App*> commands;
    for (const auto& s : qschur::suites()) {
        std::string help = s.summary + " (checks:";
        for (const auto& c : s.checks) help += " " + c;
        help += ")";
        commands[s.name] = app.add_subcommand(s.name, help);
        add_common(commands[s.name], flags[s.name]);
    }
    Flags all_flags;
    CLI::App* all = app.add_subcommand("all", "every acceptance suite with default bounds");
    all->add_flag("--json", all_flags.json, "JSON lines instead of text");
    all->add_option("--jobs", all_flags.jobs, "worker threads")->check(CLI::PositiveNumber);
    all->add_option("--seed", all_flags.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    qschur::Report report;
    bool json = false;
    try {
        apply_degree_cap();
        if (all->parsed()) {
            json = all_flags.json;
            report = qschur::run_full_suite(all_flags.jobs, all_flags.seed);
        } else {
            for (const auto& [name, cmd] : commands) {
                if (!cmd->parsed()) continue;
                json = flags[name].json;
                report = qschur::run_suite(name, to_options(flags[name]));
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "qschur: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "qschur: " << e.what() << '\n';
        return 1;
    }
    if (json) report.write_jsonl(std::cout);
    else report.write_text(std::cout);
    return report.ok() ? 0 : 1;
}
