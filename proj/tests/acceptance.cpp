// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>

#include "qschur/suites.hpp"

namespace {

constexpr std::uint64_t kSeed = 1;
constexpr std::size_t kShownFailures = 10;

void print_failures(const qschur::Report& rep) {
    std::size_t shown = 0;
    for (const auto& r : rep.results()) {
        if (r.pass) continue;
        std::cout << "    " << r.suite << '/' << r.check << ' ' << qschur::params_to_string(r.params) << '\n';
        for (const auto& f : r.failures) std::cout << "      " << f << '\n';
        if (++shown == kShownFailures) break;
    }
}

}  // namespace

int main() {
    const int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool all_pass = true;
    qschur::Report full;
    for (const auto& c : qschur::acceptance_criteria(jobs, kSeed)) {
        const auto start = std::chrono::steady_clock::now();
        qschur::Report rep;
        std::string error;
        try {
            for (const auto& run : c.runs) rep.append(qschur::run_suite(run.suite, run.options));
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
        const bool pass = error.empty() && rep.ok() && in_time;
        all_pass = all_pass && pass;
        full.append(rep);
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit_seconds);
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.title << " ("
                  << rep.results().size() - static_cast<std::size_t>(rep.failed()) << '/' << rep.results().size()
                  << " checks, " << timing << ")\n";
        if (!error.empty()) std::cout << "    error: " << error << '\n';
        if (!in_time) std::cout << "    time limit exceeded\n";
        print_failures(rep);
        std::cout.flush();
    }

    // Determinism: a second full run with the same seed, serialized independently.
    const std::string first = full.to_jsonl();
    std::string second;
    std::string error;
    try {
        second = qschur::run_full_suite(jobs, kSeed).to_jsonl();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const bool same = error.empty() && first == second;
    all_pass = all_pass && same;
    std::cout << (same ? "[PASS] " : "[FAIL] ") << "criterion 9: deterministic JSON report (" << first.size()
              << " bytes, seed " << kSeed << ")\n";
    if (!error.empty()) std::cout << "    error: " << error << '\n';
    return all_pass ? 0 : 1;
}
