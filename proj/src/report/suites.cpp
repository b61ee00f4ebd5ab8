#include "qschur/suites.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

#include "qschur/bform.hpp"
#include "qschur/parallel.hpp"
#include "qschur/qnumbers.hpp"
#include "qschur/repmod.hpp"
#include "qschur/schur.hpp"
#include "qschur/ualg.hpp"
#include "qschur/udot.hpp"

namespace qschur {

namespace {

RationalFunction rf(const Laurent& p) { return RationalFunction(p); }

// Runs one check body, turning an exception into a failure of that check.
RelationReport guarded(const std::function<RelationReport()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        RelationReport rep;
        rep.expect(false, std::string("exception: ") + e.what());
        return rep;
    }
}

class SuiteContext {
public:
    SuiteContext(std::string suite, const SuiteOptions& o, Report& out) : suite_(std::move(suite)), o_(o), out_(out) {}

    bool wants(const std::string& check) const {
        return o_.checks.empty() || std::find(o_.checks.begin(), o_.checks.end(), check) != o_.checks.end();
    }
    IntRange d_range(int lo, int hi) const { return o_.d.value_or(IntRange{lo, hi}); }
    IntRange lambda_range(int lo, int hi) const { return o_.lambda.value_or(IntRange{lo, hi}); }
    bool single_d() const { return o_.d && o_.d->lo == o_.d->hi; }
    const SuiteOptions& options() const { return o_; }

    void add(const std::string& check, Json params, const RelationReport& rep) {
        out_.add(suite_, check, std::move(params), rep);
    }
    void add(CheckResult r) {
        r.suite = suite_;
        out_.add(std::move(r));
    }

    /// One result per d, computed in parallel and emitted in order of d.
    void per_degree(const std::string& check, IntRange range, const std::function<RelationReport(int)>& body) {
        if (range.hi < range.lo) return;
        auto reps = parallel_map(static_cast<std::size_t>(range.hi - range.lo + 1), o_.jobs,
                                 [&](std::size_t i) { return guarded([&] { return body(range.lo + static_cast<int>(i)); }); });
        for (std::size_t i = 0; i < reps.size(); ++i) add(check, Json{{"d", range.lo + static_cast<int>(i)}}, reps[i]);
    }

private:
    std::string suite_;
    const SuiteOptions& o_;
    Report& out_;
};

Json range_json(IntRange r) { return Json::array({r.lo, r.hi}); }

// ---------------------------------------------------------------------------

void suite_qnum(const SuiteOptions& o, Report& out) {
    SuiteContext s("qnum", o, out);
    const IntRange ns = o.n ? IntRange{*o.n, *o.n} : IntRange{1, 20};
    if (ns.lo < 1) throw std::invalid_argument("qnum: n must be positive");
    for (int n = ns.lo; n <= ns.hi; ++n) {
        if (s.wants("qint")) {
            RelationReport rep = guarded([&] {
                RelationReport r;
                const Laurent frac = qint_vt(n);
                r.expect(frac == qint_vt_closed(n), "fraction and closed form of [" + std::to_string(n) + "]_{v,t} differ");
                r.expect(frac == qint_v(n).rotated(n - 1), "[n]_{v,t} != i^(n-1) [n]_v");
                return r;
            });
            CheckResult c;
            c.check = "qint";
            c.params = Json{{"n", n}};
            c.pass = rep.ok();
            c.checked = rep.checked;
            c.failures = rep.failures;
            if (o.n) {
                c.lines.push_back("[" + std::to_string(n) + "]_{v,t} = " + qint_vt(n).to_factored_string());
                c.lines.push_back("[" + std::to_string(n) + "]!_{v,t} = " + qfact_vt(n).to_factored_string());
                c.data = Json{{"qint_vt", to_json(qint_vt(n))}, {"qfact_vt", to_json(qfact_vt(n))}};
            }
            s.add(std::move(c));
        }
        if (s.wants("qfact"))
            s.add("qfact", Json{{"n", n}}, guarded([&] {
                      RelationReport r;
                      r.expect(qfact_vt(n) == qfact_v(n).rotated(n * (n - 1) / 2), "[n]!_{v,t} != i^(n(n-1)/2) [n]!_v");
                      r.expect(qfact_vt(n) == qfact_vt_closed(n), "fraction and closed form of [n]!_{v,t} differ");
                      return r;
                  }));
        if (s.wants("qbinom"))
            s.add("qbinom", Json{{"n", n}}, guarded([&] {
                      RelationReport r;
                      for (int k = 0; k <= n; ++k) {
                          const std::string tag = "[" + std::to_string(n) + " " + std::to_string(k) + "]";
                          r.expect(qbinom_vt(n, k) == qbinom_v(n, k).rotated(k * (n - k)), tag + "_{v,t} != i^(k(n-k)) " + tag + "_v");
                          r.expect(qbinom_vt(n, k) == qbinom_vt_closed(n, k), tag + ": fraction and closed form differ");
                      }
                      return r;
                  }));
    }
}

// ---------------------------------------------------------------------------

Word random_word(std::mt19937_64& rng, int max_len) {
    static constexpr Letter kLetters[] = {Letter::E, Letter::F, Letter::K, Letter::Ki};
    Word w(rng() % static_cast<unsigned>(max_len + 1));
    for (auto& l : w) l = kLetters[rng() % 4];
    return w;
}

void suite_uverify(const SuiteOptions& o, Report& out) {
    SuiteContext s("u-verify", o, out);
    const RationalFunction h = RationalFunction(1) / rf(Laurent::v(1) - Laurent::v(-1));
    const UElement E = UElement::E(), F = UElement::F(), K = UElement::K(), Ki = UElement::Kinv();
    if (s.wants("relations"))
        s.add("relations", Json::object(), guarded([&] {
                  RelationReport r;
                  r.expect(K * Ki == UElement(RationalFunction(1)), "K K^-1 != 1");
                  r.expect(Ki * K == UElement(RationalFunction(1)), "K^-1 K != 1");
                  r.expect(K * E == rf(Laurent::monomial(GaussianInt(1), 2).rotated(-2)) * (E * K), "K E != v^2 t^-2 E K");
                  r.expect(K * F == rf(Laurent::monomial(GaussianInt(1), -2).rotated(2)) * (F * K), "K F != v^-2 t^2 F K");
                  r.expect(E * F - rf(Laurent::t(2)) * (F * E) == (K - Ki) * h, "E F - t^2 F E != (K - K^-1)/(v - v^-1)");
                  return r;
              }));
    if (s.wants("ef-divided")) {
        const int nmax = o.n.value_or(10);
        for (int n = 1; n <= nmax; ++n)
            s.add("ef-divided", Json{{"n", n}}, guarded([&] {
                      RelationReport r;
                      const UElement defect = ef_divided_defect(n);
                      r.expect(defect.is_zero(), "E F^(n) identity fails: defect " + defect.to_string());
                      return r;
                  }));
    }
    const int max_len = o.deg.value_or(8);
    if (s.wants("confluence")) {
        std::mt19937_64 rng(o.seed);
        std::vector<Word> words(1000);
        for (auto& w : words) w = random_word(rng, max_len);
        auto bad = parallel_map(words.size(), o.jobs, [&](std::size_t i) -> std::string {
            const UElement a = reduce_word(words[i], Strategy::Leftmost);
            const UElement b = reduce_word(words[i], Strategy::Rightmost);
            if (a != b) return word_to_string(words[i]) + ": leftmost and rightmost reductions differ";
            if (a != word_value(words[i])) return word_to_string(words[i]) + ": reduction differs from the product";
            return {};
        });
        RelationReport r;
        for (const auto& b : bad) r.expect(b.empty(), b);
        s.add("confluence", Json{{"words", words.size()}, {"max_length", max_len}, {"seed", o.seed}}, r);
    }
    if (s.wants("associativity") || s.wants("parity")) {
        std::mt19937_64 rng(o.seed + 1);
        RelationReport assoc, par;
        for (int k = 0; k < 200; ++k) {
            const UElement x = word_value(random_word(rng, 4));
            const UElement y = word_value(random_word(rng, 4));
            const UElement z = word_value(random_word(rng, 4));
            assoc.expect((x * y) * z == x * (y * z), "(xy)z != x(yz) for x=" + x.to_string() + ", y=" + y.to_string() + ", z=" + z.to_string());
            if (x.parity() >= 0 && y.parity() >= 0 && !(x * y).is_zero())
                par.expect((x * y).parity() == (x.parity() + y.parity()) % 2, "parity of " + x.to_string() + " * " + y.to_string());
        }
        if (s.wants("associativity")) s.add("associativity", Json{{"triples", 200}, {"seed", o.seed}}, assoc);
        if (s.wants("parity")) s.add("parity", Json{{"pairs", 200}, {"seed", o.seed}}, par);
    }
    if (s.wants("comultiplication")) {
        std::mt19937_64 rng(o.seed + 2);
        RelationReport r = guarded([&] {
            RelationReport rep;
            for (int k = 0; k < 60; ++k) {
                const UElement x = word_value(random_word(rng, 3));
                const UElement y = word_value(random_word(rng, 3));
                rep.expect(comultiply(x * y) == comultiply(x) * comultiply(y),
                           "Delta(xy) != Delta(x)Delta(y) for x=" + x.to_string() + ", y=" + y.to_string());
            }
            return rep;
        });
        s.add("comultiplication", Json{{"pairs", 60}, {"seed", o.seed}}, r);
    }
    if (s.wants("coassociativity"))
        s.add("coassociativity", Json::object(), guarded([&] {
                  RelationReport r;
                  for (const auto& [name, g] : {std::pair{"E", E}, std::pair{"F", F}, std::pair{"K", K}, std::pair{"K^-1", Ki}})
                      r.expect(comultiply_left(comultiply(g)) == comultiply_right(comultiply(g)),
                               std::string("(Delta x id)Delta != (id x Delta)Delta on ") + name);
                  return r;
              }));
}

// ---------------------------------------------------------------------------

bool expected_type_plus(int d, int sign) {
    const int m = d % 4;
    return sign > 0 ? (m == 0 || m == 3) : (m == 1 || m == 2);
}

void suite_module(const SuiteOptions& o, Report& out) {
    SuiteContext s("module", o, out);
    const IntRange dr = s.d_range(0, 8);
    struct Item {
        int d, sign;
    };
    std::vector<Item> items;
    for (int d = dr.lo; d <= dr.hi; ++d)
        for (int sign : {1, -1}) items.push_back({d, sign});
    struct Outcome {
        std::vector<std::pair<std::string, RelationReport>> checks;
        std::vector<std::string> table;
    };
    auto outcomes = parallel_map(items.size(), o.jobs, [&](std::size_t i) {
        const auto [d, sign] = items[i];
        Outcome res;
        WeightModule m;
        try {
            m = simple_module(d, sign);
        } catch (const std::exception& e) {
            RelationReport r;
            r.expect(false, std::string("exception: ") + e.what());
            res.checks.emplace_back("relations", r);
            return res;
        }
        if (s.wants("relations")) res.checks.emplace_back("relations", guarded([&] { return verify_module(m); }));
        if (s.wants("simple"))
            res.checks.emplace_back("simple", guarded([&] {
                                        RelationReport r;
                                        r.expect(simplicity_check(m), "proper invariant subspace found");
                                        return r;
                                    }));
        if (s.wants("integral")) res.checks.emplace_back("integral", guarded([&] { return integrality_check(m, d + 1); }));
        if (s.wants("classification"))
            res.checks.emplace_back("classification", guarded([&] {
                                        RelationReport r;
                                        const auto labels = weight_labels(m);
                                        const int want = expected_type_plus(d, sign) ? 1 : -1;
                                        for (std::size_t k = 0; k < labels.size(); ++k) {
                                            r.expect(labels[k].sign == want,
                                                     m.ids[k] + " classified with sign " + std::to_string(labels[k].sign));
                                            r.expect(labels[k].lambda == d - 2 * static_cast<int>(k),
                                                     m.ids[k] + " has weight " + std::to_string(labels[k].lambda));
                                        }
                                        return r;
                                    }));
        if (s.wants("round-trip"))
            res.checks.emplace_back("round-trip", guarded([&] {
                                        RelationReport r;
                                        if (expected_type_plus(d, sign)) {
                                            const UdotModule u = to_udot(m);
                                            r.merge(u.verify());
                                            r.expect(same_module(from_udot(u), m), "from_udot(to_udot(M)) != M");
                                        } else {
                                            bool threw = false;
                                            try {
                                                (void)to_udot(m);
                                            } catch (const NotTypePlus&) {
                                                threw = true;
                                            }
                                            r.expect(threw, "to_udot accepted a module of type -");
                                            const UdotModule u = to_udot_minus(m);
                                            r.merge(u.verify());
                                            r.expect(same_module(from_udot(u), m), "from_udot(to_udot_minus(M)) != M");
                                        }
                                        return r;
                                    }));
        if (s.single_d()) res.table = action_table(m);
        return res;
    });
    for (std::size_t i = 0; i < items.size(); ++i) {
        const Json params{{"d", items[i].d}, {"sign", items[i].sign > 0 ? "+" : "-"}};
        for (auto& [check, rep] : outcomes[i].checks) s.add(check, params, rep);
        if (!outcomes[i].table.empty()) {
            CheckResult c;
            c.check = "action";
            c.params = params;
            c.checked = static_cast<int>(outcomes[i].table.size());
            c.lines.push_back("Lambda_" + std::to_string(items[i].d) + (items[i].sign > 0 ? "^+" : "^-"));
            for (const auto& row : outcomes[i].table) c.lines.push_back("  " + row);
            c.data = Json(outcomes[i].table);
            s.add(std::move(c));
        }
    }
}

// ---------------------------------------------------------------------------

void suite_tensor(const SuiteOptions& o, Report& out) {
    SuiteContext s("tensor", o, out);
    const IntRange pair_total = s.d_range(0, 8);
    const IntRange triple_total = s.d_range(0, 6);
    std::vector<std::pair<int, int>> pairs;
    for (int total = pair_total.lo; total <= pair_total.hi; ++total)
        for (int d1 = 0; d1 <= total; ++d1) pairs.emplace_back(d1, total - d1);
    if (s.wants("relations") || s.wants("generation")) {
        auto reps = parallel_map(pairs.size(), o.jobs, [&](std::size_t i) {
            const auto [d1, d2] = pairs[i];
            std::pair<RelationReport, RelationReport> res;
            const WeightModule t = tensor(simple_module(d1), simple_module(d2));
            res.first = guarded([&] { return verify_module(t); });
            res.second = guarded([&] {
                RelationReport r;
                VecRF top = VecRF::Zero(t.dim());
                top(0) = RationalFunction(1);
                const int dim = generated_dimension(t, top);
                r.expect(dim == d1 + d2 + 1, "xi_0 (x) xi_0 generates dimension " + std::to_string(dim));
                return r;
            });
            return res;
        });
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const Json params{{"d1", pairs[i].first}, {"d2", pairs[i].second}};
            if (s.wants("relations")) s.add("relations", params, reps[i].first);
            if (s.wants("generation")) s.add("generation", params, reps[i].second);
        }
    }
    if (s.wants("bracketing")) {
        std::vector<std::array<int, 3>> triples;
        for (int total = triple_total.lo; total <= triple_total.hi; ++total)
            for (int a = 0; a <= total; ++a)
                for (int b = 0; a + b <= total; ++b) triples.push_back({a, b, total - a - b});
        auto reps = parallel_map(triples.size(), o.jobs, [&](std::size_t i) {
            return guarded([&] {
                const auto [a, b, c] = triples[i];
                const WeightModule A = simple_module(a), B = simple_module(b), C = simple_module(c);
                RelationReport r;
                r.expect(same_module(tensor(tensor(A, B), C), tensor(A, tensor(B, C))), "(A (x) B) (x) C != A (x) (B (x) C)");
                return r;
            });
        });
        for (std::size_t i = 0; i < triples.size(); ++i)
            s.add("bracketing", Json{{"d1", triples[i][0]}, {"d2", triples[i][1]}, {"d3", triples[i][2]}}, reps[i]);
    }
    if (s.wants("unit"))
        s.per_degree("unit", pair_total, [](int d) {
            RelationReport r;
            const WeightModule m = simple_module(d), one = simple_module(0);
            const WeightModule right = tensor(m, one), left = tensor(one, m);
            r.expect(equal(right.E, m.E) && equal(right.F, m.F) && equal(right.K, m.K) && equal(right.Kinv, m.Kinv),
                     "Lambda_d (x) Lambda_0 differs from Lambda_d");
            r.expect(equal(left.E, m.E) && equal(left.F, m.F) && equal(left.K, m.K) && equal(left.Kinv, m.Kinv),
                     "Lambda_0 (x) Lambda_d differs from Lambda_d");
            return r;
        });
}

// ---------------------------------------------------------------------------

void suite_schur_verify(const SuiteOptions& o, Report& out) {
    SuiteContext s("schur-verify", o, out);
    const IntRange dr = s.d_range(0, 6);
    if (s.wants("model"))
        s.per_degree("model", dr, [](int d) {
            // E_{r,r+1} and F_{r,r-1} against Delta acting on Lambda_1^{(x)d}.
            RelationReport r;
            const WeightModule m = tensor_power(std::vector<int>(static_cast<std::size_t>(d), 1));
            for (int w = 0; w <= d; ++w) {
                const auto& tgt = weight_basis(d, w);
                if (w < d) {
                    const auto& src = weight_basis(d, w + 1);
                    const MatRF e = schur_E(d, w).block(w, w + 1);
                    bool ok = true;
                    for (std::size_t i = 0; i < tgt.size(); ++i)
                        for (std::size_t j = 0; j < src.size(); ++j) ok = ok && e(i, j) == m.E(tgt[i], src[j]);
                    r.expect(ok, "E_{" + std::to_string(w) + "," + std::to_string(w + 1) + "} differs from the tensor action");
                }
                if (w > 0) {
                    const auto& src = weight_basis(d, w - 1);
                    const MatRF f = schur_F(d, w).block(w, w - 1);
                    bool ok = true;
                    for (std::size_t i = 0; i < tgt.size(); ++i)
                        for (std::size_t j = 0; j < src.size(); ++j) ok = ok && f(i, j) == m.F(tgt[i], src[j]);
                    r.expect(ok, "F_{" + std::to_string(w) + "," + std::to_string(w - 1) + "} differs from the tensor action");
                }
            }
            return r;
        });
    if (s.wants("relations")) s.per_degree("relations", dr, [](int d) { return verify_schur_relations(d); });
}

Json basis_table(int d, int jobs) {
    Json basis = Json::array();
    for (const auto& A : theta(d)) {
        Json b;
        b["A"] = A.to_json();
        b["target"] = A.target();
        b["source"] = A.source();
        basis.push_back(std::move(b));
    }
    Json products = Json::array();
    for (const auto& c : structure_constants(d, jobs)) {
        Json p;
        p["A"] = c.A.to_json();
        p["B"] = c.B.to_json();
        p["C"] = c.C.to_json();
        p["coeff"] = to_json(c.coeff);
        products.push_back(std::move(p));
    }
    return Json{{"d", d}, {"basis", std::move(basis)}, {"products", std::move(products)}};
}

void suite_schur_basis(const SuiteOptions& o, Report& out) {
    SuiteContext s("schur-basis", o, out);
    const IntRange dr = s.d_range(0, 5);
    if (s.wants("count"))
        s.per_degree("count", dr, [](int d) {
            RelationReport r;
            const auto n = static_cast<std::int64_t>(theta(d).size());
            r.expect(n == binomial(d + 3, 3), "|Theta_d| = " + std::to_string(n));
            return r;
        });
    if (s.wants("independence"))
        s.per_degree("independence", dr, [](int d) {
            RelationReport r;
            r.expect(basis_independent(d), "the {A}-family is linearly dependent");
            return r;
        });
    if (s.wants("rank"))
        s.per_degree("rank", dr, [](int d) {
            RelationReport r;
            const int rank = chi_image_rank(d);
            r.expect(rank == binomial(d + 3, 3), "dim chi(U) = " + std::to_string(rank));
            return r;
        });
    if (s.wants("span"))
        s.per_degree("span", dr, [](int d) {
            RelationReport r;
            r.expect(basis_in_chi_image(d), "some {A} lies outside chi(U)");
            return r;
        });
    if (s.wants("positivity")) {
        const IntRange pr = s.d_range(0, 4);
        for (int d = pr.lo; d <= pr.hi; ++d) {
            RelationReport r = guarded([&] {
                RelationReport rep;
                for (const auto& c : structure_constants(d, o.jobs))
                    rep.expect(unit_positive_exponent(c.coeff) >= 0, "{" + c.A.to_string() + "}{" + c.B.to_string() + "} has coefficient " +
                                                                         c.coeff.to_string() + " on {" + c.C.to_string() + "}");
                return rep;
            });
            s.add("positivity", Json{{"d", d}}, r);
        }
    }
    if (s.wants("table") && s.single_d()) {
        const int d = o.d->lo;
        CheckResult c;
        c.check = "table";
        c.params = Json{{"d", d}};
        try {
            c.data = basis_table(d, o.jobs);
            c.checked = 1;
            c.lines.push_back("Theta_" + std::to_string(d) + ": " + std::to_string(c.data["basis"].size()) + " basis elements, " +
                              std::to_string(c.data["products"].size()) + " nonzero structure constants");
            for (const auto& A : theta(d))
                c.lines.push_back("  {" + A.to_string() + "} = " + element_to_string(canonical_basis_element(A)));
        } catch (const std::exception& e) {
            c.pass = false;
            c.checked = 1;
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        s.add(std::move(c));
    }
}

// ---------------------------------------------------------------------------

RelationReport psi_generators(int d) {
    RelationReport r;
    const int D = d + 2;
    const RationalFunction t(Laurent::t(1)), t2(Laurent::t(2)), tm2(Laurent::t(-2));
    auto in = [d](int w) { return w >= 0 && w <= d; };
    for (int w = 0; w <= D; ++w) {
        const std::string tag = std::to_string(w);
        r.expect(psi_transfer(schur_one(D, w)) == (in(w - 1) ? schur_one(d, w - 1) : SchurElement(d)), "psi(1_" + tag + ")");
        r.expect(psi_transfer(schur_K(D, w)) == (in(w - 1) ? t2 * schur_K(d, w - 1) : SchurElement(d)), "psi(K_" + tag + ")");
        r.expect(psi_transfer(schur_Kinv(D, w)) == (in(w - 1) ? tm2 * schur_Kinv(d, w - 1) : SchurElement(d)), "psi(K_" + tag + "^-1)");
        if (w < D)
            r.expect(psi_transfer(schur_E(D, w)) == (in(w - 1) && in(w) ? t * schur_E(d, w - 1) : SchurElement(d)),
                     "psi(E_{" + tag + "," + std::to_string(w + 1) + "})");
        if (w > 0)
            r.expect(psi_transfer(schur_F(D, w)) == (in(w - 1) && in(w - 2) ? t * schur_F(d, w - 1) : SchurElement(d)),
                     "psi(F_{" + tag + "," + std::to_string(w - 1) + "})");
    }
    return r;
}

RelationReport psi_multiplicative(int d) {
    RelationReport r;
    const int D = d + 2;
    const auto basis = theta(D);
    for (const auto& A : basis)
        for (const auto& B : basis) {
            const SchurElement& x = canonical_basis_element(A);
            const SchurElement& y = canonical_basis_element(B);
            r.expect(psi_transfer(x * y) == psi_transfer(x) * psi_transfer(y),
                     "psi({" + A.to_string() + "}{" + B.to_string() + "}) != psi({A})psi({B})");
        }
    return r;
}

// Coefficients of {A+mI}{B+mI} on {C+mI} agree with those of {A}{B} on {C}.
RelationReport psi_stabilization(int d0, int m) {
    RelationReport r;
    std::map<std::pair<ThetaMatrix, ThetaMatrix>, Expansion> base;
    for (const auto& c : structure_constants(d0)) base[{c.A, c.B}][c.C] = c.coeff;
    const auto basis = theta(d0);
    for (const auto& A : basis)
        for (const auto& B : basis) {
            if (A.source() != B.target()) continue;
            const Expansion big = expand_in_basis(canonical_basis_element(A.shifted(m)) * canonical_basis_element(B.shifted(m)));
            const Expansion& small = base[{A, B}];
            std::set<ThetaMatrix> seen;
            for (const auto& [C, coeff] : big) {
                if (std::min(C.a11, C.a22) < m) continue;
                const ThetaMatrix Cs = C.shifted(-m);
                seen.insert(Cs);
                auto it = small.find(Cs);
                r.expect(it != small.end() && it->second == coeff, "coefficient of {" + C.to_string() + "} in {" + A.shifted(m).to_string() +
                                                                       "}{" + B.shifted(m).to_string() + "} is " + coeff.to_string());
            }
            for (const auto& [C, coeff] : small)
                r.expect(seen.count(C) > 0, "{" + C.to_string() + "} in {" + A.to_string() + "}{" + B.to_string() + "} does not persist");
        }
    return r;
}

void suite_psi(const SuiteOptions& o, Report& out) {
    SuiteContext s("psi", o, out);
    const IntRange dr = s.d_range(0, 3);
    if (s.wants("generators")) s.per_degree("generators", dr, psi_generators);
    if (s.wants("multiplicative")) s.per_degree("multiplicative", dr, psi_multiplicative);
    if (s.wants("stabilization")) {
        // Pairs (d0, m) with d0 + 2m inside the range (default up to 6) and d0 <= 4.
        const IntRange top = s.d_range(0, 6);
        std::vector<std::pair<int, int>> jobs;
        for (int d0 = 0; d0 <= 4; ++d0)
            for (int m = 1; d0 + 2 * m <= top.hi; ++m)
                if (d0 + 2 * m >= top.lo) jobs.emplace_back(d0, m);
        auto reps = parallel_map(jobs.size(), o.jobs, [&](std::size_t i) {
            return guarded([&] { return psi_stabilization(jobs[i].first, jobs[i].second); });
        });
        for (std::size_t i = 0; i < jobs.size(); ++i)
            s.add("stabilization", Json{{"d", jobs[i].first}, {"shift", jobs[i].second}}, reps[i]);
    }
}

void suite_chi(const SuiteOptions& o, Report& out) {
    SuiteContext s("chi", o, out);
    if (s.wants("relations")) s.per_degree("relations", s.d_range(0, 6), verify_chi);
}

// ---------------------------------------------------------------------------

void suite_udot(const SuiteOptions& o, Report& out) {
    SuiteContext s("udot", o, out);
    const IntRange lr = s.lambda_range(-20, 20);
    const Json window = range_json(lr);
    if (s.wants("commutator"))
        s.add("commutator", Json{{"lambda", window}}, guarded([&] {
                  RelationReport r;
                  for (int l = lr.lo; l <= lr.hi; ++l) {
                      const std::string tag = "lambda=" + std::to_string(l);
                      r.expect(commutator(Flavor::Osp, l) ==
                                   UdotElement::idempotent(Flavor::Osp, l) * rf(qint_v(l).rotated(-l - parity(l))),
                               "osp commutator at " + tag);
                      r.expect(commutator(Flavor::Sl2, l) == UdotElement::idempotent(Flavor::Sl2, l) * rf(qint_v(l)),
                               "sl2 commutator at " + tag);
                  }
                  return r;
              }));
    if (s.wants("clark-wang"))
        s.add("clark-wang", Json{{"lambda", window}}, guarded([&] {
                  RelationReport r;
                  for (int l = lr.lo; l <= lr.hi; ++l) r.expect(check_clark_wang_form(l), "lambda=" + std::to_string(l));
                  return r;
              }));
    const int deg = o.deg.value_or(3);
    if (s.wants("phi-inverse"))
        s.add("phi-inverse", Json{{"lambda", window}, {"deg", deg}}, guarded([&] {
                  RelationReport r;
                  for (int l = lr.lo; l <= lr.hi; ++l)
                      for (int a = 0; a <= deg; ++a)
                          for (int b = 0; b <= deg; ++b) {
                              const UdotMonomial m{a, b, l};
                              const UdotElement x = UdotElement::monomial(Flavor::Sl2, m);
                              const UdotElement y = UdotElement::monomial(Flavor::Osp, m);
                              r.expect(phi_inv(phi(x)) == x, "phi' phi != id on " + m.to_string());
                              r.expect(phi(phi_inv(y)) == y, "phi phi' != id on " + m.to_string());
                          }
                  return r;
              }));
    if (s.wants("phi-relations"))
        s.add("phi-relations", Json{{"lambda", window}}, guarded([&] {
                  // The sl2 relation E F 1 - F E 1 - [l] 1 pushed through phi, multiplied in the osp flavor.
                  RelationReport r;
                  for (int l = lr.lo; l <= lr.hi; ++l) {
                      const UdotElement ef = phi(UdotElement::E(Flavor::Sl2, l)) * phi(UdotElement::F(Flavor::Sl2, l - 2));
                      const UdotElement fe = phi(UdotElement::F(Flavor::Sl2, l)) * phi(UdotElement::E(Flavor::Sl2, l + 2));
                      const UdotElement rel = ef - fe - phi(UdotElement::idempotent(Flavor::Sl2, l)) * rf(qint_v(l));
                      r.expect(rel.is_zero(), "phi(E F 1_l - F E 1_l - [l] 1_l) != 0 at l=" + std::to_string(l));
                      r.expect(phi(UdotElement::idempotent(Flavor::Sl2, l)) * phi(UdotElement::idempotent(Flavor::Sl2, l + 2)) ==
                                   UdotElement(Flavor::Osp),
                               "phi(1_l) phi(1_{l+2}) != 0");
                  }
                  return r;
              }));
    if (s.wants("confluence")) {
        std::mt19937_64 rng(o.seed + 3);
        std::vector<UdotWord> words(300);
        for (auto& w : words) {
            w.letters.resize(rng() % 7);
            for (auto& l : w.letters) l = rng() % 2 ? ULetter::E : ULetter::F;
            w.lambda = static_cast<int>(rng() % 13) - 6;
        }
        auto bad = parallel_map(words.size(), o.jobs, [&](std::size_t i) {
            std::vector<std::string> errs;
            for (Flavor f : {Flavor::Osp, Flavor::Sl2}) {
                const UdotElement a = reduce_udot_word(f, words[i], Strategy::Leftmost);
                const UdotElement b = reduce_udot_word(f, words[i], Strategy::Rightmost);
                if (a != b || a != udot_word_value(f, words[i]))
                    errs.push_back(to_string(f) + ": " + udot_word_to_string(words[i]) + " reduces inconsistently");
            }
            return errs;
        });
        RelationReport r;
        for (const auto& errs : bad) {
            r.checked += 2;
            r.failures.insert(r.failures.end(), errs.begin(), errs.end());
        }
        s.add("confluence", Json{{"words", words.size()}, {"seed", o.seed}}, r);
    }
    if (s.wants("positivity")) {
        const IntRange pw = s.lambda_range(-6, 6);
        s.add("positivity", Json{{"lambda", range_json(pw)}, {"deg", deg}},
              guarded([&] { return positivity_probe(pw.lo, pw.hi, deg, o.jobs); }));
    }
}

// ---------------------------------------------------------------------------

void suite_phid(const SuiteOptions& o, Report& out) {
    SuiteContext s("phid", o, out);
    const IntRange dr = s.d_range(0, 5);
    if (s.wants("transfer"))
        s.per_degree("transfer", dr, [](int d) {
            RelationReport r;
            for (int l = -d - 4; l <= d + 4; ++l)
                for (const auto& [name, g] : {std::pair{"1_", UdotElement::idempotent(Flavor::Osp, l)},
                                              std::pair{"E_", UdotElement::E(Flavor::Osp, l)},
                                              std::pair{"F_", UdotElement::F(Flavor::Osp, l)}})
                    r.expect(psi_transfer(phi_d(g, d + 2)) == phi_d(g, d),
                             std::string("psi phi_{d+2} != phi_d on ") + name + std::to_string(l));
            return r;
        });
    if (s.wants("homomorphism"))
        s.per_degree("homomorphism", dr, [&o](int d) {
            RelationReport r;
            std::mt19937_64 rng(o.seed + 100 + static_cast<std::uint64_t>(d));
            for (int k = 0; k < 60; ++k) {
                const UdotMonomial y{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % (2 * d + 5)) - d - 2};
                const UdotMonomial x{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), y.mu()};
                const UdotElement ex = UdotElement::monomial(Flavor::Osp, x), ey = UdotElement::monomial(Flavor::Osp, y);
                r.expect(phi_d(ex * ey, d) == phi_d(ex, d) * phi_d(ey, d),
                         "phi_d(xy) != phi_d(x)phi_d(y) for x=" + x.to_string() + ", y=" + y.to_string());
            }
            return r;
        });
}

// ---------------------------------------------------------------------------

void suite_form(const SuiteOptions& o, Report& out) {
    SuiteContext s("form", o, out);
    const IntRange dr = s.d_range(0, 8);
    if (s.wants("gram") || s.wants("contravariance")) {
        auto reps = parallel_map(static_cast<std::size_t>(std::max(0, dr.hi - dr.lo + 1)), o.jobs, [&](std::size_t i) {
            const int d = dr.lo + static_cast<int>(i);
            std::pair<RelationReport, RelationReport> res;
            std::optional<GramForm> g;
            res.first = guarded([&] {
                RelationReport r;
                g = derive_gram(d);
                r.expect(true, "");
                return r;
            });
            if (g) res.second = guarded([&] { return check_contravariance(*g); });
            else res.second.expect(false, "no form to test");
            return std::make_pair(std::move(res), g ? g->to_json() : Json());
        });
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const Json params{{"d", dr.lo + static_cast<int>(i)}};
            if (s.wants("gram")) {
                CheckResult c;
                c.check = "gram";
                c.params = params;
                c.pass = reps[i].first.first.ok();
                c.checked = reps[i].first.first.checked;
                c.failures = reps[i].first.first.failures;
                c.data = reps[i].second;
                s.add(std::move(c));
            }
            if (s.wants("contravariance")) s.add("contravariance", params, reps[i].first.second);
        }
    }
    if (s.wants("reversal")) {
        const IntRange rr = s.d_range(0, 4);
        s.per_degree("reversal", rr, [](int d) { return check_rho_reversal(d, 4); });
    }
}

const std::vector<SuiteInfo> kSuites = {
    {"qnum", "(v,t)-quantum integers, factorials and binomials", {"qint", "qfact", "qbinom"}, suite_qnum},
    {"u-verify",
     "defining relations, E F^(n) commutation, rewriting confluence and comultiplication",
     {"relations", "ef-divided", "confluence", "associativity", "parity", "comultiplication", "coassociativity"},
     suite_uverify},
    {"module",
     "simple modules: relations, simplicity, integrality, weight classification, idempotented round trips",
     {"relations", "simple", "integral", "classification", "round-trip"},
     suite_module},
    {"tensor", "tensor products of simple modules", {"relations", "generation", "bracketing", "unit"}, suite_tensor},
    {"schur-verify", "q-Schur algebra relations on the tensor space", {"model", "relations"}, suite_schur_verify},
    {"schur-basis",
     "{A}-basis: cardinality, independence, span of chi, positivity of structure constants",
     {"count", "independence", "rank", "span", "positivity", "table"},
     suite_schur_basis},
    {"psi", "transfer maps psi_{d,d+2}", {"generators", "multiplicative", "stabilization"}, suite_psi},
    {"chi", "the surjection chi from U onto the q-Schur algebra", {"relations"}, suite_chi},
    {"udot",
     "idempotented algebras: commutator, rescaled generators, the isomorphism phi, positivity probe",
     {"commutator", "clark-wang", "phi-inverse", "phi-relations", "confluence", "positivity"},
     suite_udot},
    {"phid", "phi_d and its compatibility with psi", {"transfer", "homomorphism"}, suite_phid},
    {"form", "anti-automorphism rho and the contravariant form", {"gram", "contravariance", "reversal"}, suite_form},
};

}  // namespace

IntRange parse_range(const std::string& text) {
    auto parse_int = [&](std::string_view part) {
        int value = 0;
        const char* end = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(part.data(), end, value);
        if (part.empty() || ec != std::errc() || ptr != end) throw std::invalid_argument("bad range '" + text + "'");
        return value;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(text);
        return {v, v};
    }
    const std::string_view sv(text);
    IntRange r{parse_int(sv.substr(0, dots)), parse_int(sv.substr(dots + 2))};
    if (r.hi < r.lo) throw std::invalid_argument("empty range '" + text + "'");
    return r;
}

const std::vector<SuiteInfo>& suites() { return kSuites; }

const SuiteInfo* find_suite(const std::string& name) {
    for (const auto& s : kSuites)
        if (s.name == name) return &s;
    return nullptr;
}

Report run_suite(const std::string& name, const SuiteOptions& options) {
    const SuiteInfo* info = find_suite(name);
    if (!info) throw std::invalid_argument("unknown suite '" + name + "'");
    for (const auto& c : options.checks)
        if (std::find(info->checks.begin(), info->checks.end(), c) == info->checks.end())
            throw std::invalid_argument("suite '" + name + "' has no check '" + c + "'");
    if (options.jobs < 1) throw std::invalid_argument("--jobs must be positive");
    Report rep;
    info->run(options, rep);
    return rep;
}

std::vector<Criterion> acceptance_criteria(int jobs, std::uint64_t seed) {
    auto opt = [&](std::vector<std::string> checks, std::optional<IntRange> d = std::nullopt) {
        SuiteOptions o;
        o.checks = std::move(checks);
        o.d = d;
        o.jobs = jobs;
        o.seed = seed;
        return o;
    };
    return {
        {1, "quantum combinatorics", 1.0, {{"qnum", opt({})}}},
        {2, "presentation", 30.0, {{"u-verify", opt({"relations", "ef-divided", "confluence"})}}},
        {3, "simple modules", 120.0, {{"module", opt({})}}},
        {4, "tensor products", 120.0, {{"tensor", opt({"relations", "bracketing", "generation"})}}},
        {5,
         "q-Schur relations and {A}-basis",
         600.0,
         {{"schur-verify", opt({})}, {"schur-basis", opt({"count", "independence", "rank", "span"})}}},
        {6,
         "homomorphisms",
         600.0,
         {{"chi", opt({})},
          {"psi", opt({"generators", "multiplicative"})},
          {"udot", opt({"phi-inverse", "phi-relations"})},
          {"phid", opt({"transfer"})}}},
        {7,
         "positivity",
         900.0,
         {{"schur-basis", opt({"positivity"})}, {"psi", opt({"stabilization"})}, {"udot", opt({"positivity"})}}},
        {8, "contravariant form", 60.0, {{"form", opt({"gram", "contravariance"})}}},
    };
}

Report run_full_suite(int jobs, std::uint64_t seed) {
    Report all;
    for (const auto& c : acceptance_criteria(jobs, seed))
        for (const auto& run : c.runs) all.append(run_suite(run.suite, run.options));
    return all;
}

}  // namespace qschur
