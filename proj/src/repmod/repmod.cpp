#include "qschur/repmod.hpp"

#include "qschur/linalg.hpp"
#include "qschur/qnumbers.hpp"

namespace qschur {

namespace {

RationalFunction rf(const Laurent& p) { return RationalFunction(p); }

MatRF parity_matrix(const std::vector<int>& grading) {
    const auto n = static_cast<Eigen::Index>(grading.size());
    MatRF p = MatRF::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) p(i, i) = RationalFunction(grading[static_cast<std::size_t>(i)] ? -1 : 1);
    return p;
}

bool is_diagonal(const MatRF& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (i != j && !m(i, j).is_zero()) return false;
    return true;
}

MatRF submatrix(const MatRF& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    MatRF out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(rows[i], cols[j]);
    return out;
}

// Incrementally maintained basis with distinct pivots.
class SpanBuilder {
public:
    explicit SpanBuilder(Eigen::Index n) : n_(n) {}

    // Reduces w against the basis; appends it if independent.
    bool insert(VecRF w) {
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const auto p = pivots_[k];
            if (w(p).is_zero()) continue;
            const RationalFunction f = w(p);
            for (Eigen::Index i = 0; i < n_; ++i)
                if (!basis_[k](i).is_zero()) w(i) -= f * basis_[k](i);
        }
        Eigen::Index best = -1;
        for (Eigen::Index i = 0; i < n_; ++i)
            if (!w(i).is_zero() && (best < 0 || w(i).complexity() < w(best).complexity())) best = i;
        if (best < 0) return false;
        const RationalFunction inv = w(best).inverse();
        for (Eigen::Index i = 0; i < n_; ++i)
            if (!w(i).is_zero()) w(i) *= inv;
        basis_.push_back(std::move(w));
        pivots_.push_back(best);
        return true;
    }

    const std::vector<VecRF>& basis() const { return basis_; }
    int size() const { return static_cast<int>(basis_.size()); }

private:
    Eigen::Index n_;
    std::vector<VecRF> basis_;
    std::vector<Eigen::Index> pivots_;
};

VecRF apply(const MatRF& m, const VecRF& x) {
    VecRF out = VecRF::Zero(m.rows());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (x(j).is_zero()) continue;
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) out(i) += m(i, j) * x(j);
    }
    return out;
}

std::string coefficient_prefix(const RationalFunction& c) {
    if (c.is_one()) return "";
    if (c == RationalFunction(-1)) return "-";
    if (!c.is_laurent()) return "(" + c.to_string() + ") ";
    std::string s = c.num().size() == 1 ? c.num().to_string() : c.num().to_factored_string();
    if (c.num().size() > 1 && s.front() != '-' && s.front() != 'i') s = "(" + s + ")";
    return s + " ";
}

}  // namespace

RationalFunction weight_eigenvalue(int lambda, int sign) {
    return rf(Laurent::monomial(GaussianInt::unit(-lambda - parity(lambda) + (sign < 0 ? 2 : 0)), lambda));
}

WeightModule simple_module(int d, int sign) {
    if (d < 0) throw std::domain_error("simple_module needs d >= 0");
    if (sign != 1 && sign != -1) throw std::domain_error("simple_module sign must be +1 or -1");
    WeightModule m;
    const Eigen::Index n = d + 1;
    m.E = MatRF::Zero(n, n);
    m.F = MatRF::Zero(n, n);
    m.K = MatRF::Zero(n, n);
    m.Kinv = MatRF::Zero(n, n);
    for (int r = 0; r <= d; ++r) {
        m.ids.push_back("xi_" + std::to_string(r));
        m.grading.push_back(r % 2);
        if (r < d) m.F(r + 1, r) = rf(qint_v(r + 1).rotated(r));
        if (r > 0) m.E(r - 1, r) = rf(qint_v(d + 1 - r).rotated(r - 1 + (sign < 0 ? 2 : 0)));
        const Laurent k = Laurent::monomial(GaussianInt::unit(2 * r + (sign < 0 ? 2 : 0)), d - 2 * r);
        m.K(r, r) = rf(k);
        m.Kinv(r, r) = RationalFunction(1) / rf(k);
    }
    return m;
}

WeightModule direct_sum(const WeightModule& a, const WeightModule& b) {
    WeightModule m;
    const Eigen::Index n = a.dim() + b.dim();
    auto block = [&](const MatRF& x, const MatRF& y) {
        MatRF out = MatRF::Zero(n, n);
        out.topLeftCorner(x.rows(), x.cols()) = x;
        out.bottomRightCorner(y.rows(), y.cols()) = y;
        return out;
    };
    for (const auto& id : a.ids) m.ids.push_back("(" + id + ",0)");
    for (const auto& id : b.ids) m.ids.push_back("(0," + id + ")");
    m.grading = a.grading;
    m.grading.insert(m.grading.end(), b.grading.begin(), b.grading.end());
    m.E = block(a.E, b.E);
    m.F = block(a.F, b.F);
    m.K = block(a.K, b.K);
    m.Kinv = block(a.Kinv, b.Kinv);
    return m;
}

WeightModule tensor(const WeightModule& a, const WeightModule& b) {
    WeightModule m;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) {
            m.ids.push_back(a.ids[static_cast<std::size_t>(i)] + "(x)" + b.ids[static_cast<std::size_t>(j)]);
            m.grading.push_back((a.grading[static_cast<std::size_t>(i)] + b.grading[static_cast<std::size_t>(j)]) % 2);
        }
    const MatRF ia = MatRF::Identity(a.dim(), a.dim());
    const MatRF ib = MatRF::Identity(b.dim(), b.dim());
    const MatRF pa = parity_matrix(a.grading);
    // Delta(E) = E (x) 1 + K (x) E,  Delta(F) = 1 (x) F + F (x) K^-1, odd second factors pick up (-1)^{p(m)}.
    m.E = kron(a.E, ib) + kron(mul(a.K, pa), b.E);
    m.F = kron(pa, b.F) + kron(a.F, b.Kinv);
    m.K = kron(a.K, b.K);
    m.Kinv = kron(a.Kinv, b.Kinv);
    return m;
}

WeightModule tensor_power(const std::vector<int>& degrees) {
    if (degrees.empty()) return simple_module(0);
    WeightModule m = simple_module(degrees.front());
    for (std::size_t k = 1; k < degrees.size(); ++k) m = tensor(m, simple_module(degrees[k]));
    return m;
}

RelationReport verify_module(const WeightModule& m) {
    RelationReport rep;
    const Eigen::Index n = m.dim();
    const MatRF id = MatRF::Identity(n, n);
    const RationalFunction minus_v2(Laurent::monomial(GaussianInt(-1), 2));    // v^2 t^-2
    const RationalFunction minus_vm2(Laurent::monomial(GaussianInt(-1), -2));  // v^-2 t^2
    rep.expect(equal(mul(m.K, m.Kinv), id) && equal(mul(m.Kinv, m.K), id), "S1: K K^-1 = 1");
    rep.expect(equal(mul(m.K, m.E), scaled(mul(m.E, m.K), minus_v2)), "S2: K E = v^2 t^-2 E K");
    rep.expect(equal(mul(m.K, m.F), scaled(mul(m.F, m.K), minus_vm2)), "S2: K F = v^-2 t^2 F K");
    const RationalFunction h = RationalFunction(1) / rf(Laurent::v(1) - Laurent::v(-1));
    const MatRF lhs = mul(m.E, m.F) + mul(m.F, m.E);  // t^2 = -1
    rep.expect(equal(lhs, scaled<RationalFunction>(m.K - m.Kinv, h)), "S3: E F - t^2 F E = (K - K^-1)/(v - v^-1)");
    return rep;
}

std::vector<WeightLabel> weight_labels(const WeightModule& m) {
    if (!is_diagonal(m.K)) throw NotWeightModule("K is not diagonal in the given basis");
    std::vector<WeightLabel> labels;
    for (Eigen::Index i = 0; i < m.dim(); ++i) {
        const RationalFunction& e = m.K(i, i);
        if (!e.is_laurent() || !e.num().is_unit())
            throw NotWeightModule("K eigenvalue " + e.to_string() + " is not a unit times a power of v");
        const int lambda = e.num().max_exp();
        // e = u v^lambda; sign = u * t^(lambda + p(lambda))
        const int k = (e.num().leading_coeff().unit_exponent() + lambda + parity(lambda)) % 4;
        const int kk = (k + 4) % 4;
        if (kk % 2 != 0)
            throw NotWeightModule("K eigenvalue " + e.to_string() + " matches no weight of either sign");
        labels.push_back({lambda, kk == 0 ? 1 : -1, parity(lambda)});
    }
    return labels;
}

std::vector<WeightMultiplicity> weight_decompose(const WeightModule& m) {
    std::map<std::pair<int, int>, int, std::greater<>> counts;
    for (const auto& l : weight_labels(m)) ++counts[{l.lambda, l.sign}];
    std::vector<WeightMultiplicity> out;
    for (const auto& [key, c] : counts) out.push_back({key.first, key.second, c});
    return out;
}

int generated_dimension(const WeightModule& m, const VecRF& vector) {
    SpanBuilder span(m.dim());
    if (!span.insert(vector)) return 0;
    for (std::size_t next = 0; next < span.basis().size(); ++next) {
        const VecRF x = span.basis()[next];
        for (const MatRF* g : {&m.E, &m.F, &m.K, &m.Kinv}) span.insert(apply(*g, x));
    }
    return span.size();
}

bool simplicity_check(const WeightModule& m) {
    // Every nonzero submodule contains a nonzero vector killed by E (K is
    // diagonal and E shifts its eigenvalue).  So M is simple iff ker E is a
    // line and that line generates M.
    weight_labels(m);
    if (m.dim() == 0) return false;
    const MatRF ker = nullspace(m.E);
    if (ker.cols() != 1) return false;
    return generated_dimension(m, ker.col(0)) == m.dim();
}

MatRF divided_action(const MatRF& x, int n) {
    MatRF p = MatRF::Identity(x.rows(), x.cols());
    for (int k = 0; k < n; ++k) p = mul(p, x);
    return scaled(p, RationalFunction(1) / rf(qfact_vt(n)));
}

RelationReport integrality_check(const WeightModule& m, int max_n) {
    RelationReport rep;
    auto check = [&rep](const MatRF& x, const std::string& what) {
        ++rep.checked;
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            for (Eigen::Index i = 0; i < x.rows(); ++i)
                if (!x(i, j).is_laurent()) {
                    rep.failures.push_back(what + " entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + x(i, j).to_string());
                    return;
                }
    };
    check(m.K, "K");
    check(m.Kinv, "K^-1");
    for (int n = 0; n <= max_n; ++n) {
        check(divided_action(m.E, n), "E^(" + std::to_string(n) + ")");
        check(divided_action(m.F, n), "F^(" + std::to_string(n) + ")");
    }
    return rep;
}

namespace {

UdotModule to_udot_signed(const WeightModule& m, int type) {
    const auto labels = weight_labels(m);
    UdotModule n;
    n.type = type;
    n.ids = m.ids;
    n.grading = m.grading;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].sign != type) {
            if (type > 0) throw NotTypePlus("basis vector " + m.ids[i] + " has weight sign -");
            throw NotTypePlus("basis vector " + m.ids[i] + " has weight sign +, expected -");
        }
        n.weight_spaces[labels[i].lambda].push_back(static_cast<int>(i));
    }
    const RationalFunction twist(type);
    for (const auto& [lambda, idx] : n.weight_spaces) {
        if (auto up = n.weight_spaces.find(lambda + 2); up != n.weight_spaces.end())
            n.E_blocks[lambda] = scaled(submatrix(m.E, up->second, idx), twist);
        if (auto down = n.weight_spaces.find(lambda - 2); down != n.weight_spaces.end())
            n.F_blocks[lambda] = submatrix(m.F, down->second, idx);
    }
    // The blocks must carry all of E and F.
    WeightModule back = from_udot(n);
    if (!equal(back.E, m.E) || !equal(back.F, m.F)) throw NotWeightModule("E or F does not shift weights by 2");
    return n;
}

}  // namespace

UdotModule to_udot(const WeightModule& m) { return to_udot_signed(m, 1); }
UdotModule to_udot_minus(const WeightModule& m) { return to_udot_signed(m, -1); }

WeightModule from_udot(const UdotModule& n) {
    WeightModule m;
    m.ids = n.ids;
    m.grading = n.grading;
    const auto dim = static_cast<Eigen::Index>(n.ids.size());
    m.E = MatRF::Zero(dim, dim);
    m.F = MatRF::Zero(dim, dim);
    m.K = MatRF::Zero(dim, dim);
    m.Kinv = MatRF::Zero(dim, dim);
    const RationalFunction twist(n.type);
    for (const auto& [lambda, idx] : n.weight_spaces) {
        const RationalFunction k = weight_eigenvalue(lambda, n.type);
        const RationalFunction kinv = k.inverse();
        for (int i : idx) {
            m.K(i, i) = k;
            m.Kinv(i, i) = kinv;
        }
        if (auto it = n.E_blocks.find(lambda); it != n.E_blocks.end()) {
            const auto& rows = n.weight_spaces.at(lambda + 2);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < idx.size(); ++c)
                    m.E(rows[r], idx[c]) = it->second(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * twist;
        }
        if (auto it = n.F_blocks.find(lambda); it != n.F_blocks.end()) {
            const auto& rows = n.weight_spaces.at(lambda - 2);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < idx.size(); ++c)
                    m.F(rows[r], idx[c]) = it->second(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return m;
}

RelationReport UdotModule::verify() const {
    RelationReport rep;
    for (const auto& [lambda, idx] : weight_spaces) {
        const auto n = static_cast<Eigen::Index>(idx.size());
        MatRF lhs = MatRF::Zero(n, n);
        auto e_in = E_blocks.find(lambda - 2);
        auto f_out = F_blocks.find(lambda);
        if (e_in != E_blocks.end() && f_out != F_blocks.end()) lhs += mul(e_in->second, f_out->second);
        auto e_out = E_blocks.find(lambda);
        auto f_in = F_blocks.find(lambda + 2);
        if (e_out != E_blocks.end() && f_in != F_blocks.end()) lhs += mul(f_in->second, e_out->second);  // -t^2 = 1
        const RationalFunction c = rf(qint_v(lambda).rotated(-lambda - parity(lambda)));
        ++rep.checked;
        if (!equal(lhs, scaled<RationalFunction>(MatRF::Identity(n, n), c)))
            rep.failures.push_back("weight " + std::to_string(lambda) + ": E F - t^2 F E != t^(-lambda-p(lambda)) [lambda]_v");
    }
    return rep;
}

bool same_module(const WeightModule& a, const WeightModule& b) {
    return a.ids == b.ids && a.grading == b.grading && equal(a.E, b.E) && equal(a.F, b.F) && equal(a.K, b.K) &&
           equal(a.Kinv, b.Kinv);
}

Json module_to_json(const WeightModule& m) {
    auto sparse = [](const MatRF& x) {
        Json out = Json::array();
        for (Eigen::Index i = 0; i < x.rows(); ++i)
            for (Eigen::Index j = 0; j < x.cols(); ++j)
                if (!x(i, j).is_zero()) out.push_back(Json::array({i, j, to_json(x(i, j))}));
        return out;
    };
    Json labels = Json::array();
    try {
        for (const auto& l : weight_labels(m)) labels.push_back(Json{{"lambda", l.lambda}, {"sign", l.sign}});
    } catch (const NotWeightModule&) {
        labels = nullptr;
    }
    return Json{{"ids", m.ids}, {"grading", m.grading}, {"labels", labels}, {"E", sparse(m.E)},
                {"F", sparse(m.F)},   {"K", sparse(m.K)},       {"Kinv", sparse(m.Kinv)}};
}

std::vector<std::string> action_table(const WeightModule& m) {
    std::vector<std::string> rows;
    for (const auto& [name, x] : {std::pair<const char*, const MatRF*>{"F", &m.F}, {"E", &m.E}, {"K", &m.K}}) {
        for (Eigen::Index j = 0; j < m.dim(); ++j) {
            std::string rhs;
            for (Eigen::Index i = 0; i < m.dim(); ++i) {
                const RationalFunction& c = (*x)(i, j);
                if (c.is_zero()) continue;
                if (!rhs.empty()) rhs += " + ";
                rhs += coefficient_prefix(c) + m.ids[static_cast<std::size_t>(i)];
            }
            rows.push_back(std::string(name) + " " + m.ids[static_cast<std::size_t>(j)] + " = " + (rhs.empty() ? "0" : rhs));
        }
    }
    return rows;
}

}  // namespace qschur
