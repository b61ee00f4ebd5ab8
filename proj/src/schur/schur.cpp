#include "qschur/schur.hpp"

#include <bit>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "qschur/linalg.hpp"
#include "qschur/parallel.hpp"
#include "qschur/qnumbers.hpp"

namespace qschur {

namespace {

constexpr int kMaxSchurDegree = 16;

RationalFunction rf(const Laurent& p) { return RationalFunction(p); }

// {A} family of one block (target r, source r'), with a k x k pivot system.
struct BlockBasis {
    std::vector<ThetaMatrix> members;
    std::vector<std::pair<Eigen::Index, Eigen::Index>> positions;
    MatRF inverse;  // inverse of the member-by-position matrix
    bool independent = false;
};

struct Model {
    int d = 0;
    std::vector<std::vector<std::uint32_t>> basis;  // per weight, increasing kron index
    std::vector<MatRF> E;                           // E[r]: weight r+1 -> r
    std::vector<MatRF> F;                           // F[r]: weight r-1 -> r

    std::once_flag basis_once;
    std::map<ThetaMatrix, SchurElement> canonical;
    std::map<std::pair<int, int>, BlockBasis> blocks;
};

// Factor k (from the left) sits at bit d-1-k of the kron index.
int ones_before(std::uint32_t x, int d, int k) { return k == 0 ? 0 : std::popcount(x >> (d - k)); }
int ones_after(std::uint32_t x, int d, int k) { return std::popcount(x & ((std::uint32_t{1} << (d - 1 - k)) - 1)); }

std::unique_ptr<Model> build_model(int d) {
    auto m = std::make_unique<Model>();
    m->d = d;
    m->basis.resize(static_cast<std::size_t>(d + 1));
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << d); ++x) m->basis[static_cast<std::size_t>(std::popcount(x))].push_back(x);
    std::vector<std::unordered_map<std::uint32_t, Eigen::Index>> index(static_cast<std::size_t>(d + 1));
    for (int r = 0; r <= d; ++r) {
        const auto& b = m->basis[static_cast<std::size_t>(r)];
        for (std::size_t i = 0; i < b.size(); ++i) index[static_cast<std::size_t>(r)][b[i]] = static_cast<Eigen::Index>(i);
    }
    auto dim = [&](int r) { return static_cast<Eigen::Index>(m->basis[static_cast<std::size_t>(r)].size()); };

    // E acting at factor k carries prod_{j<k} (-1)^{p(x_j)} kappa(x_j): v for xi_0, v^-1 for xi_1.
    m->E.resize(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) {
        MatRF e = MatRF::Zero(dim(r), dim(r + 1));
        const auto& src = m->basis[static_cast<std::size_t>(r + 1)];
        for (std::size_t j = 0; j < src.size(); ++j)
            for (int k = 0; k < d; ++k) {
                const std::uint32_t bit = std::uint32_t{1} << (d - 1 - k);
                if (!(src[j] & bit)) continue;
                const int ones = ones_before(src[j], d, k);
                const int zeros = k - ones;
                e(index[static_cast<std::size_t>(r)].at(src[j] ^ bit), static_cast<Eigen::Index>(j)) = rf(Laurent::v(zeros - ones));
            }
        m->E[static_cast<std::size_t>(r)] = std::move(e);
    }
    // F acting at factor k carries (-1)^{ones before} prod_{j>k} kappa^-1(x_j): v^-1 for xi_0, -v for xi_1.
    m->F.resize(static_cast<std::size_t>(d + 1));
    for (int r = 1; r <= d; ++r) {
        MatRF f = MatRF::Zero(dim(r), dim(r - 1));
        const auto& src = m->basis[static_cast<std::size_t>(r - 1)];
        for (std::size_t j = 0; j < src.size(); ++j)
            for (int k = 0; k < d; ++k) {
                const std::uint32_t bit = std::uint32_t{1} << (d - 1 - k);
                if (src[j] & bit) continue;
                const int before = ones_before(src[j], d, k);
                const int after = ones_after(src[j], d, k);
                const int zeros_after = d - 1 - k - after;
                const GaussianInt sign((before + after) % 2 ? -1 : 1);
                f(index[static_cast<std::size_t>(r)].at(src[j] | bit), static_cast<Eigen::Index>(j)) =
                    rf(Laurent::monomial(sign, after - zeros_after));
            }
        m->F[static_cast<std::size_t>(r)] = std::move(f);
    }
    return m;
}

Model& model(int d) {
    if (d < 0 || d > kMaxSchurDegree) throw std::domain_error("Schur degree must be in [0, " + std::to_string(kMaxSchurDegree) + "]");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<Model>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[d];
    if (!slot) slot = build_model(d);
    return *slot;
}

void check_weight(int d, int r) {
    if (r < 0 || r > d) throw std::out_of_range("weight index " + std::to_string(r) + " outside [0, " + std::to_string(d) + "]");
}

SchurElement single_block(int d, int r, int rp, const MatRF& m) {
    SchurElement x(d);
    x.add_block(r, rp, m);
    return x;
}

SchurElement divide_exact(SchurElement x, const Laurent& divisor) {
    SchurElement out(x.degree());
    for (const auto& [key, m] : x.blocks()) {
        MatRF q = m;
        for (Eigen::Index j = 0; j < q.cols(); ++j)
            for (Eigen::Index i = 0; i < q.rows(); ++i)
                if (!q(i, j).is_zero()) q(i, j) = rf(Laurent::exact_div(q(i, j).to_laurent(), divisor));
        out.add_block(key.first, key.second, q);
    }
    return out;
}

void build_basis(Model& m) {
    for (const auto& A : theta(m.d)) m.canonical.emplace(A, A.a22 <= A.a11 ? recipe_a(A) : recipe_b(A));
    for (const auto& [A, x] : m.canonical) m.blocks[{A.target(), A.source()}].members.push_back(A);
    for (auto& [key, bb] : m.blocks) {
        const auto k = static_cast<Eigen::Index>(bb.members.size());
        // Candidate positions: every entry where some member is nonzero.
        std::vector<std::pair<Eigen::Index, Eigen::Index>> candidates;
        const MatRF first = m.canonical.at(bb.members.front()).block(key.first, key.second);
        for (Eigen::Index j = 0; j < first.cols(); ++j)
            for (Eigen::Index i = 0; i < first.rows(); ++i)
                for (const auto& A : bb.members)
                    if (!m.canonical.at(A).block(key.first, key.second)(i, j).is_zero()) {
                        candidates.emplace_back(i, j);
                        break;
                    }
        MatRF sys(k, static_cast<Eigen::Index>(candidates.size()));
        for (Eigen::Index a = 0; a < k; ++a) {
            const MatRF blk = m.canonical.at(bb.members[static_cast<std::size_t>(a)]).block(key.first, key.second);
            for (std::size_t p = 0; p < candidates.size(); ++p)
                sys(a, static_cast<Eigen::Index>(p)) = blk(candidates[p].first, candidates[p].second);
        }
        const Echelon<RationalFunction> ech = rref(sys);
        bb.independent = ech.rank() == k;
        if (!bb.independent) continue;
        MatRF pivot(k, k);
        for (Eigen::Index p = 0; p < k; ++p) {
            const auto c = static_cast<Eigen::Index>(ech.pivots[static_cast<std::size_t>(p)]);
            bb.positions.push_back(candidates[static_cast<std::size_t>(c)]);
            pivot.col(p) = sys.col(c);
        }
        bb.inverse = inverse(pivot);
    }
}

Model& model_with_basis(int d) {
    Model& m = model(d);
    std::call_once(m.basis_once, [&m] { build_basis(m); });
    return m;
}

// E_{r,r+1} ... chain from weight `from` down to weight `to` (from >= to).
MatRF e_chain(const Model& m, int to, int from) {
    MatRF out = MatRF::Identity(static_cast<Eigen::Index>(m.basis[static_cast<std::size_t>(from)].size()),
                                static_cast<Eigen::Index>(m.basis[static_cast<std::size_t>(from)].size()));
    for (int r = from - 1; r >= to; --r) out = mul(m.E[static_cast<std::size_t>(r)], out);
    return out;
}

// F chain from weight `from` up to weight `to` (to >= from).
MatRF f_chain(const Model& m, int to, int from) {
    MatRF out = MatRF::Identity(static_cast<Eigen::Index>(m.basis[static_cast<std::size_t>(from)].size()),
                                static_cast<Eigen::Index>(m.basis[static_cast<std::size_t>(from)].size()));
    for (int r = from + 1; r <= to; ++r) out = mul(m.F[static_cast<std::size_t>(r)], out);
    return out;
}

RationalFunction k_eigenvalue(int d, int r) { return rf(twist(d - 2 * r, d)); }

}  // namespace

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::int64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

std::string ThetaMatrix::to_string() const {
    return "[[" + std::to_string(a11) + "," + std::to_string(a12) + "],[" + std::to_string(a21) + "," + std::to_string(a22) + "]]";
}

Json ThetaMatrix::to_json() const { return Json::array({Json::array({a11, a12}), Json::array({a21, a22})}); }

ThetaMatrix ThetaMatrix::from_json(const Json& j) {
    return {j.at(0).at(0).get<int>(), j.at(0).at(1).get<int>(), j.at(1).at(0).get<int>(), j.at(1).at(1).get<int>()};
}

std::vector<ThetaMatrix> theta(int d) {
    std::vector<ThetaMatrix> out;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b)
            for (int c = 0; a + b + c <= d; ++c) out.push_back({a, b, c, d - a - b - c});
    return out;
}

const std::vector<std::uint32_t>& weight_basis(int d, int r) {
    check_weight(d, r);
    return model(d).basis[static_cast<std::size_t>(r)];
}

SchurElement schur_one(int d, int r) {
    check_weight(d, r);
    const auto n = static_cast<Eigen::Index>(binomial(d, r));
    return single_block(d, r, r, MatRF::Identity(n, n));
}

SchurElement schur_E(int d, int r) {
    check_weight(d, r);
    check_weight(d, r + 1);
    return single_block(d, r, r + 1, model(d).E[static_cast<std::size_t>(r)]);
}

SchurElement schur_F(int d, int r) {
    check_weight(d, r);
    check_weight(d, r - 1);
    return single_block(d, r, r - 1, model(d).F[static_cast<std::size_t>(r)]);
}

SchurElement schur_K(int d, int r) { return schur_one(d, r) * k_eigenvalue(d, r); }
SchurElement schur_Kinv(int d, int r) { return schur_one(d, r) * k_eigenvalue(d, r).inverse(); }

std::vector<NamedElement> generators(int d) {
    std::vector<NamedElement> out;
    auto name = [](const char* g, int r, int s) { return std::string(g) + "_{" + std::to_string(r) + "," + std::to_string(s) + "}"; };
    for (int r = 0; r <= d; ++r) {
        out.push_back({"1_" + std::to_string(r), schur_one(d, r)});
        if (r < d) out.push_back({name("E", r, r + 1), schur_E(d, r)});
        if (r > 0) out.push_back({name("F", r, r - 1), schur_F(d, r)});
        out.push_back({"K_" + std::to_string(r), schur_K(d, r)});
        out.push_back({"K_" + std::to_string(r) + "^-1", schur_Kinv(d, r)});
    }
    return out;
}

SchurElement divided_generator(int d, int r, int a, Direction dir) {
    if (a < 0) throw std::out_of_range("divided_generator needs a >= 0");
    check_weight(d, r);
    check_weight(d, dir == Direction::E ? r + a : r - a);
    SchurElement x = schur_one(d, r);
    for (int j = 0; j < a; ++j) x = x * (dir == Direction::E ? schur_E(d, r + j) : schur_F(d, r - j));
    return divide_exact(std::move(x), qfact_vt(a));
}

SchurElement recipe_a(const ThetaMatrix& A) {
    if (!A.valid() || A.a22 > A.a11) throw std::invalid_argument("recipe (a) needs a22 <= a11");
    const int d = A.degree(), a = A.a21, b = A.a12, r = A.a11 + A.a12 + A.a21;
    SchurElement x = divided_generator(d, r - a, a, Direction::E) * schur_one(d, r) * divided_generator(d, r, b, Direction::F);
    return x * rf(Laurent::t(-(a * (r - a) + b * (r - b))));
}

SchurElement recipe_b(const ThetaMatrix& A) {
    if (!A.valid() || A.a22 < A.a11) throw std::invalid_argument("recipe (b) needs a22 >= a11");
    const int d = A.degree(), a = A.a21, b = A.a12, r = A.a11;
    SchurElement x = divided_generator(d, r + b, b, Direction::F) * schur_one(d, r) * divided_generator(d, r, a, Direction::E);
    return x * rf(Laurent::t(-(a + b) * r));
}

const SchurElement& canonical_basis_element(const ThetaMatrix& A) {
    if (!A.valid()) throw std::invalid_argument("ThetaMatrix with a negative entry");
    return model_with_basis(A.degree()).canonical.at(A);
}

Expansion expand_in_basis(const SchurElement& x) {
    const Model& m = model_with_basis(x.degree());
    Expansion out;
    for (const auto& [key, blk] : x.blocks()) {
        auto it = m.blocks.find(key);
        if (it == m.blocks.end() || !it->second.independent)
            throw NotInSpan("block (" + std::to_string(key.first) + "," + std::to_string(key.second) + ") has no basis");
        const BlockBasis& bb = it->second;
        const auto k = static_cast<Eigen::Index>(bb.members.size());
        MatRF row(1, k);
        for (Eigen::Index p = 0; p < k; ++p) row(0, p) = blk(bb.positions[static_cast<std::size_t>(p)].first, bb.positions[static_cast<std::size_t>(p)].second);
        const MatRF coeffs = mul(row, bb.inverse);
        MatRF rebuilt = MatRF::Zero(blk.rows(), blk.cols());
        for (Eigen::Index a = 0; a < k; ++a) {
            const RationalFunction& c = coeffs(0, a);
            if (c.is_zero()) continue;
            const ThetaMatrix& A = bb.members[static_cast<std::size_t>(a)];
            out.emplace(A, c);
            rebuilt += scaled(m.canonical.at(A).block(key.first, key.second), c);
        }
        if (!equal(rebuilt, blk))
            throw NotInSpan("block (" + std::to_string(key.first) + "," + std::to_string(key.second) + ") is not in the span of the {A}-basis");
    }
    return out;
}

SchurElement from_basis(int d, const Expansion& e) {
    SchurElement x(d);
    for (const auto& [A, c] : e) {
        if (A.degree() != d) throw std::invalid_argument("from_basis: matrix of the wrong degree");
        x += canonical_basis_element(A) * c;
    }
    return x;
}

bool basis_independent(int d) {
    const Model& m = model_with_basis(d);
    std::int64_t total = 0;
    for (const auto& [key, bb] : m.blocks) {
        if (!bb.independent) return false;
        total += static_cast<std::int64_t>(bb.members.size());
    }
    return total == binomial(d + 3, 3);
}

namespace {

// Flattened 1_r chi(F^a E^b) 1_{r'} for every (a, b) with a - b = r - r'.
// K^s acts on a block by a scalar and the K eigenvalues of distinct weights
// differ, so chi(U) is the direct sum of these block spans.
std::vector<MatRF> chi_block_images(const Model& m, int r, int rp) {
    std::vector<MatRF> out;
    for (int b = 0; b <= rp; ++b) {
        const int a = r - rp + b;
        if (a < 0) continue;
        out.push_back(mul(f_chain(m, r, rp - b), e_chain(m, rp - b, rp)));
    }
    return out;
}

MatRF stack_rows(const std::vector<MatRF>& ms) {
    const Eigen::Index n = ms.front().size();
    MatRF out(static_cast<Eigen::Index>(ms.size()), n);
    for (std::size_t i = 0; i < ms.size(); ++i)
        out.row(static_cast<Eigen::Index>(i)) = Eigen::Map<const VecRF>(ms[i].data(), n).transpose();
    return out;
}

}  // namespace

int chi_image_rank(int d) {
    const Model& m = model(d);
    int total = 0;
    for (int r = 0; r <= d; ++r)
        for (int rp = 0; rp <= d; ++rp) total += rank(stack_rows(chi_block_images(m, r, rp)));
    return total;
}

bool basis_in_chi_image(int d) {
    const Model& m = model_with_basis(d);
    for (int r = 0; r <= d; ++r)
        for (int rp = 0; rp <= d; ++rp) {
            std::vector<MatRF> images = chi_block_images(m, r, rp);
            const int base = rank(stack_rows(images));
            for (const auto& A : theta(d))
                if (A.target() == r && A.source() == rp) images.push_back(m.canonical.at(A).block(r, rp));
            if (rank(stack_rows(images)) != base) return false;
        }
    return true;
}

int unit_positive_exponent(const RationalFunction& c) {
    if (c.is_zero() || !c.is_laurent()) return -1;
    const int k = c.num().real_unit_factor();
    if (k < 0) return -1;
    const Laurent p = c.num().rotated(-k);
    for (const auto& t : p.terms())
        if (t.coeff.re.sign() <= 0) return -1;
    return k;
}

std::vector<StructureConstant> structure_constants(int d, int jobs) {
    const Model& m = model_with_basis(d);
    std::vector<std::pair<ThetaMatrix, ThetaMatrix>> pairs;
    for (const auto& [A, x] : m.canonical)
        for (const auto& [B, y] : m.canonical)
            if (A.source() == B.target()) pairs.emplace_back(A, B);
    auto parts = parallel_map(pairs.size(), jobs, [&](std::size_t i) {
        const auto& [A, B] = pairs[i];
        return expand_in_basis(m.canonical.at(A) * m.canonical.at(B));
    });
    std::vector<StructureConstant> out;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (const auto& [C, c] : parts[i]) out.push_back({pairs[i].first, pairs[i].second, C, c});
    return out;
}

RelationReport verify_schur_relations(int d) {
    RelationReport rep;
    auto one = [d](int r) { return schur_one(d, r); };
    auto tag = [](const std::string& what, int r) { return what + " r=" + std::to_string(r); };
    const SchurElement zero(d);

    // Idempotents.
    for (int r = 0; r <= d; ++r)
        for (int rp = 0; rp <= d; ++rp) {
            rep.expect(one(r) * one(rp) == (r == rp ? one(r) : zero), tag("1_r 1_r'", r) + " r'=" + std::to_string(rp));
            if (r < d) {
                const SchurElement e = schur_E(d, r);
                rep.expect(e * one(rp) == (rp == r + 1 ? e : zero), tag("E_{r,r+1} 1_r'", r) + " r'=" + std::to_string(rp));
                rep.expect(one(rp) * e == (rp == r ? e : zero), tag("1_r' E_{r,r+1}", r) + " r'=" + std::to_string(rp));
            }
            if (r > 0) {
                const SchurElement f = schur_F(d, r);
                rep.expect(f * one(rp) == (rp == r - 1 ? f : zero), tag("F_{r,r-1} 1_r'", r) + " r'=" + std::to_string(rp));
                rep.expect(one(rp) * f == (rp == r ? f : zero), tag("1_r' F_{r,r-1}", r) + " r'=" + std::to_string(rp));
            }
        }

    // Commutator relation: boundary sums and closed form.
    const RationalFunction t2 = rf(Laurent::t(2));
    for (int r = 0; r <= d; ++r) {
        const SchurElement ef = r < d ? schur_E(d, r) * schur_F(d, r + 1) : zero;
        const SchurElement fe = r > 0 ? schur_F(d, r) * schur_E(d, r - 1) : zero;
        SchurElement lhs = ef, rhs = fe * t2;
        for (int j = 0; j < 2 * r - d; ++j) lhs += one(r) * rf(twist(2 * r - 2 * j - 1 - d, 4 * r - 2 * j - d - 1));
        for (int j = 0; j < d - 2 * r; ++j) rhs += one(r) * rf(twist(d - 2 * j - 1 - 2 * r, d - 1 - 2 * j));
        rep.expect(lhs == rhs, tag("E F (+) boundary = F E(1) (+) boundary", r));
        rep.expect(ef - fe * t2 == one(r) * rf(qint_v(d - 2 * r).rotated(2 * r)), tag("E F - t^2 F E = t^2r [d-2r]_v 1_r", r));
    }

    // Products of divided generators.
    for (int r = 0; r <= d; ++r)
        for (int a = 0; r + a + 1 <= d; ++a) {
            Laurent sum;
            for (int j = 0; j <= a; ++j) sum += twist(a - 2 * j, 2 * (a - j));
            rep.expect(sum == qint_vt(a + 1), "sum_j v^(a-2j) t^a = [a+1]_{v,t} a=" + std::to_string(a));
            rep.expect(divided_generator(d, r, a, Direction::E) * schur_E(d, r + a) ==
                           divided_generator(d, r, a + 1, Direction::E) * rf(qint_vt(a + 1)),
                       tag("E_{r,r+a} E_{r+a,r+a+1} = [a+1] E_{r,r+a+1} a=" + std::to_string(a), r));
        }
    for (int r = 0; r <= d; ++r)
        for (int a = 0; r - a - 1 >= 0; ++a)
            rep.expect(divided_generator(d, r, a, Direction::F) * schur_F(d, r - a) ==
                           divided_generator(d, r, a + 1, Direction::F) * rf(qint_vt(a + 1)),
                       tag("F_{r,r-a} F_{r-a,r-a-1} = [a+1] F_{r,r-a-1} a=" + std::to_string(a), r));

    // The two recipes for {A}, and the overlap identity.
    for (const auto& A : theta(d)) {
        const SchurElement& x = canonical_basis_element(A);
        rep.expect(x.blocks().size() == 1 && x.blocks().begin()->first == std::make_pair(A.target(), A.source()),
                   "{" + A.to_string() + "} is a nonzero element of its block");
        if (A.a11 == A.a22) rep.expect(recipe_a(A) == recipe_b(A), "recipes (a) and (b) agree on " + A.to_string());
    }
    for (int r = 0; r <= d; ++r)
        for (int a = 0; a <= r; ++a)
            for (int b = 0; a + b <= r; ++b) {
                if (2 * r - a - b != d) continue;
                const SchurElement lhs = divided_generator(d, r - a, a, Direction::E) * one(r) * divided_generator(d, r, b, Direction::F);
                const SchurElement rhs = divided_generator(d, d - r + b, b, Direction::F) * one(d - r) *
                                         divided_generator(d, d - r, a, Direction::E) * rf(Laurent::t(2 * a * b));
                rep.expect(lhs == rhs, "E_{r-a,r} 1_r F_{r,r-b} = F 1_{d-r} E (ab) r=" + std::to_string(r) + " a=" +
                                           std::to_string(a) + " b=" + std::to_string(b));
            }

    // Action on F_{r,0}.
    SchurElement E(d), F(d), K(d);
    for (int r = 0; r <= d; ++r) {
        if (r < d) E += schur_E(d, r);
        if (r > 0) F += schur_F(d, r);
        K += schur_K(d, r);
    }
    for (int r = 0; r <= d; ++r) {
        const SchurElement fr = divided_generator(d, r, r, Direction::F);
        rep.expect(K * fr == fr * rf(twist(d - 2 * r, d)), tag("K F_{r,0} = v^(d-2r) t^2r F_{r,0}", r));
        rep.expect(F * fr == (r < d ? divided_generator(d, r + 1, r + 1, Direction::F) * rf(qint_v(r + 1).rotated(r)) : zero),
                   tag("F F_{r,0} = t^r [r+1]_v F_{r+1,0}", r));
        rep.expect(E * fr == (r > 0 ? divided_generator(d, r - 1, r - 1, Direction::F) * rf(qint_v(d + 1 - r).rotated(r - 1)) : zero),
                   tag("E F_{r,0} = t^(r-1) [d+1-r]_v F_{r-1,0}", r));
    }
    return rep;
}

SchurElement chi(const UElement& u, int d) {
    const Model& m = model(d);
    SchurElement out(d);
    for (const auto& [mono, c] : u.terms()) {
        for (int rp = mono.b; rp <= d; ++rp) {
            const int mid = rp - mono.b;
            const int r = mid + mono.a;
            if (r > d) continue;
            const RationalFunction k = k_eigenvalue(d, mid).pow(mono.s);
            out.add_block(r, rp, scaled(mul(f_chain(m, r, mid), e_chain(m, mid, rp)), k * c));
        }
    }
    return out;
}

RelationReport verify_chi(int d) {
    RelationReport rep;
    const SchurElement E = chi(UElement::E(), d), F = chi(UElement::F(), d), K = chi(UElement::K(), d),
                       Ki = chi(UElement::Kinv(), d), one = chi(UElement(RationalFunction(1)), d);
    const RationalFunction minus_v2 = rf(Laurent::monomial(GaussianInt(-1), 2));
    const RationalFunction minus_vm2 = rf(Laurent::monomial(GaussianInt(-1), -2));
    const RationalFunction h = RationalFunction(1) / rf(Laurent::v(1) - Laurent::v(-1));
    rep.expect(K * Ki == one && Ki * K == one, "chi: K K^-1 = K^-1 K = 1");
    rep.expect(K * E == E * K * minus_v2, "chi: K E = v^2 t^-2 E K");
    rep.expect(K * F == F * K * minus_vm2, "chi: K F = v^-2 t^2 F K");
    rep.expect(E * F + F * E == (K - Ki) * h, "chi: E F - t^2 F E = (K - K^-1)/(v - v^-1)");
    std::vector<UElement> sample;
    for (int a = 0; a <= 2; ++a)
        for (int s = -1; s <= 1; ++s)
            for (int b = 0; b <= 2; ++b) sample.push_back(UElement::monomial({a, s, b}));
    for (const auto& x : sample)
        for (const auto& y : sample)
            rep.expect(chi(x * y, d) == chi(x, d) * chi(y, d), "chi(x y) = chi(x) chi(y) for x = " + x.to_string() + ", y = " + y.to_string());
    return rep;
}

SchurElement psi_transfer(const SchurElement& x) {
    const int d = x.degree() - 2;
    if (d < 0) throw std::domain_error("psi_transfer needs degree >= 2");
    SchurElement out(d);
    for (const auto& [A, c] : expand_in_basis(x)) {
        if (A.a11 < 1 || A.a22 < 1) continue;
        out += canonical_basis_element(A.shifted(-1)) * c;
    }
    return out;
}

Json expansion_to_json(const Expansion& e) {
    Json out = Json::array();
    for (const auto& [A, c] : e) out.push_back(Json{{"A", A.to_json()}, {"coeff", to_json(c)}});
    return out;
}

std::string element_to_string(const SchurElement& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [A, c] : expand_in_basis(x)) {
        if (!s.empty()) s += " + ";
        if (!c.is_one()) s += "(" + c.to_string() + ") ";
        s += "{" + A.to_string() + "}";
    }
    return s;
}

}  // namespace qschur
