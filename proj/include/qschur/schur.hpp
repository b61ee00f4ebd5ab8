#pragma once

// The q-Schur algebra S_{v,t}(2,d) realized on the tensor space Lambda_1^{(x)d}.
//
// The weight-r component of the tensor space is spanned by the 0/1 sequences
// with r ones (in increasing kron index).  E lowers r, F raises it, and an
// element is a set of blocks (target r, source r').

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qschur/check.hpp"
#include "qschur/eigen.hpp"
#include "qschur/serialize.hpp"
#include "qschur/ualg.hpp"

namespace qschur {

class UdotElement;

struct NotInSpan : std::domain_error {
    using std::domain_error::domain_error;
};

/// C(n, k), zero outside 0 <= k <= n.
std::int64_t binomial(int n, int k);

/// 2x2 matrix with nonnegative entries summing to d.
struct ThetaMatrix {
    int a11 = 0, a12 = 0, a21 = 0, a22 = 0;

    int degree() const noexcept { return a11 + a12 + a21 + a22; }
    int target() const noexcept { return a11 + a12; }
    int source() const noexcept { return a11 + a21; }
    bool valid() const noexcept { return a11 >= 0 && a12 >= 0 && a21 >= 0 && a22 >= 0; }
    /// r(A) = (a11 + a12)(a21 + a22)
    int r_stat() const noexcept { return (a11 + a12) * (a21 + a22); }
    /// d(A) - r(A) = a11 a12 + a21 a12 + a21 a22
    int codim() const noexcept { return a11 * a12 + a21 * a12 + a21 * a22; }
    /// A + m I
    ThetaMatrix shifted(int m) const noexcept { return {a11 + m, a12, a21, a22 + m}; }
    static ThetaMatrix diag(int r, int d) { return {r, 0, 0, d - r}; }

    friend auto operator<=>(const ThetaMatrix&, const ThetaMatrix&) = default;
    /// "[[a11,a12],[a21,a22]]"
    std::string to_string() const;
    Json to_json() const;
    static ThetaMatrix from_json(const Json& j);
};

/// All of Theta_d in lexicographic order of (a11, a12, a21, a22).
std::vector<ThetaMatrix> theta(int d);

template <class Scalar>
class BasicSchurElement {
public:
    using BlockKey = std::pair<int, int>;  // (target r, source r')
    using Blocks = std::map<BlockKey, Mat<Scalar>>;

    BasicSchurElement() = default;
    explicit BasicSchurElement(int d) : d_(d) {}

    int degree() const noexcept { return d_; }
    const Blocks& blocks() const noexcept { return blocks_; }
    bool is_zero() const noexcept { return blocks_.empty(); }

    Mat<Scalar> block(int r, int rp) const {
        auto it = blocks_.find({r, rp});
        if (it != blocks_.end()) return it->second;
        return Mat<Scalar>::Zero(binomial(d_, r), binomial(d_, rp));
    }

    void add_block(int r, int rp, const Mat<Scalar>& m) {
        check_index(r);
        check_index(rp);
        if (m.rows() != binomial(d_, r) || m.cols() != binomial(d_, rp))
            throw std::invalid_argument("SchurElement: block shape does not match the weight spaces");
        auto it = blocks_.find({r, rp});
        if (it == blocks_.end()) {
            if (!qschur::is_zero(m)) blocks_.emplace(BlockKey{r, rp}, m);
            return;
        }
        it->second += m;
        if (qschur::is_zero(it->second)) blocks_.erase(it);
    }

    BasicSchurElement& operator+=(const BasicSchurElement& o) {
        same_degree(o);
        for (const auto& [k, m] : o.blocks_) add_block(k.first, k.second, m);
        return *this;
    }
    BasicSchurElement& operator-=(const BasicSchurElement& o) {
        same_degree(o);
        for (const auto& [k, m] : o.blocks_) add_block(k.first, k.second, -m);
        return *this;
    }
    BasicSchurElement& operator*=(const Scalar& c) {
        if (c.is_zero()) blocks_.clear();
        for (auto& [k, m] : blocks_) m = scaled(m, c);
        return *this;
    }
    friend BasicSchurElement operator+(BasicSchurElement a, const BasicSchurElement& b) { return a += b; }
    friend BasicSchurElement operator-(BasicSchurElement a, const BasicSchurElement& b) { return a -= b; }
    friend BasicSchurElement operator*(BasicSchurElement a, const Scalar& c) { return a *= c; }
    friend BasicSchurElement operator*(const Scalar& c, BasicSchurElement a) { return a *= c; }

    /// Composition x o y (apply y first).
    friend BasicSchurElement operator*(const BasicSchurElement& x, const BasicSchurElement& y) {
        x.same_degree(y);
        BasicSchurElement out(x.d_);
        for (const auto& [kx, mx] : x.blocks_)
            for (const auto& [ky, my] : y.blocks_)
                if (kx.second == ky.first) out.add_block(kx.first, ky.second, mul(mx, my));
        return out;
    }

    friend bool operator==(const BasicSchurElement& a, const BasicSchurElement& b) {
        if (a.d_ != b.d_ || a.blocks_.size() != b.blocks_.size()) return false;
        for (auto ia = a.blocks_.begin(), ib = b.blocks_.begin(); ia != a.blocks_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !equal(ia->second, ib->second)) return false;
        return true;
    }
    friend bool operator!=(const BasicSchurElement& a, const BasicSchurElement& b) { return !(a == b); }

private:
    void check_index(int r) const {
        if (r < 0 || r > d_) throw std::out_of_range("SchurElement: weight index out of range");
    }
    void same_degree(const BasicSchurElement& o) const {
        if (o.d_ != d_) throw std::invalid_argument("SchurElement: degree mismatch");
    }

    int d_ = 0;
    Blocks blocks_;
};

using SchurElement = BasicSchurElement<RationalFunction>;

/// Positions of the ones in the 0/1 sequences spanning weight r, as kron indices.
const std::vector<std::uint32_t>& weight_basis(int d, int r);

// Generators; each throws std::out_of_range outside 0 <= r <= d.
SchurElement schur_one(int d, int r);
/// E_{r,r+1}: weight r+1 -> r.
SchurElement schur_E(int d, int r);
/// F_{r,r-1}: weight r-1 -> r.
SchurElement schur_F(int d, int r);
/// K_r = v^{d-2r} t^{2r} 1_r
SchurElement schur_K(int d, int r);
SchurElement schur_Kinv(int d, int r);

struct NamedElement {
    std::string name;
    SchurElement value;
};
/// 1_r, E_{r,r+1}, F_{r,r-1}, K_r, K_r^-1 for every valid r.
std::vector<NamedElement> generators(int d);

enum class Direction { E, F };
/// E_{r,r+a} = E_{r,r+1} ... E_{r+a-1,r+a} / [a]!_{v,t}, F_{r,r-a} likewise.
/// Throws NotDivisible if an entry is not divisible.
SchurElement divided_generator(int d, int r, int a, Direction dir);

/// t^{2 n_1} E_{r-a,r} 1_r F_{r,r-b}; requires a22 <= a11.
SchurElement recipe_a(const ThetaMatrix& A);
/// t^{2 n_2} F_{r+b,r} 1_r E_{r,r+a}; requires a22 >= a11.
SchurElement recipe_b(const ThetaMatrix& A);
/// {A}: recipe (a) when a22 <= a11, recipe (b) otherwise.  Cached per degree.
const SchurElement& canonical_basis_element(const ThetaMatrix& A);

using Expansion = std::map<ThetaMatrix, RationalFunction>;
/// Coefficients of x in the {A}-basis; throws NotInSpan.
Expansion expand_in_basis(const SchurElement& x);
SchurElement from_basis(int d, const Expansion& e);

/// Every block's {A}-family has full rank; sum of ranks equals C(d+3,3).
bool basis_independent(int d);
/// Dimension of chi(U) computed blockwise from the images of F^a E^b.
int chi_image_rank(int d);
/// True if every {A} lies in the span of chi(U).
bool basis_in_chi_image(int d);

struct StructureConstant {
    ThetaMatrix A, B, C;
    RationalFunction coeff;
};
/// Nonzero coefficients of {A} o {B} in the {C}-basis, ordered by (A, B, C).
std::vector<StructureConstant> structure_constants(int d, int jobs = 1);

/// If p = i^k q with q in N[v, v^-1], nonzero, returns k in [0, 4); otherwise -1.
int unit_positive_exponent(const RationalFunction& c);

/// Exact checks of the idempotent relations, the commutator relation in its
/// boundary-sum and closed forms, products of divided generators, the
/// (a)/(b) overlap identity and the action on F_{r,0}.
RelationReport verify_schur_relations(int d);

/// chi(E) = sum E_{r,r+1}, chi(F) = sum F_{r,r-1}, chi(K) = sum K_r.
SchurElement chi(const UElement& u, int d);
/// Checks chi(gen) relations and chi(xy) = chi(x) chi(y) on sample products.
RelationReport verify_chi(int d);

/// {A} -> {A - I} (0 if A - I is not in Theta_d) on an element of degree d+2.
SchurElement psi_transfer(const SchurElement& x);

/// phi_d on the osp flavor: 1_l -> 1_r for l = d - 2r, E_{l,l-2} -> c E_{r,r+1},
/// F_{l,l+2} -> c F_{r,r-1} with c = t^{-(d+p(d))/2}; weights outside degree d map to 0.
SchurElement phi_d(const UdotElement& x, int d);
/// Scalar c above.
RationalFunction phi_d_scale(int d);

std::string element_to_string(const SchurElement& x);
Json expansion_to_json(const Expansion& e);

}  // namespace qschur
