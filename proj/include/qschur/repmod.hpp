#pragma once

// Finite-dimensional weight modules given by generator matrices.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qschur/check.hpp"
#include "qschur/eigen.hpp"
#include "qschur/serialize.hpp"

namespace qschur {

struct NotWeightModule : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotTypePlus : std::domain_error {
    using std::domain_error::domain_error;
};

/// Weight lambda with sign: K acts by sign * v^lambda * t^(-lambda - p(lambda)).
struct WeightLabel {
    int lambda = 0;
    int sign = 1;
    int parity = 0;  // p(lambda)
    friend auto operator<=>(const WeightLabel&, const WeightLabel&) = default;
};

/// K eigenvalue of a weight label.
RationalFunction weight_eigenvalue(int lambda, int sign);

template <class Scalar>
struct BasicWeightModule {
    std::vector<std::string> ids;  // basis vector names
    std::vector<int> grading;      // super parity of each basis vector
    Mat<Scalar> E, F, K, Kinv;

    int dim() const { return static_cast<int>(ids.size()); }
};

using WeightModule = BasicWeightModule<RationalFunction>;

/// Lambda_d^{+-} on xi_0..xi_d.
WeightModule simple_module(int d, int sign = 1);
WeightModule direct_sum(const WeightModule& m, const WeightModule& n);
/// Basis m_i (x) n_j in row-major order; E, F, K act through the comultiplication
/// with the super sign (-1)^{p(b)p(m)}.
WeightModule tensor(const WeightModule& m, const WeightModule& n);
/// Lambda_{d_1} (x) ... (x) Lambda_{d_k}, bracketed left to right.
WeightModule tensor_power(const std::vector<int>& degrees);

/// K K^-1 = 1, K E = v^2 t^-2 E K, K F = v^-2 t^2 F K, E F - t^2 F E = (K - K^-1)/(v - v^-1).
RelationReport verify_module(const WeightModule& m);

struct WeightMultiplicity {
    int lambda;
    int sign;
    int multiplicity;
};

/// Label of every basis vector; throws NotWeightModule.
std::vector<WeightLabel> weight_labels(const WeightModule& m);
std::vector<WeightMultiplicity> weight_decompose(const WeightModule& m);

/// Dimension of the submodule generated by a vector.
int generated_dimension(const WeightModule& m, const VecRF& vector);
/// No proper nonzero invariant subspace.
bool simplicity_check(const WeightModule& m);

/// Entries of E^(n), F^(n) (n <= max_n) and K^{+-1} that are not Laurent polynomials.
RelationReport integrality_check(const WeightModule& m, int max_n);
/// E^n / [n]!_{v,t} as a matrix.
MatRF divided_action(const MatRF& x, int n);

/// Idempotented module: weight spaces and the blocks E_{lambda+2,lambda}, F_{lambda-2,lambda}.
struct UdotModule {
    int type = 1;                               // +1: from C+, -1: from C- with E twisted by -1
    std::vector<std::string> ids;
    std::vector<int> grading;
    std::map<int, std::vector<int>> weight_spaces;  // lambda -> basis indices
    std::map<int, MatRF> E_blocks;                  // keyed by source weight lambda
    std::map<int, MatRF> F_blocks;                  // keyed by source weight lambda

    /// Checks E F - t^2 F E = t^(-lambda-p(lambda)) [lambda]_v on every weight space.
    RelationReport verify() const;
};

/// Requires every weight sign to be +1.
UdotModule to_udot(const WeightModule& m);
/// Variant for modules of type -: E acts by -E so that the same relation holds.
UdotModule to_udot_minus(const WeightModule& m);
WeightModule from_udot(const UdotModule& n);

bool same_module(const WeightModule& a, const WeightModule& b);

Json module_to_json(const WeightModule& m);
/// Action table rows like "E xi_2 = i xi_1".
std::vector<std::string> action_table(const WeightModule& m);

}  // namespace qschur
