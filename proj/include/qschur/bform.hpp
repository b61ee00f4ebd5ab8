#pragma once

// The anti-automorphism rho of S_{v,t}(2,d) and the contravariant form on Lambda_d.
//
//   rho(1_r) = 1_r,  rho(K_r) = K_r
//   rho(E_{r,r+1}) = v t^{-2r-2} K_{r+1} F_{r+1,r}
//   rho(F_{r+1,r}) = v t^{2r} K_r^{-1} E_{r,r+1}

#include <stdexcept>
#include <vector>

#include "qschur/check.hpp"
#include "qschur/schur.hpp"

namespace qschur {

struct InconsistentRecursion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SchurElement rho_E(int d, int r);  // rho(E_{r,r+1})
SchurElement rho_F(int d, int r);  // rho(F_{r+1,r})
/// Anti-homomorphic extension, applied through the {A}-expansion.
SchurElement rho(const SchurElement& x);

/// Matrix of x on Lambda_d, embedded in the tensor space by xi_r -> F_{r,0} xi_0^{(x)d}.
/// Throws NotInSpan if the image leaves the embedded copy.
MatRF action_on_simple(const SchurElement& x);

struct GramForm {
    int d = 0;
    std::vector<RationalFunction> diag;  // <xi_r, xi_s> = delta_rs diag[r]
    Json to_json() const;
};

/// g_0 = 1 and F-adjunction fix the form; E-adjunction is then checked and a
/// conflict throws InconsistentRecursion.
GramForm derive_gram(int d);

/// <g m, n> = <m, rho(g) n> for every generator g and basis pair.
RelationReport check_contravariance(const GramForm& g);
/// rho(x_1 ... x_k) = rho(x_k) ... rho(x_1) for composable generator chains, k <= max_len.
RelationReport check_rho_reversal(int d, int max_len);

}  // namespace qschur
