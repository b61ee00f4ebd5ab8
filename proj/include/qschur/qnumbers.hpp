#pragma once

// (v,t)-quantum combinatorics.  t is the Gaussian unit i.

#include "qschur/laurent.hpp"

namespace qschur {

/// [n]_v = (v^n - v^-n)/(v - v^-1); defined for every integer n.
Laurent qint_v(int n);
/// [n]!_v, n >= 0.
Laurent qfact_v(int n);
/// Gaussian binomial, 0 <= k <= n.
Laurent qbinom_v(int n, int k);

/// [n]_{v,t} from the defining fraction ((vt)^n - (vt^-1)^-n)/(vt - (vt^-1)^-1).
Laurent qint_vt(int n);
Laurent qfact_vt(int n);
Laurent qbinom_vt(int n, int k);

/// The same quantities through the closed forms t^(n-1)[n]_v, t^(n(n-1)/2)[n]!_v
/// and t^(k(n-k))[n k]_v; kept separate so the two routes can be compared.
Laurent qint_vt_closed(int n);
Laurent qfact_vt_closed(int n);
Laurent qbinom_vt_closed(int n, int k);

/// Decategorified Tate twist: [m](n) |-> v^m t^(2n-m).  The twist n may be a
/// half-integer, so it is passed doubled.
Laurent twist(int m, int two_n);

/// p(n) = n mod 2 in {0, 1}.
inline int parity(int n) noexcept { return ((n % 2) + 2) % 2; }

}  // namespace qschur
