#ifndef GHM_QSERIES_HPP
#define GHM_QSERIES_HPP

#include "ghm/bigfloat.hpp"
#include "ghm/complex_rational.hpp"
#include "ghm/rational.hpp"

namespace ghm {

/// Finite q-Pochhammer product prod_{k=0}^{m-1} (1 - a q^k).
/// Empty product (= 1) for m = 0.
ComplexRational qpoch_finite(const ComplexRational& a, const Rational& q, long m);
Rational qpoch_finite(const Rational& a, const Rational& q, long m);

/// Gaussian binomial [m, j]_q = (q;q)_m / ((q;q)_j (q;q)_{m-j}).
/// Requires 0 <= j <= m and (q;q)_m != 0.
Rational qbinomial(long m, long j, const Rational& q);

/// Infinite product (a;q)_inf for 0 < q < 1, truncated so the relative
/// truncation error is below eps/2; remaining error comes from prec-bit
/// rounding. Throws DomainError for nonconvergent q.
BigFloat qpoch_infinite(const BigFloat& a, const BigFloat& q, const BigFloat& eps, long prec);

} // namespace ghm

#endif
