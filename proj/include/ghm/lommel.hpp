#ifndef GHM_LOMMEL_HPP
#define GHM_LOMMEL_HPP

#include "ghm/muntz.hpp"

namespace ghm::lommel {

/// Parameters for the even q-Lommel moment matrix. The irrational power
/// q^(nu+1) is carried as an independent rational V in (0,1), so every
/// quantity of the family stays exact; q^nu is recovered as V/q.
struct Params {
    Rational q;
    Rational V;

    void validate() const;
    int max_order() const { return -1; } // defined for every order
};

/// Coefficient of x^(2k) in the degree-2n even q-Lommel polynomial at
/// shifted index, expressed in (q, V). Requires 0 <= k <= n.
Rational h_coeff(int n, int k, const Rational& q, const Rational& V);

OrthoSystemSpec system(const Params& p);

/// Corrected closed determinant:
/// V^(n(n+1)) q^(n(n+1)(4n-1)/6) / (2^(2n(n+1)) (V;q^2)_{n+1} prod (V;q)_{2m}^2).
Rational closed_det(const Params& p, int n);

Rational closed_inverse_entry(const Params& p, int n, int j, int k);

/// Lower bound via evaluation at -1 in the x^2 variable; the coefficient
/// signs alternate so the alignment hypothesis holds and the value is
/// certified.
BoundValue closed_bound(const Params& p, int n, long prec);

/// Verbatim published determinant (unsquared Pochhammer product, 2^-n(n+1),
/// six-times-larger q exponent) and published bound denominator (exponent
/// l(2n+1) in place of l(2l+1)), for errata.
Rational published_det(const Params& p, int n);
Rational published_bound_denominator(const Params& p, int n);

} // namespace ghm::lommel

#endif
