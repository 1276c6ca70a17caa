#ifndef GHM_MUNTZ_HPP
#define GHM_MUNTZ_HPP

#include <vector>

#include "ghm/gram_engine.hpp"

namespace ghm {

/// Lower bound value; exact rational form present whenever the defining
/// sums stay rational.
struct BoundValue {
    std::optional<Rational> exact;
    BigFloat value;
};

namespace muntz {

/// Exponent set for the Muntz matrix (1 / (alpha_j + conj(alpha_k) + 1)).
struct Params {
    std::vector<ComplexRational> alphas;

    /// Pairwise distinct exponents with alpha_j + conj(alpha_k) + 1 != 0.
    void validate() const;
    /// Positive definite regime: Re(alpha_k) > -1/2 for all k.
    bool pd_mode() const;
    bool all_real() const;
    int max_order() const { return static_cast<int>(alphas.size()) - 1; }
};

ComplexRational entry(const Params& p, int j, int k);

OrthoSystemSpec system(const Params& p);

Rational closed_det(const Params& p, int n);

ComplexRational closed_inverse_entry(const Params& p, int n, int j, int k);

/// Smallest-eigenvalue lower bound (the inf-norm coefficient bound for
/// this system). Requires pd_mode.
BoundValue closed_bound(const Params& p, int n, long prec);

/// Verbatim published forms, for erratum reporting: coefficient with the
/// denominator product stopping at n-1, and the inverse with both
/// denominator products stopping at m-1.
ComplexRational published_coefficient(const Params& p, int n, int k);
ComplexRational published_inverse_entry(const Params& p, int n, int j, int k);

} // namespace muntz
} // namespace ghm

#endif
