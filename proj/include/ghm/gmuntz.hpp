#ifndef GHM_GMUNTZ_HPP
#define GHM_GMUNTZ_HPP

#include <vector>

#include "ghm/muntz.hpp"

namespace ghm::gmuntz {

/// Parameters for the generalized Muntz matrix
/// (1 / (c alpha_j conj(alpha_k) - a (alpha_j + conj(alpha_k)) - b)).
struct Params {
    Rational a, b, c;
    std::vector<ComplexRational> alphas;

    void validate() const;
    /// Positive definite regime: a^2 + bc > 0 and every diagonal weight
    /// c|alpha_k|^2 - 2a Re(alpha_k) - b > 0.
    bool pd_mode() const;
    bool all_real() const;
    int max_order() const { return static_cast<int>(alphas.size()) - 1; }

    /// c alpha_j conj(alpha_k) - a (alpha_j + conj(alpha_k)) - b.
    ComplexRational denom(int j, int k) const;
    /// c |alpha_k|^2 - 2a Re(alpha_k) - b.
    Rational diag_weight(int k) const;
    Rational discriminant() const { return a * a + b * c; }
};

ComplexRational entry(const Params& p, int j, int k);

OrthoSystemSpec system(const Params& p);

Rational closed_det(const Params& p, int n);

ComplexRational closed_inverse_entry(const Params& p, int n, int j, int k);

BoundValue closed_bound(const Params& p, int n, long prec);

/// Published ranges (products stopping at n-1 / m-1), for errata.
ComplexRational published_coefficient(const Params& p, int n, int k);
ComplexRational published_inverse_entry(const Params& p, int n, int j, int k);

} // namespace ghm::gmuntz

#endif
