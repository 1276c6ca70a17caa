#ifndef GHM_ASKEY_HPP
#define GHM_ASKEY_HPP

#include "ghm/muntz.hpp"

namespace ghm::askey {

/// Parameters for the q-moment matrix ((alpha;q)_{j+k} / (alphabeta;q)_{j+k}),
/// realized through the little q-Jacobi system with alpha = aq, beta = bq.
struct Params {
    Rational alpha;
    Rational beta;
    Rational q;

    /// Invertibility conditions through order n.
    void validate(int n) const;
    /// Positive definite regime: 0 < q, alpha, beta < 1.
    bool pd_mode() const;
    int max_order() const { return -1; }
};

/// mu_n / mu_0 = (alpha;q)_n / (alphabeta;q)_n.
Rational moment_ratio(int n, const Params& p);

/// Normalized moment entry (alpha;q)_{j+k} / (alphabeta;q)_{j+k}.
Rational entry(const Params& p, int j, int k);

OrthoSystemSpec system(const Params& p);

Rational closed_det(const Params& p, int n);

/// Closed inverse entry with the norm-consistent summand weights
/// (1-ab q^{2m-1})(alpha;q)_m (ab;q)_{m-1} / ((q,beta;q)_m (alpha q^{j+k})^m);
/// the published weights 1/((ab;q)_{2m} (ab q^{m-1};q)_m) fail the oracle
/// already at n = 1 and are kept separately for errata.
Rational closed_inverse_entry(const Params& p, int n, int j, int k);

/// Lower bound via evaluation at -1 (alignment holds in the pd regime).
BoundValue closed_bound(const Params& p, int n, long prec);

/// Terminating basic hypergeometric sum
/// sum_k (q^-n;q)_k (ab q^{n-1};q)_k (qx)^k / ((q;q)_k (alpha;q)_k).
ComplexRational little_q_jacobi(int n, const ComplexRational& x, const Params& p);

/// Series cross-check of the moment ratio: partial sums of
/// sum_m (beta;q)_m alpha^m q^{nm} / (q;q)_m, normalized by the n = 0 sum.
BigFloat moment_ratio_series(int n, const Params& p, long prec);

/// Bound recomputed through the infinite products (the norm carries
/// (ab;q)_inf / (alpha;q)_inf); agrees with closed_bound to rounding.
BigFloat infinite_product_bound(const Params& p, int n, long prec);

/// Published inverse entry and published bound (prefactor on the wrong
/// side of the norm), for errata.
Rational published_inverse_entry(const Params& p, int n, int j, int k);
BigFloat published_bound(const Params& p, int n, long prec);

} // namespace ghm::askey

#endif
