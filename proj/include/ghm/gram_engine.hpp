#ifndef GHM_GRAM_ENGINE_HPP
#define GHM_GRAM_ENGINE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "ghm/bigfloat.hpp"
#include "ghm/exact_matrix.hpp"
#include "ghm/rational.hpp"

namespace ghm {

/// Generator bundle for one orthogonal system.
///
/// The orthonormal coefficients factor as a(n,k) = d_n * core(n,k) with
/// d_n = sqrt(scale_sq(n)) never materialized, so every identity evaluates
/// in exact rational arithmetic. When the two bases differ, the dual
/// expansion shares the same scales: b(n,k) = d_n * dual_core(n,k).
struct OrthoSystemSpec {
    std::function<ComplexRational(int, int)> coeff_core;       // core(n,k), k <= n
    std::function<Rational(int)> scale_sq;                     // d2(n) > 0
    std::function<ComplexRational(int, int)> connection;       // c(n,k); identity if unset
    bool same_basis = true;
    std::function<ComplexRational(int, int)> dual_core;        // required when !same_basis
    int max_order = -1;                                        // -1 = unbounded

    ComplexRational connection_at(int n, int k) const;
    bool order_available(int n) const { return max_order < 0 || n <= max_order; }
};

/// Lower-triangular coefficient matrix in factored form: rational core
/// plus squared diagonal scales.
struct FactoredTriangular {
    ExactMatrix core;           // zero above the diagonal, nonzero on it
    std::vector<Rational> scale_sq;

    int order() const { return core.size() - 1; }
};

/// Orthonormal coefficients of the system through order n.
/// Throws DomainError on a zero diagonal or nonpositive scale.
FactoredTriangular orthonormal_coefficients(const OrthoSystemSpec& sys, int n);

/// The generalized moment matrix H of order n, from the factored
/// coefficient inverses; the square-root scales pair up and cancel.
ExactMatrix moment_matrix(const OrthoSystemSpec& sys, int n);

/// Inverse of the moment matrix assembled directly from the coefficient
/// sums, without inverting anything.
ExactMatrix factored_inverse(const OrthoSystemSpec& sys, int n);

struct ClosedDeterminants {
    Rational gram;           // det of the one-basis Gram matrix
    ComplexRational moment;  // det of H
};
ClosedDeterminants closed_determinants(const OrthoSystemSpec& sys, int n);

/// G = H (C*)^-1 for lower-triangular nonsingular C.
ExactMatrix recover_gram(const ExactMatrix& h, const ExactMatrix& c);

/// Rescaled inverse: given Y = X^-1, the inverse of (e x_jk cvec_j dvec_k)
/// is (y_jk / (e dvec_j cvec_k)). All scale factors must be nonzero.
ExactMatrix rescaled_inverse(const ExactMatrix& y, const ComplexRational& e,
                             const std::vector<ComplexRational>& cvec,
                             const std::vector<ComplexRational>& dvec);

/// Smallest-eigenvalue lower bounds from the coefficient norms.
/// b1 = 1 / sum_l d2_l sum_{j<=l} |core(l,j)|^2           (always exact)
/// b2 = 1 / sum_l d2_l (sum_{j<=l} |core(l,j)|)^2         (exact when the
/// cores are real; otherwise directed rounding keeps it a true bound).
struct CoefficientBounds {
    Rational b1_exact;
    BigFloat b1;
    std::optional<Rational> b2_exact;
    BigFloat b2;
};
CoefficientBounds coefficient_bounds(const OrthoSystemSpec& sys, int n, long prec);

/// Bound from evaluating the factored polynomials at a unit-modulus point:
/// 1 / sum_l d2_l |sum_k core(l,k) z0^k|^2. Certified (<= lambda_min) only
/// when the per-row sign-alignment predicate holds at z0.
struct CircleBound {
    Rational exact;
    BigFloat value;
    bool aligned;
};
CircleBound unit_circle_bound(const OrthoSystemSpec& sys, int n, const ComplexRational& z0,
                              long prec);

/// Exact alignment predicate: every nonzero core(l,k) z0^k in row l lies on
/// one common ray.
bool sign_alignment_holds(const OrthoSystemSpec& sys, int n, const ComplexRational& z0);

/// The same bound through the Christoffel-Darboux form
/// core(n+1,n+1) / (d2_n core(n,n) W), W the Wronskian-type combination of
/// the factored polynomials at z0. Requires generators through order n+1
/// and real values at z0.
struct CdBound {
    Rational exact;
    BigFloat value;
};
CdBound christoffel_darboux_bound(const OrthoSystemSpec& sys, int n, const ComplexRational& z0,
                                  long prec);

} // namespace ghm

#endif
