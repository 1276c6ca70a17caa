#ifndef GHM_RATIONAL_POLYNOMIAL_HPP
#define GHM_RATIONAL_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "ghm/bigfloat.hpp"
#include "ghm/exact_matrix.hpp"
#include "ghm/rational.hpp"

namespace ghm {

/// Polynomial with exact rational coefficients, coeffs[k] multiplying x^k.
class RationalPolynomial {
public:
    RationalPolynomial() : coeffs_(1) {}
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
    const Rational& coeff(int k) const { return coeffs_[static_cast<size_t>(k)]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    RationalPolynomial derivative() const;

    friend RationalPolynomial operator-(const RationalPolynomial& p);
    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Scale so the leading coefficient has absolute value 1 (sign kept).
    RationalPolynomial sign_normalized() const;

    std::string str() const;

private:
    void strip();
    std::vector<Rational> coeffs_;
};

/// Euclidean division: returns {quotient, remainder}.
std::pair<RationalPolynomial, RationalPolynomial> poly_divmod(const RationalPolynomial& a,
                                                              const RationalPolynomial& b);

/// Monic gcd over the rationals.
RationalPolynomial poly_gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// Square-free part p / gcd(p, p').
RationalPolynomial square_free_part(const RationalPolynomial& p);

/// Characteristic polynomial det(xI - M) of a Hermitian matrix, monic with
/// exact rational coefficients (Faddeev-LeVerrier). Imaginary residue from
/// complex entries must cancel exactly. Throws NotHermitianError.
RationalPolynomial char_poly(const ExactMatrix& m);

/// Sturm chain of a square-free polynomial.
class SturmChain {
public:
    explicit SturmChain(const RationalPolynomial& square_free);
    /// Number of distinct real roots in (a, b], for non-root endpoints.
    int count_roots(const Rational& a, const Rational& b) const;
    int variations_at(const Rational& x) const;

private:
    std::vector<RationalPolynomial> chain_;
};

/// Distinct real roots in (a, b], each with multiplicity in p.
/// Intended for polynomials with all-real roots (characteristic
/// polynomials of Hermitian matrices).
struct IsolatedRoot {
    Rational lo, hi; // enclosure, lo == hi when the root is hit exactly
    int multiplicity;
};
std::vector<IsolatedRoot> isolate_real_roots(const RationalPolynomial& p);

/// Certified smallest eigenvalue of a Hermitian positive definite matrix.
/// lo <= lambda <= hi with hi - lo <= lambda * 2^-(prec) (lo == hi when the
/// eigenvalue is found exactly); value is the midpoint rounded to prec bits.
struct EigenvalueEnclosure {
    Rational lo, hi;
    BigFloat value;
};
EigenvalueEnclosure smallest_eigenvalue(const ExactMatrix& m, long prec = BigFloat::kDefaultPrec);

} // namespace ghm

#endif
