#ifndef GHM_BIGFLOAT_HPP
#define GHM_BIGFLOAT_HPP

#include <mpfr.h>

#include <iosfwd>
#include <string>

#include "ghm/rational.hpp"

namespace ghm {

enum class Round { Nearest, Down, Up, Zero };

mpfr_rnd_t to_mpfr(Round r);

/// Binary floating-point number at an explicit working precision.
/// Precision is fixed per value (>= 64 bits) and every operation names
/// its result precision and rounding mode; nothing is ambient.
class BigFloat {
public:
    static constexpr long kDefaultPrec = 256;
    static constexpr long kMinPrec = 64;

    explicit BigFloat(long prec = kDefaultPrec);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    ~BigFloat();
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;

    static BigFloat from_long(long v, long prec = kDefaultPrec);
    static BigFloat from_rational(const Rational& q, long prec, Round rnd = Round::Nearest);
    /// 2^e, exact.
    static BigFloat pow2(long e, long prec = kDefaultPrec);

    long precision() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend BigFloat add(const BigFloat& a, const BigFloat& b, long prec, Round rnd);
    friend BigFloat sub(const BigFloat& a, const BigFloat& b, long prec, Round rnd);
    friend BigFloat mul(const BigFloat& a, const BigFloat& b, long prec, Round rnd);
    friend BigFloat div(const BigFloat& a, const BigFloat& b, long prec, Round rnd);
    friend BigFloat sqrt(const BigFloat& a, long prec, Round rnd);
    friend BigFloat neg(const BigFloat& a, long prec, Round rnd);
    friend BigFloat abs(const BigFloat& a, long prec, Round rnd);

    /// 1/x at the given precision and rounding.
    BigFloat reciprocal(long prec, Round rnd) const;

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp(const Rational& q) const { return mpfr_cmp_q(v_, q.raw()); }

    /// Exact rational value of this float (dyadic).
    Rational to_rational() const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Deterministic scientific decimal form with the given number of
    /// significant digits, e.g. "-2.887880950866e-1".
    std::string decimal(int digits) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
};

/// Significant decimal digits that pin down prec bits: ceil(prec*log10(2)).
int decimal_digits_for(long prec);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

} // namespace ghm

#endif
