#ifndef GHM_RATIONAL_HPP
#define GHM_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace ghm {

/// Arbitrary-precision rational number.
///
/// Always kept in canonical form: gcd(num, den) = 1 and den >= 1.
/// All arithmetic is exact; division by zero throws DomainError.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long num) { mpq_init(q_); mpq_set_si(q_, num, 1); }
    Rational(long num, long den);
    Rational(const Rational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rational(Rational&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
    ~Rational() { mpq_clear(q_); }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }

    /// Parse "p" or "p/q" (decimal digits, optional leading sign).
    /// Throws ParseError on malformed input or zero denominator.
    static Rational parse(const std::string& text);

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string str() const;

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    std::string num_str() const;
    std::string den_str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) <= 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    Rational abs() const;

    /// Multiplicative inverse; throws DomainError on zero.
    Rational inverse() const;

    /// x^e with integer e (negative allowed for nonzero x).
    Rational pow(long e) const;

    double to_double() const { return mpq_get_d(q_); }

    /// Raw GMP handle, for interop inside the library.
    mpq_srcptr raw() const { return q_; }
    mpq_ptr raw() { return q_; }

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace ghm

#endif
