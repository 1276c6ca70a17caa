#ifndef GHM_COMPLEX_RATIONAL_HPP
#define GHM_COMPLEX_RATIONAL_HPP

#include <iosfwd>
#include <string>

#include "ghm/rational.hpp"

namespace ghm {

/// Exact complex number with rational real and imaginary parts.
/// Field arithmetic is exact and closed; conjugation is an involution;
/// |z|^2 = re^2 + im^2 stays rational.
class ComplexRational {
public:
    ComplexRational() = default;
    ComplexRational(Rational re) : re_(std::move(re)) {}
    ComplexRational(long re) : re_(re) {}
    ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    /// Parse "re", "re+imi" or "re-imi" with Rational components
    /// (e.g. "1/2+1/3i"); also accepts a pure-imaginary "imi" form.
    static ComplexRational parse(const std::string& text);

    /// Canonical text form; bit-exact round trip with parse().
    std::string str() const;

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    ComplexRational conj() const { return {re_, -im_}; }

    /// re^2 + im^2, exact.
    Rational abs2() const { return re_ * re_ + im_ * im_; }

    ComplexRational operator-() const { return {-re_, -im_}; }
    ComplexRational& operator+=(const ComplexRational& o);
    ComplexRational& operator-=(const ComplexRational& o);
    ComplexRational& operator*=(const ComplexRational& o);
    ComplexRational& operator/=(const ComplexRational& o);

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }

    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }

    /// Multiplicative inverse; throws DomainError on zero.
    ComplexRational inverse() const;

    /// z^e with integer e (negative allowed for nonzero z).
    ComplexRational pow(long e) const;

private:
    Rational re_;
    Rational im_;
};

inline ComplexRational conj(const ComplexRational& z) { return z.conj(); }
inline Rational abs2(const ComplexRational& z) { return z.abs2(); }

std::ostream& operator<<(std::ostream& os, const ComplexRational& z);

} // namespace ghm

#endif
