#include "ghm/complex_rational.hpp"

#include <ostream>

#include "ghm/errors.hpp"

namespace ghm {

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ComplexRational ComplexRational::inverse() const {
    Rational n = abs2();
    if (n.is_zero()) throw DomainError("inverse of complex zero");
    return {re_ / n, -im_ / n};
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
    return *this *= o.inverse();
}

ComplexRational ComplexRational::pow(long e) const {
    if (e == 0) return ComplexRational(1);
    ComplexRational base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    ComplexRational acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

ComplexRational ComplexRational::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty complex rational");
    if (text.back() != 'i') return ComplexRational(Rational::parse(text));

    std::string body = text.substr(0, text.size() - 1);
    // split at the last '+'/'-' that starts the imaginary component
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        if (body.empty() || body == "+" || body == "-")
            body += "1"; // bare "i", "+i", "-i"
        return {Rational(0), Rational::parse(body)};
    }
    std::string re = body.substr(0, split);
    std::string im = body.substr(split); // keeps the sign
    if (im == "+" || im == "-") im += "1";
    return {Rational::parse(re), Rational::parse(im)};
}

std::string ComplexRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string out = re_.str();
    out += (im_.sign() < 0) ? "-" : "+";
    out += im_.abs().str();
    out += "i";
    return out;
}

std::ostream& operator<<(std::ostream& os, const ComplexRational& z) { return os << z.str(); }

} // namespace ghm
