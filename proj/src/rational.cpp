#include "ghm/rational.hpp"

#include <cctype>
#include <ostream>

#include "ghm/errors.hpp"

namespace ghm {

Rational::Rational(long num, long den) {
    mpq_init(q_);
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

namespace {

bool valid_integer_token(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    std::string num = text, den = "1";
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw ParseError("malformed rational: \"" + text + "\"");
    // GMP does not accept an explicit leading plus
    if (num[0] == '+') num.erase(num.begin());
    if (den[0] == '+') den.erase(den.begin());

    Rational r;
    mpz_t n, d;
    mpz_init(n);
    mpz_init(d);
    mpz_set_str(n, num.c_str(), 10);
    mpz_set_str(d, den.c_str(), 10);
    if (mpz_sgn(d) == 0) {
        mpz_clear(n);
        mpz_clear(d);
        throw ParseError("malformed rational (zero denominator): \"" + text + "\"");
    }
    mpq_set_num(r.q_, n);
    mpq_set_den(r.q_, d);
    mpq_canonicalize(r.q_);
    mpz_clear(n);
    mpz_clear(d);
    return r;
}

std::string Rational::str() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::string Rational::num_str() const {
    char* s = mpz_get_str(nullptr, 10, mpq_numref(q_));
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::string Rational::den_str() const {
    char* s = mpz_get_str(nullptr, 10, mpq_denref(q_));
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && is_zero()) throw DomainError("zero to a negative power");
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), k);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), k);
    // num/den coprime => powers coprime; canonical by construction
    if (invert) return r.inverse();
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace ghm
