#include "ghm/bigfloat.hpp"

#include <cstdlib>
#include <ostream>

#include "ghm/errors.hpp"

namespace ghm {

mpfr_rnd_t to_mpfr(Round r) {
    switch (r) {
        case Round::Nearest: return MPFR_RNDN;
        case Round::Down: return MPFR_RNDD;
        case Round::Up: return MPFR_RNDU;
        case Round::Zero: return MPFR_RNDZ;
    }
    return MPFR_RNDN;
}

namespace {
long checked_prec(long prec) {
    if (prec < BigFloat::kMinPrec)
        throw DomainError("BigFloat precision below 64 bits");
    return prec;
}
} // namespace

BigFloat::BigFloat(long prec) { mpfr_init2(v_, checked_prec(prec)); }

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat BigFloat::from_long(long v, long prec) {
    BigFloat x(prec);
    mpfr_set_si(x.v_, v, MPFR_RNDN);
    return x;
}

BigFloat BigFloat::from_rational(const Rational& q, long prec, Round rnd) {
    BigFloat x(prec);
    mpfr_set_q(x.v_, q.raw(), to_mpfr(rnd));
    return x;
}

BigFloat BigFloat::pow2(long e, long prec) {
    BigFloat x(prec);
    mpfr_set_ui_2exp(x.v_, 1, e, MPFR_RNDN);
    return x;
}

BigFloat add(const BigFloat& a, const BigFloat& b, long prec, Round rnd) {
    BigFloat r(prec);
    mpfr_add(r.v_, a.v_, b.v_, to_mpfr(rnd));
    return r;
}

BigFloat sub(const BigFloat& a, const BigFloat& b, long prec, Round rnd) {
    BigFloat r(prec);
    mpfr_sub(r.v_, a.v_, b.v_, to_mpfr(rnd));
    return r;
}

BigFloat mul(const BigFloat& a, const BigFloat& b, long prec, Round rnd) {
    BigFloat r(prec);
    mpfr_mul(r.v_, a.v_, b.v_, to_mpfr(rnd));
    return r;
}

BigFloat div(const BigFloat& a, const BigFloat& b, long prec, Round rnd) {
    if (b.is_zero()) throw DomainError("BigFloat division by zero");
    BigFloat r(prec);
    mpfr_div(r.v_, a.v_, b.v_, to_mpfr(rnd));
    return r;
}

BigFloat sqrt(const BigFloat& a, long prec, Round rnd) {
    if (a.sign() < 0) throw DomainError("BigFloat sqrt of negative value");
    BigFloat r(prec);
    mpfr_sqrt(r.v_, a.v_, to_mpfr(rnd));
    return r;
}

BigFloat neg(const BigFloat& a, long prec, Round rnd) {
    BigFloat r(prec);
    mpfr_neg(r.v_, a.v_, to_mpfr(rnd));
    return r;
}

BigFloat abs(const BigFloat& a, long prec, Round rnd) {
    BigFloat r(prec);
    mpfr_abs(r.v_, a.v_, to_mpfr(rnd));
    return r;
}

BigFloat BigFloat::reciprocal(long prec, Round rnd) const {
    if (is_zero()) throw DomainError("BigFloat reciprocal of zero");
    BigFloat r(prec);
    mpfr_ui_div(r.v_, 1, v_, to_mpfr(rnd));
    return r;
}

Rational BigFloat::to_rational() const {
    if (!mpfr_number_p(v_)) throw DomainError("BigFloat not a finite number");
    Rational q;
    mpfr_get_q(q.raw(), v_);
    return q;
}

std::string BigFloat::decimal(int digits) const {
    if (is_zero()) return "0";
    if (!mpfr_number_p(v_)) throw DomainError("BigFloat not a finite number");
    if (digits < 2) digits = 2;
    mpfr_exp_t exp = 0;
    char* s = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string raw(s);
    mpfr_free_str(s);
    std::string sign;
    if (!raw.empty() && raw[0] == '-') {
        sign = "-";
        raw.erase(raw.begin());
    }
    // raw holds the digit string scaled so the value is 0.raw * 10^exp
    std::string out = sign + raw.substr(0, 1) + "." + raw.substr(1) + "e" +
                      std::to_string(static_cast<long>(exp) - 1);
    return out;
}

int decimal_digits_for(long prec) {
    // ceil(prec * log10(2)); 30103/100000 > log10(2)
    return static_cast<int>((prec * 30103 + 99999) / 100000);
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
    return os << x.decimal(decimal_digits_for(x.precision()));
}

} // namespace ghm
