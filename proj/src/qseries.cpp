#include "ghm/qseries.hpp"

#include "ghm/errors.hpp"

namespace ghm {

ComplexRational qpoch_finite(const ComplexRational& a, const Rational& q, long m) {
    if (m < 0) throw DomainError("qpoch_finite: negative order");
    ComplexRational prod(1);
    ComplexRational term = a; // a q^k
    const ComplexRational one(1);
    for (long k = 0; k < m; ++k) {
        prod *= one - term;
        term *= ComplexRational(q);
    }
    return prod;
}

Rational qpoch_finite(const Rational& a, const Rational& q, long m) {
    if (m < 0) throw DomainError("qpoch_finite: negative order");
    Rational prod(1);
    Rational term = a;
    const Rational one(1);
    for (long k = 0; k < m; ++k) {
        prod *= one - term;
        term *= q;
    }
    return prod;
}

Rational qbinomial(long m, long j, const Rational& q) {
    if (j < 0 || j > m) throw DomainError("qbinomial: index out of range");
    // (q;q)_m / ((q;q)_j (q;q)_{m-j}); evaluate as a running ratio
    // prod_{t=1}^{j} (1 - q^{m-j+t}) / (1 - q^t)
    Rational num(1), den(1);
    Rational qmj = q.pow(m - j);
    Rational qt(1);
    for (long t = 1; t <= j; ++t) {
        qt *= q;                    // q^t
        num *= Rational(1) - qmj * qt; // 1 - q^{m-j+t}
        den *= Rational(1) - qt;
    }
    if (den.is_zero()) throw DomainError("qbinomial: (q;q) factor vanishes");
    return num / den;
}

BigFloat qpoch_infinite(const BigFloat& a, const BigFloat& q, const BigFloat& eps, long prec) {
    const BigFloat one = BigFloat::from_long(1, prec);
    if (q.sign() <= 0 || q.cmp(one) >= 0)
        throw DomainError("qpoch_infinite: q outside (0,1), product nonconvergent");
    if (eps.sign() <= 0) throw DomainError("qpoch_infinite: eps must be positive");
    if (a.is_zero()) return one;

    // Truncation index M: |a| q^M / (1-q) < eps/2, via upward-rounded scan.
    const long scan_prec = 64;
    BigFloat t = abs(a, scan_prec, Round::Up);
    BigFloat gap = sub(BigFloat::from_long(1, scan_prec), q, scan_prec, Round::Down);
    BigFloat half_eps = div(eps, BigFloat::from_long(2, scan_prec), scan_prec, Round::Down);
    long m_cut = 1;
    const long m_limit = 2000000;
    BigFloat tail = div(t, gap, scan_prec, Round::Up);
    while (tail.cmp(half_eps) >= 0) {
        t = mul(t, q, scan_prec, Round::Up);
        tail = div(t, gap, scan_prec, Round::Up);
        if (++m_cut > m_limit)
            throw DomainError("qpoch_infinite: truncation index exceeds limit");
    }

    BigFloat prod = one;
    BigFloat aqk = a;
    for (long k = 0; k < m_cut; ++k) {
        prod = mul(prod, sub(one, aqk, prec, Round::Nearest), prec, Round::Nearest);
        if (prod.is_zero()) return prod; // a factor vanished exactly
        aqk = mul(aqk, q, prec, Round::Nearest);
    }
    return prod;
}

} // namespace ghm
