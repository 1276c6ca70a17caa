#include "ghm/lommel.hpp"

#include "ghm/errors.hpp"
#include "ghm/qseries.hpp"

namespace ghm::lommel {

void Params::validate() const {
    if (!(q > Rational(0) && q < Rational(1)))
        throw InvalidParamsError("lommel: q must lie in (0,1)");
    if (!(V > Rational(0) && V < Rational(1)))
        throw InvalidParamsError("lommel: V = q^(nu+1) must lie in (0,1)");
}

Rational h_coeff(int n, int k, const Rational& q, const Rational& V) {
    if (k < 0 || k > n) throw DomainError("lommel h_coeff: index out of range");
    // q^(n(n+nu)) (V,q;q)_{n+k} (-4)^k q^(k(k-2n-nu))
    //   / ((-1)^n (V,q;q)_{n-k} (q;q)_{2k}),  with q^nu = V/q:
    // q-power  n^2-n + k^2-2nk+k,  V-power  n-k.
    long qe = static_cast<long>(n) * n - n + static_cast<long>(k) * k -
              2L * n * k + k;
    long ve = n - k;
    Rational num = q.pow(qe) * V.pow(ve) * qpoch_finite(V, q, n + k) * qpoch_finite(q, q, n + k) *
                   Rational(-4).pow(k);
    Rational den = qpoch_finite(V, q, n - k) * qpoch_finite(q, q, n - k) *
                   qpoch_finite(q, q, 2 * k);
    if (n % 2) num = -num;
    return num / den;
}

namespace {

Rational scale_sq(const Params& p, int n) {
    // (1 - V q^(2n)) / q^(2n nu + n(2n+1)) = (1 - V q^(2n)) / (V^(2n) q^(2n^2-n))
    Rational num = Rational(1) - p.V * p.q.pow(2L * n);
    Rational den = p.V.pow(2L * n) * p.q.pow(2L * static_cast<long>(n) * n - n);
    return num / den;
}

// h_{2l} evaluated at -1 in the x^2 variable: sum_k core(l,k) (-1)^k.
Rational row_value_at_minus_one(const Params& p, int l) {
    Rational acc(0);
    for (int k = 0; k <= l; ++k) {
        Rational t = h_coeff(l, k, p.q, p.V);
        acc += (k % 2) ? -t : t;
    }
    return acc;
}

} // namespace

OrthoSystemSpec system(const Params& p) {
    p.validate();
    OrthoSystemSpec sys;
    sys.coeff_core = [p](int n, int k) { return ComplexRational(h_coeff(n, k, p.q, p.V)); };
    sys.scale_sq = [p](int n) { return scale_sq(p, n); };
    return sys;
}

Rational closed_det(const Params& p, int n) {
    p.validate();
    if (n < 0) throw DomainError("lommel: negative order");
    long nn1 = static_cast<long>(n) * (n + 1);
    Rational num = p.V.pow(nn1) * p.q.pow(nn1 * (4L * n - 1) / 6);
    Rational den = Rational(2).pow(2 * nn1) * qpoch_finite(p.V, p.q * p.q, n + 1);
    for (int m = 1; m <= n; ++m) {
        Rational f = qpoch_finite(p.V, p.q, 2 * m);
        den *= f * f;
    }
    return num / den;
}

Rational closed_inverse_entry(const Params& p, int n, int j, int k) {
    p.validate();
    if (n < 0 || j < 0 || k < 0 || j > n || k > n)
        throw DomainError("lommel: index out of range");
    // (-4)^(j+k) q^(j(j-nu)+k(k-nu)) = (-4)^(j+k) q^(j^2+j+k^2+k) V^-(j+k)
    Rational pref = Rational(-4).pow(j + k) *
                    p.q.pow(static_cast<long>(j) * j + j + static_cast<long>(k) * k + k) *
                    p.V.pow(-(static_cast<long>(j) + k));
    Rational sum(0);
    for (int l = std::max(j, k); l <= n; ++l) {
        Rational term = qbinomial(l + j, l - j, p.q) * qbinomial(l + k, l - k, p.q);
        term *= Rational(1) - p.V * p.q.pow(2L * l);
        term *= p.q.pow(-static_cast<long>(l) * (2L * j + 2 * k + 1));
        term *= qpoch_finite(p.V, p.q, l + j) * qpoch_finite(p.V, p.q, l + k);
        term /= qpoch_finite(p.V, p.q, l - j) * qpoch_finite(p.V, p.q, l - k);
        sum += term;
    }
    return pref * sum;
}

BoundValue closed_bound(const Params& p, int n, long prec) {
    p.validate();
    if (n < 0) throw DomainError("lommel: negative order");
    Rational denom(0);
    for (int l = 0; l <= n; ++l) {
        Rational w = row_value_at_minus_one(p, l);
        denom += scale_sq(p, l) * w * w;
    }
    Rational exact = denom.inverse();
    return {exact, BigFloat::from_rational(exact, prec, Round::Down)};
}

Rational published_det(const Params& p, int n) {
    p.validate();
    long nn1 = static_cast<long>(n) * (n + 1);
    // 2^(-n(n+1)) q^(n(n+1)(4n+6nu+5)) with q^nu = V/q:
    // V-power 6n(n+1), q-power n(n+1)(4n-1)
    Rational num = p.V.pow(6 * nn1) * p.q.pow(nn1 * (4L * n - 1));
    Rational den = Rational(2).pow(nn1) * qpoch_finite(p.V, p.q * p.q, n + 1);
    for (int m = 1; m <= n; ++m) den *= qpoch_finite(p.V, p.q, 2 * m);
    return num / den;
}

Rational published_bound_denominator(const Params& p, int n) {
    p.validate();
    Rational denom(0);
    for (int l = 0; l <= n; ++l) {
        Rational w = row_value_at_minus_one(p, l);
        // (1 - q^(2l+nu+1)) / q^(2l nu + l(2n+1))
        Rational t = (Rational(1) - p.V * p.q.pow(2L * l)) * p.V.pow(-2L * l) *
                     p.q.pow(2L * l - static_cast<long>(l) * (2L * n + 1));
        denom += t * w * w;
    }
    return denom;
}

} // namespace ghm::lommel
