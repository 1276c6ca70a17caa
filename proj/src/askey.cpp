#include "ghm/askey.hpp"

#include "ghm/errors.hpp"
#include "ghm/qseries.hpp"

namespace ghm::askey {

void Params::validate(int n) const {
    if (n < 0) throw DomainError("askey: negative order");
    if (alpha.is_zero() || q.is_zero()) throw InvalidParamsError("askey: alpha and q must be nonzero");
    if (q == Rational(1) || q == Rational(-1))
        throw InvalidParamsError("askey: q must not be a root of unity");
    Rational ab = alpha * beta;
    Rational qr(1);
    for (int r = 0; r <= 2 * n; ++r) {
        if (r <= n) {
            if (alpha * qr == Rational(1))
                throw InvalidParamsError("askey: alpha = q^-k violates invertibility");
            if (beta * qr == Rational(1))
                throw InvalidParamsError("askey: beta = q^-k violates invertibility");
        }
        if (ab * qr == Rational(1))
            throw InvalidParamsError("askey: alpha beta = q^-k violates invertibility");
        qr *= q;
    }
}

bool Params::pd_mode() const {
    const Rational zero(0), one(1);
    return q > zero && q < one && alpha > zero && alpha < one && beta > zero && beta < one;
}

Rational moment_ratio(int n, const Params& p) {
    if (n < 0) throw DomainError("askey: negative moment index");
    return qpoch_finite(p.alpha, p.q, n) / qpoch_finite(p.alpha * p.beta, p.q, n);
}

Rational entry(const Params& p, int j, int k) {
    if (j < 0 || k < 0) throw DomainError("askey: negative index");
    return moment_ratio(j + k, p);
}

namespace {

Rational scale_sq(const Params& p, int n) {
    if (n == 0) return Rational(1);
    // (1 - ab q^{2n-1}) (alpha;q)_n (ab;q)_{n-1} / ((q;q)_n (beta;q)_n alpha^n)
    Rational ab = p.alpha * p.beta;
    Rational num = (Rational(1) - ab * p.q.pow(2L * n - 1)) * qpoch_finite(p.alpha, p.q, n) *
                   qpoch_finite(ab, p.q, n - 1);
    Rational den = qpoch_finite(p.q, p.q, n) * qpoch_finite(p.beta, p.q, n) * p.alpha.pow(n);
    return num / den;
}

Rational coeff_core(const Params& p, int n, int k) {
    // (-1)^n (q^-n;q)_k (ab q^{n-1};q)_k q^k / ((q;q)_k (alpha;q)_k)
    Rational num = qpoch_finite(p.q.pow(-n), p.q, k) *
                   qpoch_finite(p.alpha * p.beta * p.q.pow(n - 1), p.q, k) * p.q.pow(k);
    Rational den = qpoch_finite(p.q, p.q, k) * qpoch_finite(p.alpha, p.q, k);
    Rational v = num / den;
    return (n % 2) ? -v : v;
}

Rational row_value_at_minus_one(const Params& p, int l) {
    Rational acc(0);
    for (int k = 0; k <= l; ++k) {
        Rational t = coeff_core(p, l, k);
        acc += (k % 2) ? -t : t;
    }
    return acc;
}

Rational bound_denominator(const Params& p, int n) {
    Rational denom(0);
    for (int l = 0; l <= n; ++l) {
        Rational w = row_value_at_minus_one(p, l);
        denom += scale_sq(p, l) * w * w;
    }
    return denom;
}

} // namespace

OrthoSystemSpec system(const Params& p) {
    OrthoSystemSpec sys;
    sys.coeff_core = [p](int n, int k) { return ComplexRational(coeff_core(p, n, k)); };
    sys.scale_sq = [p](int n) { return scale_sq(p, n); };
    return sys;
}

Rational closed_det(const Params& p, int n) {
    p.validate(n);
    Rational ab = p.alpha * p.beta;
    Rational det = p.alpha.pow(static_cast<long>(n) * (n + 1) / 2) *
                   p.q.pow(static_cast<long>(n) * (static_cast<long>(n) * n - 1) / 3);
    for (int m = 1; m <= n; ++m) {
        det *= qpoch_finite(p.q, p.q, m) * qpoch_finite(p.alpha, p.q, m) *
               qpoch_finite(p.beta, p.q, m);
        det /= qpoch_finite(ab * p.q.pow(m - 1), p.q, m) * qpoch_finite(ab, p.q, 2 * m);
    }
    return det;
}

namespace {

Rational inverse_entry(const Params& p, int n, int j, int k, bool published) {
    const Rational ab = p.alpha * p.beta;
    Rational pref = p.q.pow(static_cast<long>(j) * (j + 1) / 2 + static_cast<long>(k) * (k + 1) / 2) /
                    (qpoch_finite(p.alpha, p.q, j) * qpoch_finite(p.alpha, p.q, k));
    if ((j + k) % 2) pref = -pref;
    Rational sum(0);
    for (int m = std::max(j, k); m <= n; ++m) {
        Rational abq = ab * p.q.pow(m - 1);
        Rational term = qbinomial(m, j, p.q) * qbinomial(m, k, p.q) *
                        qpoch_finite(abq, p.q, j) * qpoch_finite(abq, p.q, k) /
                        (p.alpha * p.q.pow(j + k)).pow(m);
        if (published) {
            term /= qpoch_finite(p.q, p.q, m) * qpoch_finite(p.beta, p.q, m) *
                    qpoch_finite(ab, p.q, 2 * m) * qpoch_finite(abq, p.q, m);
        } else {
            // norm-consistent weight: alpha^m scale_sq(m)
            term *= scale_sq(p, m) * p.alpha.pow(m);
        }
        sum += term;
    }
    return pref * sum;
}

} // namespace

Rational closed_inverse_entry(const Params& p, int n, int j, int k) {
    p.validate(n);
    if (j < 0 || k < 0 || j > n || k > n) throw DomainError("askey: index out of range");
    return inverse_entry(p, n, j, k, false);
}

BoundValue closed_bound(const Params& p, int n, long prec) {
    p.validate(n);
    if (!p.pd_mode())
        throw NotPositiveDefiniteError("askey: bound requires 0 < q, alpha, beta < 1");
    Rational exact = bound_denominator(p, n).inverse();
    return {exact, BigFloat::from_rational(exact, prec, Round::Down)};
}

ComplexRational little_q_jacobi(int n, const ComplexRational& x, const Params& p) {
    if (n < 0) throw DomainError("askey: negative degree");
    ComplexRational sum;
    const Rational ab = p.alpha * p.beta;
    for (int k = 0; k <= n; ++k) {
        Rational num = qpoch_finite(p.q.pow(-n), p.q, k) * qpoch_finite(ab * p.q.pow(n - 1), p.q, k);
        Rational den = qpoch_finite(p.q, p.q, k) * qpoch_finite(p.alpha, p.q, k);
        if (den.is_zero()) throw DomainError("askey: (q,alpha;q)_k vanishes");
        sum += ComplexRational(num / den) * (ComplexRational(p.q) * x).pow(k);
    }
    return sum;
}

BigFloat moment_ratio_series(int n, const Params& p, long prec) {
    if (!p.pd_mode())
        throw NotPositiveDefiniteError("askey: series cross-check needs 0 < q, alpha, beta < 1");
    const long wp = prec + 64; // guard bits over the requested precision
    auto series = [&](int power) {
        // sum_m (beta;q)_m alpha^m q^(power*m) / (q;q)_m
        // term ratio is (1 - beta q^m) step / (1 - q^(m+1)) with
        // step = alpha q^power, which is < step/(1-q^(m+1)) and eventually < 1
        const Rational step = p.alpha * p.q.pow(power);
        const BigFloat gate = BigFloat::pow2(-(prec + 16), wp);
        BigFloat sum = BigFloat::from_long(0, wp);
        BigFloat term = BigFloat::from_long(1, wp);
        Rational bqm = p.beta;    // beta q^m
        Rational qm1 = p.q;       // q^(m+1)
        for (int m = 0;; ++m) {
            sum = add(sum, term, wp, Round::Nearest);
            Rational rho_den = Rational(1) - qm1;
            if (rho_den.sign() > 0 && step < rho_den) {
                // tail <= term * rho / (1 - rho), rho = step / (1 - q^(m+1))
                Rational rho = step / rho_den;
                BigFloat tail = mul(term, BigFloat::from_rational(rho / (Rational(1) - rho), wp,
                                                                  Round::Up),
                                    wp, Round::Up);
                if (tail.cmp(mul(sum, gate, wp, Round::Down)) < 0) break;
            }
            Rational mult = (Rational(1) - bqm) * step / (Rational(1) - qm1);
            term = mul(term, BigFloat::from_rational(mult, wp, Round::Nearest), wp, Round::Nearest);
            bqm *= p.q;
            qm1 *= p.q;
            if (m > 100000) throw DomainError("askey: moment series failed to converge");
        }
        return sum;
    };
    BigFloat ratio = div(series(n), series(0), prec, Round::Nearest);
    return ratio;
}

namespace {

BigFloat product_form_bound(const Params& p, int n, long prec, bool published) {
    if (!p.pd_mode())
        throw NotPositiveDefiniteError("askey: bound requires 0 < q, alpha, beta < 1");
    const BigFloat eps = BigFloat::pow2(-prec + 8, prec);
    const BigFloat q = BigFloat::from_rational(p.q, prec, Round::Nearest);
    const BigFloat mu0 =
        div(qpoch_infinite(BigFloat::from_rational(p.alpha * p.beta, prec, Round::Nearest), q, eps,
                           prec),
            qpoch_infinite(BigFloat::from_rational(p.alpha, prec, Round::Nearest), q, eps, prec),
            prec, Round::Nearest);
    // T = sum_l p_l(-1)^2 / h_l with h_l = mu0 / d2_l
    BigFloat t = BigFloat::from_long(0, prec);
    for (int l = 0; l <= n; ++l) {
        Rational w = row_value_at_minus_one(p, l);
        BigFloat h = div(mu0, BigFloat::from_rational(scale_sq(p, l), prec, Round::Nearest), prec,
                         Round::Nearest);
        t = add(t, div(BigFloat::from_rational(w * w, prec, Round::Nearest), h, prec,
                       Round::Nearest),
                prec, Round::Nearest);
    }
    BigFloat inv_t = t.reciprocal(prec, Round::Nearest);
    return published ? mul(mu0, inv_t, prec, Round::Nearest)
                     : div(inv_t, mu0, prec, Round::Nearest);
}

} // namespace

BigFloat infinite_product_bound(const Params& p, int n, long prec) {
    return product_form_bound(p, n, prec, false);
}

Rational published_inverse_entry(const Params& p, int n, int j, int k) {
    return inverse_entry(p, n, j, k, true);
}

BigFloat published_bound(const Params& p, int n, long prec) {
    return product_form_bound(p, n, prec, true);
}

} // namespace ghm::askey
