#include "ghm/gmuntz.hpp"

#include "ghm/errors.hpp"

namespace ghm::gmuntz {

namespace {

void check_order(const Params& p, int n) {
    if (n < 0) throw DomainError("gmuntz: negative index");
    if (n > p.max_order()) throw InvalidParamsError("gmuntz: order exceeds exponent count");
}

void check_index(const Params& p, int n, int j, int k) {
    check_order(p, n);
    if (j < 0 || k < 0 || j > n || k > n) throw DomainError("gmuntz: index out of range");
}

} // namespace

ComplexRational Params::denom(int j, int k) const {
    const ComplexRational& aj = alphas[static_cast<size_t>(j)];
    const ComplexRational ak_bar = alphas[static_cast<size_t>(k)].conj();
    return ComplexRational(c) * aj * ak_bar - ComplexRational(a) * (aj + ak_bar) -
           ComplexRational(b);
}

Rational Params::diag_weight(int k) const {
    const ComplexRational& ak = alphas[static_cast<size_t>(k)];
    return c * ak.abs2() - Rational(2) * a * ak.re() - b;
}

void Params::validate() const {
    if (alphas.empty()) throw InvalidParamsError("gmuntz: empty exponent list");
    if (discriminant().is_zero()) throw InvalidParamsError("gmuntz: a^2 + bc = 0");
    const int m = static_cast<int>(alphas.size());
    for (int j = 0; j < m; ++j) {
        if ((ComplexRational(c) * alphas[static_cast<size_t>(j)].conj() - ComplexRational(a))
                .is_zero())
            throw InvalidParamsError("gmuntz: c conj(alpha_j) - a vanishes");
        for (int k = 0; k < m; ++k) {
            if (j != k && alphas[static_cast<size_t>(j)] == alphas[static_cast<size_t>(k)])
                throw InvalidParamsError("gmuntz: exponents must be pairwise distinct");
            if (denom(j, k).is_zero())
                throw InvalidParamsError("gmuntz: entry denominator vanishes");
        }
    }
}

bool Params::pd_mode() const {
    if (!(discriminant().sign() > 0)) return false;
    for (int k = 0; k < static_cast<int>(alphas.size()); ++k)
        if (!(diag_weight(k).sign() > 0)) return false;
    return true;
}

bool Params::all_real() const {
    for (const auto& a : alphas)
        if (!a.is_real()) return false;
    return true;
}

ComplexRational entry(const Params& p, int j, int k) {
    check_index(p, p.max_order(), j, k);
    return p.denom(j, k).inverse();
}

namespace {

// core(n,k) = prod_{j<n} denom(k,j) / (c conj(alpha_j) - a)
//           / prod_{j<=n, j!=k} (alpha_k - alpha_j)
ComplexRational coeff_core(const Params& p, int n, int k, bool published_range) {
    const auto& a = p.alphas;
    ComplexRational num(1), den(1);
    for (int j = 0; j < n; ++j)
        num *= p.denom(k, j) /
               (ComplexRational(p.c) * a[static_cast<size_t>(j)].conj() - ComplexRational(p.a));
    const int stop = published_range ? n - 1 : n;
    for (int j = 0; j <= stop; ++j)
        if (j != k) den *= a[static_cast<size_t>(k)] - a[static_cast<size_t>(j)];
    return num / den;
}

} // namespace

OrthoSystemSpec system(const Params& p) {
    p.validate();
    OrthoSystemSpec sys;
    sys.coeff_core = [p](int n, int k) { return coeff_core(p, n, k, false); };
    sys.scale_sq = [p](int n) {
        // 1/h_n: diag_weight(n) prod_{j<n} |c alpha_j - a|^2 / (a^2+bc)^n
        Rational d2 = p.diag_weight(n);
        for (int j = 0; j < n; ++j)
            d2 *= (ComplexRational(p.c) * p.alphas[static_cast<size_t>(j)] - ComplexRational(p.a))
                      .abs2();
        return d2 / p.discriminant().pow(n);
    };
    sys.max_order = p.max_order();
    return sys;
}

Rational closed_det(const Params& p, int n) {
    p.validate();
    check_order(p, n);
    const auto& a = p.alphas;
    Rational num = p.discriminant().pow(static_cast<long>(n) * (n + 1) / 2);
    Rational den(1);
    for (int k = 0; k <= n; ++k) {
        num *= p.diag_weight(k);
        for (int j = 0; j < k; ++j)
            num *= (a[static_cast<size_t>(k)] - a[static_cast<size_t>(j)]).abs2();
        for (int j = 0; j <= k; ++j) den *= p.denom(k, j).abs2();
    }
    return num / den;
}

namespace {

ComplexRational inverse_entry(const Params& p, int n, int j, int k, bool published_range) {
    const auto& a = p.alphas;
    const ComplexRational aj_bar = a[static_cast<size_t>(j)].conj();
    const ComplexRational& ak = a[static_cast<size_t>(k)];
    ComplexRational sum;
    for (int m = std::max(j, k); m <= n; ++m) {
        ComplexRational num{p.diag_weight(m)};
        for (int r = 0; r < m; ++r) {
            num *= p.denom(r, j);         // c a_r conj(a_j) - a(a_r + conj(a_j)) - b
            num *= p.denom(r, k).conj();  // c conj(a_r) a_k - a(conj(a_r) + a_k) - b
        }
        ComplexRational den{p.discriminant().pow(m)};
        const int stop = published_range ? m - 1 : m;
        for (int r = 0; r <= stop; ++r) {
            if (r != j) den *= a[static_cast<size_t>(r)].conj() - aj_bar;
            if (r != k) den *= a[static_cast<size_t>(r)] - ak;
        }
        sum += num / den;
    }
    return sum;
}

} // namespace

ComplexRational closed_inverse_entry(const Params& p, int n, int j, int k) {
    p.validate();
    check_index(p, n, j, k);
    return inverse_entry(p, n, j, k, false);
}

BoundValue closed_bound(const Params& p, int n, long prec) {
    p.validate();
    check_order(p, n);
    if (!p.pd_mode())
        throw NotPositiveDefiniteError("gmuntz: bound requires the positive definite regime");
    CoefficientBounds b = coefficient_bounds(system(p), n, prec);
    return {b.b2_exact, b.b2};
}

ComplexRational published_coefficient(const Params& p, int n, int k) {
    return coeff_core(p, n, k, true);
}

ComplexRational published_inverse_entry(const Params& p, int n, int j, int k) {
    return inverse_entry(p, n, j, k, true);
}

} // namespace ghm::gmuntz
