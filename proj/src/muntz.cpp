#include "ghm/muntz.hpp"

#include "ghm/errors.hpp"

namespace ghm::muntz {

namespace {

const ComplexRational kOne{Rational(1)};

void check_order(const Params& p, int n) {
    if (n < 0) throw DomainError("muntz: negative index");
    if (n > p.max_order()) throw InvalidParamsError("muntz: order exceeds exponent count");
}

void check_index(const Params& p, int n, int j, int k) {
    check_order(p, n);
    if (j < 0 || k < 0 || j > n || k > n) throw DomainError("muntz: index out of range");
}

Rational two_re_plus_one(const ComplexRational& a) {
    return Rational(1) + Rational(2) * a.re();
}

} // namespace

void Params::validate() const {
    if (alphas.empty()) throw InvalidParamsError("muntz: empty exponent list");
    for (size_t j = 0; j < alphas.size(); ++j)
        for (size_t k = 0; k < alphas.size(); ++k) {
            if (j != k && alphas[j] == alphas[k])
                throw InvalidParamsError("muntz: exponents must be pairwise distinct");
            if ((alphas[j] + alphas[k].conj() + kOne).is_zero())
                throw InvalidParamsError("muntz: alpha_j + conj(alpha_k) + 1 vanishes");
        }
}

bool Params::pd_mode() const {
    for (const auto& a : alphas)
        if (!(a.re() > Rational(-1, 2))) return false;
    return true;
}

bool Params::all_real() const {
    for (const auto& a : alphas)
        if (!a.is_real()) return false;
    return true;
}

ComplexRational entry(const Params& p, int j, int k) {
    check_index(p, p.max_order(), j, k);
    return (p.alphas[static_cast<size_t>(j)] + p.alphas[static_cast<size_t>(k)].conj() + kOne)
        .inverse();
}

namespace {

// core(n,k) = prod_{j<n} (alpha_k + conj(alpha_j) + 1) /
//             prod_{j<=n, j!=k} (alpha_k - alpha_j)
// The denominator product runs through n; stopping at n-1 (the published
// range) fails the order-1 orthogonality check.
ComplexRational coeff_core(const Params& p, int n, int k) {
    const auto& a = p.alphas;
    ComplexRational num(1), den(1);
    for (int j = 0; j < n; ++j)
        num *= a[static_cast<size_t>(k)] + a[static_cast<size_t>(j)].conj() + kOne;
    for (int j = 0; j <= n; ++j)
        if (j != k) den *= a[static_cast<size_t>(k)] - a[static_cast<size_t>(j)];
    return num / den;
}

} // namespace

OrthoSystemSpec system(const Params& p) {
    p.validate();
    OrthoSystemSpec sys;
    sys.coeff_core = [p](int n, int k) { return coeff_core(p, n, k); };
    sys.scale_sq = [p](int n) { return two_re_plus_one(p.alphas[static_cast<size_t>(n)]); };
    sys.max_order = p.max_order();
    return sys;
}

Rational closed_det(const Params& p, int n) {
    p.validate();
    check_order(p, n);
    const auto& a = p.alphas;
    Rational det(1);
    for (int k = 0; k <= n; ++k) {
        Rational num(1);
        Rational den = two_re_plus_one(a[static_cast<size_t>(k)]);
        for (int j = 0; j < k; ++j) {
            num *= (a[static_cast<size_t>(k)] - a[static_cast<size_t>(j)]).abs2();
            den *= (a[static_cast<size_t>(k)] + a[static_cast<size_t>(j)].conj() + kOne).abs2();
        }
        det *= num / den;
    }
    return det;
}

ComplexRational closed_inverse_entry(const Params& p, int n, int j, int k) {
    p.validate();
    check_index(p, n, j, k);
    const auto& a = p.alphas;
    const ComplexRational aj_bar = a[static_cast<size_t>(j)].conj();
    const ComplexRational& ak = a[static_cast<size_t>(k)];
    ComplexRational sum;
    for (int m = std::max(j, k); m <= n; ++m) {
        ComplexRational num{two_re_plus_one(a[static_cast<size_t>(m)])};
        for (int r = 0; r < m; ++r) {
            num *= aj_bar + a[static_cast<size_t>(r)] + kOne;
            num *= ak + a[static_cast<size_t>(r)].conj() + kOne;
        }
        ComplexRational den(1);
        for (int r = 0; r <= m; ++r) {
            if (r != j) den *= aj_bar - a[static_cast<size_t>(r)].conj();
            if (r != k) den *= ak - a[static_cast<size_t>(r)];
        }
        sum += num / den;
    }
    return sum;
}

BoundValue closed_bound(const Params& p, int n, long prec) {
    p.validate();
    check_order(p, n);
    if (!p.pd_mode())
        throw NotPositiveDefiniteError("muntz: bound requires Re(alpha) > -1/2");
    CoefficientBounds b = coefficient_bounds(system(p), n, prec);
    return {b.b2_exact, b.b2};
}

ComplexRational published_coefficient(const Params& p, int n, int k) {
    const auto& a = p.alphas;
    ComplexRational num(1), den(1);
    for (int j = 0; j < n; ++j) {
        num *= a[static_cast<size_t>(k)] + a[static_cast<size_t>(j)].conj() + kOne;
        if (j != k) den *= a[static_cast<size_t>(k)] - a[static_cast<size_t>(j)];
    }
    return num / den;
}

ComplexRational published_inverse_entry(const Params& p, int n, int j, int k) {
    const auto& a = p.alphas;
    const ComplexRational aj_bar = a[static_cast<size_t>(j)].conj();
    const ComplexRational& ak = a[static_cast<size_t>(k)];
    ComplexRational sum;
    for (int m = std::max(j, k); m <= n; ++m) {
        ComplexRational num{two_re_plus_one(a[static_cast<size_t>(m)])};
        for (int r = 0; r < m; ++r) {
            num *= aj_bar + a[static_cast<size_t>(r)] + kOne;
            num *= ak + a[static_cast<size_t>(r)].conj() + kOne;
        }
        ComplexRational den(1);
        for (int r = 0; r < m; ++r) {
            if (r != j) den *= aj_bar - a[static_cast<size_t>(r)].conj();
            if (r != k) den *= ak - a[static_cast<size_t>(r)];
        }
        sum += num / den;
    }
    return sum;
}

} // namespace ghm::muntz
