#include "ghm/rational_polynomial.hpp"

#include <utility>

#include "ghm/errors.hpp"

namespace ghm {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, Rational(0));
    strip();
}

void RationalPolynomial::strip() {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RationalPolynomial::eval(const Rational& x) const {
    Rational acc = coeffs_.back();
    for (size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() == 1) return RationalPolynomial();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return RationalPolynomial(std::move(d));
}

RationalPolynomial operator-(const RationalPolynomial& p) {
    std::vector<Rational> c(p.coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -p.coeffs_[i];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) c[i] += b.coeffs_[i];
    }
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a + (-b);
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::sign_normalized() const {
    if (is_zero()) return *this;
    Rational scale = coeffs_.back().abs().inverse();
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] * scale;
    return RationalPolynomial(std::move(c));
}

std::string RationalPolynomial::str() const {
    std::string out;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        if (!out.empty()) out += " + ";
        out += "(" + coeffs_[k].str() + ")x^" + std::to_string(k);
    }
    return out;
}

std::pair<RationalPolynomial, RationalPolynomial> poly_divmod(const RationalPolynomial& a,
                                                              const RationalPolynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {RationalPolynomial(), a};
    std::vector<Rational> quo(static_cast<size_t>(a.degree() - db) + 1);
    const Rational lead_inv = b.coeff(db).inverse();
    for (int k = a.degree(); k >= db; --k) {
        Rational f = rem[static_cast<size_t>(k)] * lead_inv;
        if (f.is_zero()) continue;
        quo[static_cast<size_t>(k - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(k - db + j)] -= f * b.coeff(j);
    }
    return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial poly_gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
    RationalPolynomial x = a.sign_normalized();
    RationalPolynomial y = b.sign_normalized();
    while (!y.is_zero()) {
        RationalPolynomial r = poly_divmod(x, y).second;
        x = std::move(y);
        y = r.sign_normalized();
    }
    if (x.is_zero()) return x;
    // make monic
    Rational inv = x.coeff(x.degree()).inverse();
    std::vector<Rational> c(x.coeffs());
    for (auto& v : c) v *= inv;
    return RationalPolynomial(std::move(c));
}

RationalPolynomial square_free_part(const RationalPolynomial& p) {
    RationalPolynomial g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return poly_divmod(p, g).first;
}

RationalPolynomial char_poly(const ExactMatrix& m) {
    if (!m.is_hermitian()) throw NotHermitianError("char_poly: matrix not Hermitian");
    const int n = m.size();
    // Faddeev-LeVerrier: M_1 = M, a_{n-k} = -tr(M_k)/k, M_{k+1} = M(M_k + a_{n-k} I)
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
    coeffs[static_cast<size_t>(n)] = Rational(1);
    ExactMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        ComplexRational tr;
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        if (!tr.is_real())
            throw DomainError("char_poly: imaginary residue failed to cancel");
        Rational a = -(tr.re() / Rational(k));
        coeffs[static_cast<size_t>(n - k)] = a;
        if (k == n) break;
        ExactMatrix shifted = mk;
        for (int i = 0; i < n; ++i) shifted.at(i, i) += ComplexRational(a);
        mk = m * shifted;
    }
    return RationalPolynomial(std::move(coeffs));
}

SturmChain::SturmChain(const RationalPolynomial& square_free) {
    chain_.push_back(square_free.sign_normalized());
    if (square_free.degree() >= 1) {
        chain_.push_back(square_free.derivative().sign_normalized());
        while (chain_.back().degree() >= 1) {
            RationalPolynomial r = poly_divmod(chain_[chain_.size() - 2], chain_.back()).second;
            if (r.is_zero()) break; // input was not square-free; chain still valid for gcd-free part
            chain_.push_back((-r).sign_normalized());
        }
    }
}

int SturmChain::variations_at(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& p : chain_) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

namespace {

// Cauchy root bound: all real roots lie in (-B, B).
Rational cauchy_bound(const RationalPolynomial& p) {
    Rational maxabs(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rational a = p.coeff(k).abs();
        if (a > maxabs) maxabs = a;
    }
    return Rational(1) + maxabs / p.coeff(p.degree()).abs();
}

int multiplicity_of_root(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
    // Count how many of p, gcd(p,p'), gcd(gcd,gcd'), ... still contain the root.
    int mult = 0;
    RationalPolynomial cur = p;
    while (cur.degree() >= 1) {
        bool has_root;
        if (lo == hi) {
            has_root = cur.eval(lo).is_zero();
        } else {
            SturmChain chain(square_free_part(cur));
            has_root = chain.count_roots(lo, hi) > 0;
        }
        if (!has_root) break;
        ++mult;
        cur = poly_gcd(cur, cur.derivative());
    }
    return mult;
}

} // namespace

std::vector<IsolatedRoot> isolate_real_roots(const RationalPolynomial& p) {
    if (p.degree() < 1) return {};
    RationalPolynomial sf = square_free_part(p);
    SturmChain chain(sf);
    Rational bound = cauchy_bound(sf);

    std::vector<IsolatedRoot> out;
    struct Span {
        Rational lo, hi;
        int count;
    };
    std::vector<Span> todo;
    int total = chain.count_roots(-bound, bound);
    if (total > 0) todo.push_back({-bound, bound, total});
    while (!todo.empty()) {
        Span s = todo.back();
        todo.pop_back();
        if (s.count == 1) {
            out.push_back({s.lo, s.hi, 0});
            continue;
        }
        Rational mid = (s.lo + s.hi) / Rational(2);
        if (sf.eval(mid).is_zero()) {
            out.push_back({mid, mid, 0});
            // exclude the exact root from both halves by nudging with a
            // radius free of other roots: bisect below/above around mid
            Rational eps = (s.hi - s.lo);
            Rational lo2 = mid, hi2 = mid;
            do {
                eps /= Rational(4);
                lo2 = mid - eps;
                hi2 = mid + eps;
            } while (chain.count_roots(lo2, hi2) > 1);
            int left = chain.count_roots(s.lo, lo2);
            int right = chain.count_roots(hi2, s.hi);
            if (left > 0) todo.push_back({s.lo, lo2, left});
            if (right > 0) todo.push_back({hi2, s.hi, right});
        } else {
            int left = chain.count_roots(s.lo, mid);
            int right = s.count - left;
            if (left > 0) todo.push_back({s.lo, mid, left});
            if (right > 0) todo.push_back({mid, s.hi, right});
        }
    }
    for (auto& r : out) r.multiplicity = multiplicity_of_root(p, r.lo, r.hi);
    return out;
}

EigenvalueEnclosure smallest_eigenvalue(const ExactMatrix& m, long prec) {
    if (!m.is_hermitian()) throw NotHermitianError("smallest_eigenvalue: matrix not Hermitian");
    if (!is_positive_definite(m))
        throw NotPositiveDefiniteError("smallest_eigenvalue: matrix not positive definite");
    if (prec < BigFloat::kMinPrec) throw DomainError("smallest_eigenvalue: precision below 64");

    RationalPolynomial p = char_poly(m);
    RationalPolynomial sf = square_free_part(p);

    Rational lo(0), hi;
    if (sf.degree() == 1) {
        // root is exact: x = -c0/c1
        Rational root = -(sf.coeff(0) / sf.coeff(1));
        BigFloat value = BigFloat::from_rational(root, prec, Round::Nearest);
        return {root, root, value};
    }

    SturmChain chain(sf);
    hi = cauchy_bound(sf);
    // invariant: no roots in (0, lo], at least one in (lo, hi]
    bool exact = false;
    // isolate the smallest root
    while (chain.count_roots(lo, hi) > 1) {
        Rational mid = (lo + hi) / Rational(2);
        if (sf.eval(mid).is_zero()) {
            // mid is a root; the smallest root is either mid or below
            if (chain.count_roots(lo, mid) == 1) {
                // smallest root could still be < mid; count strictly below
                Rational just_below = mid;
                // (lo, mid] has exactly one root and mid is it
                lo = hi = just_below;
                exact = true;
                break;
            }
            hi = mid;
            continue;
        }
        if (chain.count_roots(lo, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }

    if (!exact) {
        // refine by sign bisection; sf has a single simple root in (lo, hi]
        int sign_hi = sf.eval(hi).sign();
        if (sign_hi == 0) {
            lo = hi;
            exact = true;
        }
        const Rational scale = Rational(2).pow(-prec);
        while (!exact) {
            // stop when hi - lo <= lo * 2^-prec
            if (lo.sign() > 0 && hi - lo <= lo * scale) break;
            Rational mid = (lo + hi) / Rational(2);
            int s = sf.eval(mid).sign();
            if (s == 0) {
                lo = hi = mid;
                exact = true;
                break;
            }
            if (s == sign_hi)
                hi = mid;
            else
                lo = mid;
        }
    }

    Rational mid = (lo + hi) / Rational(2);
    BigFloat value = BigFloat::from_rational(mid, prec, Round::Nearest);
    return {lo, hi, value};
}

} // namespace ghm
