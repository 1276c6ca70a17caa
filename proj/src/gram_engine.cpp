#include "ghm/gram_engine.hpp"

#include "ghm/errors.hpp"

namespace ghm {

ComplexRational OrthoSystemSpec::connection_at(int n, int k) const {
    if (!connection) return ComplexRational(n == k ? 1 : 0);
    return connection(n, k);
}

FactoredTriangular orthonormal_coefficients(const OrthoSystemSpec& sys, int n) {
    if (n < 0) throw DomainError("orthonormal_coefficients: negative order");
    if (!sys.order_available(n)) throw DomainError("orthonormal_coefficients: order unavailable");
    FactoredTriangular out{ExactMatrix(n + 1), {}};
    out.scale_sq.reserve(static_cast<size_t>(n) + 1);
    for (int r = 0; r <= n; ++r) {
        for (int k = 0; k <= r; ++k) out.core.at(r, k) = sys.coeff_core(r, k);
        if (out.core.at(r, r).is_zero())
            throw DomainError("orthonormal_coefficients: generator returned zero diagonal");
        Rational d2 = sys.scale_sq(r);
        if (d2.sign() <= 0)
            throw DomainError("orthonormal_coefficients: nonpositive squared scale");
        out.scale_sq.push_back(std::move(d2));
    }
    return out;
}

namespace {

// Inverse of a lower-triangular matrix by forward substitution.
ExactMatrix lower_triangular_inverse(const ExactMatrix& l) {
    const int n = l.size();
    ExactMatrix inv(n);
    for (int c = 0; c < n; ++c) {
        if (l.at(c, c).is_zero())
            throw SingularMatrixError("triangular inverse: zero diagonal");
        inv.at(c, c) = l.at(c, c).inverse();
        for (int r = c + 1; r < n; ++r) {
            ComplexRational s;
            for (int k = c; k < r; ++k) s += l.at(r, k) * inv.at(k, c);
            inv.at(r, c) = -(s / l.at(r, r));
        }
    }
    return inv;
}

ExactMatrix dual_core_matrix(const OrthoSystemSpec& sys, int n) {
    ExactMatrix b(n + 1);
    for (int r = 0; r <= n; ++r)
        for (int k = 0; k <= r; ++k) b.at(r, k) = sys.dual_core(r, k);
    return b;
}

} // namespace

ExactMatrix moment_matrix(const OrthoSystemSpec& sys, int n) {
    FactoredTriangular a = orthonormal_coefficients(sys, n);
    ExactMatrix a_inv = lower_triangular_inverse(a.core);
    ExactMatrix b_inv = a_inv;
    if (!sys.same_basis) {
        if (!sys.dual_core) throw DomainError("moment_matrix: dual generator missing");
        b_inv = lower_triangular_inverse(dual_core_matrix(sys, n));
    }
    // H = core^-1 D^-2 (dual_core^-1)^*
    ExactMatrix h(n + 1);
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) {
            ComplexRational s;
            for (int l = 0; l <= std::min(j, k); ++l)
                s += a_inv.at(j, l) * b_inv.at(k, l).conj() / ComplexRational(a.scale_sq[l]);
            h.at(j, k) = s;
        }
    return h;
}

ExactMatrix factored_inverse(const OrthoSystemSpec& sys, int n) {
    FactoredTriangular a = orthonormal_coefficients(sys, n);
    const bool dual = !sys.same_basis;
    ExactMatrix b = dual ? dual_core_matrix(sys, n) : a.core;
    ExactMatrix g(n + 1);
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) {
            ComplexRational s;
            for (int l = std::max(j, k); l <= n; ++l)
                s += ComplexRational(a.scale_sq[l]) * b.at(l, j).conj() * a.core.at(l, k);
            g.at(j, k) = s;
        }
    return g;
}

ClosedDeterminants closed_determinants(const OrthoSystemSpec& sys, int n) {
    FactoredTriangular a = orthonormal_coefficients(sys, n);
    Rational det_gram(1);
    ComplexRational conn(1);
    for (int j = 0; j <= n; ++j) {
        det_gram /= a.scale_sq[static_cast<size_t>(j)] * a.core.at(j, j).abs2();
        conn *= sys.connection_at(j, j).conj();
    }
    return {det_gram, ComplexRational(det_gram) * conn};
}

ExactMatrix recover_gram(const ExactMatrix& h, const ExactMatrix& c) {
    if (h.size() != c.size()) throw DomainError("recover_gram: size mismatch");
    for (int r = 0; r < c.size(); ++r) {
        if (c.at(r, r).is_zero()) throw SingularMatrixError("recover_gram: singular C");
        for (int k = r + 1; k < c.size(); ++k)
            if (!c.at(r, k).is_zero()) throw DomainError("recover_gram: C not lower triangular");
    }
    // (C^*)^-1 = (C^-1)^*
    ExactMatrix c_inv_star = lower_triangular_inverse(c).conj_transpose();
    return h * c_inv_star;
}

ExactMatrix rescaled_inverse(const ExactMatrix& y, const ComplexRational& e,
                             const std::vector<ComplexRational>& cvec,
                             const std::vector<ComplexRational>& dvec) {
    const int n = y.size();
    if (static_cast<int>(cvec.size()) != n || static_cast<int>(dvec.size()) != n)
        throw DomainError("rescaled_inverse: scale vector size mismatch");
    if (e.is_zero()) throw DomainError("rescaled_inverse: zero scale factor");
    for (const auto& v : cvec)
        if (v.is_zero()) throw DomainError("rescaled_inverse: zero scale factor");
    for (const auto& v : dvec)
        if (v.is_zero()) throw DomainError("rescaled_inverse: zero scale factor");
    ExactMatrix out(n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            out.at(j, k) = y.at(j, k) / (e * dvec[static_cast<size_t>(j)] * cvec[static_cast<size_t>(k)]);
    return out;
}

CoefficientBounds coefficient_bounds(const OrthoSystemSpec& sys, int n, long prec) {
    if (!sys.same_basis)
        throw NotApplicableError("coefficient_bounds: system has two bases");
    FactoredTriangular a = orthonormal_coefficients(sys, n);

    Rational denom1(0);
    bool all_real = true;
    for (int l = 0; l <= n; ++l) {
        Rational row(0);
        for (int j = 0; j <= l; ++j) {
            row += a.core.at(l, j).abs2();
            all_real = all_real && a.core.at(l, j).is_real();
        }
        denom1 += a.scale_sq[static_cast<size_t>(l)] * row;
    }
    CoefficientBounds out{denom1.inverse(),
                          BigFloat::from_rational(denom1.inverse(), prec, Round::Down),
                          std::nullopt, BigFloat(prec)};

    if (all_real) {
        Rational denom2(0);
        for (int l = 0; l <= n; ++l) {
            Rational row(0);
            for (int j = 0; j <= l; ++j) row += a.core.at(l, j).re().abs();
            denom2 += a.scale_sq[static_cast<size_t>(l)] * row * row;
        }
        out.b2_exact = denom2.inverse();
        out.b2 = BigFloat::from_rational(*out.b2_exact, prec, Round::Down);
    } else {
        // |core| is irrational in general; round the denominator up so the
        // emitted value stays a genuine lower bound
        BigFloat denom2 = BigFloat::from_long(0, prec);
        for (int l = 0; l <= n; ++l) {
            BigFloat row = BigFloat::from_long(0, prec);
            for (int j = 0; j <= l; ++j) {
                BigFloat sq =
                    BigFloat::from_rational(a.core.at(l, j).abs2(), prec, Round::Up);
                row = add(row, sqrt(sq, prec, Round::Up), prec, Round::Up);
            }
            BigFloat row2 = mul(row, row, prec, Round::Up);
            BigFloat d2 =
                BigFloat::from_rational(a.scale_sq[static_cast<size_t>(l)], prec, Round::Up);
            denom2 = add(denom2, mul(row2, d2, prec, Round::Up), prec, Round::Up);
        }
        out.b2 = denom2.reciprocal(prec, Round::Down);
    }
    return out;
}

namespace {

ComplexRational row_value_at(const FactoredTriangular& a, int l, const ComplexRational& z0) {
    // Horner over core(l, k) z0^k, k = 0..l
    ComplexRational acc = a.core.at(l, l);
    for (int k = l; k-- > 0;) acc = acc * z0 + a.core.at(l, k);
    return acc;
}

bool row_aligned(const FactoredTriangular& a, int l, const ComplexRational& z0) {
    ComplexRational ref;
    ComplexRational zk(1);
    for (int k = 0; k <= l; ++k) {
        ComplexRational t = a.core.at(l, k) * zk;
        zk *= z0;
        if (t.is_zero()) continue;
        if (ref.is_zero()) {
            ref = t;
            continue;
        }
        ComplexRational w = t * ref.conj();
        if (!w.is_real() || w.re().sign() <= 0) return false;
    }
    return true;
}

} // namespace

bool sign_alignment_holds(const OrthoSystemSpec& sys, int n, const ComplexRational& z0) {
    FactoredTriangular a = orthonormal_coefficients(sys, n);
    for (int l = 0; l <= n; ++l)
        if (!row_aligned(a, l, z0)) return false;
    return true;
}

CircleBound unit_circle_bound(const OrthoSystemSpec& sys, int n, const ComplexRational& z0,
                              long prec) {
    if (!sys.same_basis)
        throw NotApplicableError("unit_circle_bound: system has two bases");
    if (!(z0.abs2() == Rational(1)))
        throw DomainError("unit_circle_bound: |z0| must equal 1");
    FactoredTriangular a = orthonormal_coefficients(sys, n);
    Rational denom(0);
    bool aligned = true;
    for (int l = 0; l <= n; ++l) {
        denom += a.scale_sq[static_cast<size_t>(l)] * row_value_at(a, l, z0).abs2();
        aligned = aligned && row_aligned(a, l, z0);
    }
    Rational exact = denom.inverse();
    return {exact, BigFloat::from_rational(exact, prec, Round::Down), aligned};
}

CdBound christoffel_darboux_bound(const OrthoSystemSpec& sys, int n, const ComplexRational& z0,
                                  long prec) {
    if (!sys.same_basis)
        throw NotApplicableError("christoffel_darboux_bound: system has two bases");
    if (!sys.order_available(n + 1))
        throw DomainError("christoffel_darboux_bound: generator unavailable at order n+1");
    FactoredTriangular a = orthonormal_coefficients(sys, n + 1);

    auto poly_at = [&](int l) { return row_value_at(a, l, z0); };
    auto dpoly_at = [&](int l) {
        // derivative sum_k k core(l,k) z0^(k-1)
        ComplexRational acc;
        ComplexRational zk(1);
        for (int k = 1; k <= l; ++k) {
            acc += ComplexRational(Rational(k)) * a.core.at(l, k) * zk;
            zk *= z0;
        }
        return acc;
    };

    ComplexRational pn = poly_at(n), pn1 = poly_at(n + 1);
    ComplexRational dn = dpoly_at(n), dn1 = dpoly_at(n + 1);
    ComplexRational w = dn1 * pn - dn * pn1;
    ComplexRational lead_n = a.core.at(n, n), lead_n1 = a.core.at(n + 1, n + 1);
    if (!(pn.is_real() && pn1.is_real() && dn.is_real() && dn1.is_real() && lead_n.is_real() &&
          lead_n1.is_real()))
        throw DomainError("christoffel_darboux_bound: polynomials not real-valued at z0");
    if (w.is_zero()) throw DomainError("christoffel_darboux_bound: zero denominator");

    Rational exact =
        lead_n1.re() / (a.scale_sq[static_cast<size_t>(n)] * lead_n.re() * w.re());
    return {exact, BigFloat::from_rational(exact, prec, Round::Down)};
}

} // namespace ghm
