#include <doctest.h>

#include "ghm/askey.hpp"
#include "ghm/errors.hpp"
#include "ghm/rational_polynomial.hpp"

using namespace ghm;

namespace {

askey::Params spot() { return {Rational(1, 2), Rational(1, 3), Rational(1, 4)}; }

ExactMatrix build_entries(const askey::Params& p, int n) {
    ExactMatrix h(n + 1);
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) h.at(j, k) = ComplexRational(askey::entry(p, j, k));
    return h;
}

} // namespace

TEST_CASE("askey validation") {
    spot().validate(3);
    askey::Params zero_q{Rational(1, 2), Rational(1, 3), Rational(0)};
    CHECK_THROWS_AS(zero_q.validate(1), InvalidParamsError);
    askey::Params alpha_one{Rational(1), Rational(1, 3), Rational(1, 4)};
    CHECK_THROWS_AS(alpha_one.validate(1), InvalidParamsError);
    // alpha beta q = 1
    askey::Params ab{Rational(2), Rational(1), Rational(1, 2)};
    CHECK_THROWS_AS(ab.validate(1), InvalidParamsError);
    CHECK(spot().pd_mode());
    askey::Params outside{Rational(3, 2), Rational(1, 3), Rational(1, 4)};
    CHECK_FALSE(outside.pd_mode());
}

TEST_CASE("askey moments and entries") {
    askey::Params p = spot();
    CHECK(askey::entry(p, 0, 0) == Rational(1));
    CHECK(askey::moment_ratio(0, p) == Rational(1));

    // direct product oracle ((1/2)(7/8)) / ((5/6)(23/24))
    Rational oracle = (Rational(1, 2) * Rational(7, 8)) / (Rational(5, 6) * Rational(23, 24));
    CHECK(oracle == Rational(63, 115));
    CHECK(askey::moment_ratio(2, p) == oracle);
    CHECK(askey::entry(p, 1, 1) == oracle);
    CHECK(askey::entry(p, 0, 1) == Rational(3, 5));
}

TEST_CASE("askey factored construction reproduces the entries") {
    askey::Params p = spot();
    OrthoSystemSpec sys = askey::system(p);
    CHECK(sys.scale_sq(0) == Rational(1));
    for (int n = 0; n <= 3; ++n) {
        ExactMatrix h = moment_matrix(sys, n);
        CHECK(h == build_entries(p, n));
    }
}

TEST_CASE("askey closed determinant") {
    askey::Params p = spot();
    CHECK(askey::closed_det(p, 0) == Rational(1));

    // symbolic 2x2 expansion: alpha (1-q)(1-alpha)(1-beta) / ((1-ab)^2 (1-ab q))
    Rational ab = p.alpha * p.beta;
    Rational symbolic = p.alpha * (Rational(1) - p.q) * (Rational(1) - p.alpha) *
                        (Rational(1) - p.beta) /
                        ((Rational(1) - ab).pow(2) * (Rational(1) - ab * p.q));
    CHECK(symbolic == Rational(108, 575));
    // direct expansion 63/115 - (3/5)^2
    CHECK(Rational(63, 115) - Rational(3, 5).pow(2) == Rational(108, 575));
    CHECK(askey::closed_det(p, 1) == Rational(108, 575));
    CHECK(bareiss_det(build_entries(p, 1)) == ComplexRational(Rational(108, 575)));

    for (int n = 0; n <= 3; ++n)
        CHECK(ComplexRational(askey::closed_det(p, n)) == bareiss_det(build_entries(p, n)));
}

TEST_CASE("askey closed inverse") {
    askey::Params p = spot();
    CHECK(askey::closed_inverse_entry(p, 0, 0, 0) == Rational(1));

    for (int n = 1; n <= 3; ++n) {
        ExactMatrix h = build_entries(p, n);
        ExactMatrix inv = exact_inverse(h);
        ExactMatrix closed(n + 1);
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) {
                closed.at(j, k) = ComplexRational(askey::closed_inverse_entry(p, n, j, k));
                CHECK(closed.at(j, k) == inv.at(j, k));
            }
        CHECK(h * closed == ExactMatrix::identity(n + 1));
    }

    // published weights fail the oracle already at n = 1
    CHECK(askey::published_inverse_entry(p, 1, 0, 0) != askey::closed_inverse_entry(p, 1, 0, 0));
    CHECK(askey::published_inverse_entry(p, 0, 0, 0) == Rational(1));
}

TEST_CASE("little q-jacobi evaluation") {
    askey::Params p = spot();
    CHECK(askey::little_q_jacobi(0, ComplexRational(Rational(-1)), p) ==
          ComplexRational(Rational(1)));
    for (int n = 1; n <= 4; ++n)
        CHECK(askey::little_q_jacobi(n, ComplexRational(), p) == ComplexRational(Rational(1)));

    // k = 1 term oracle: 1 + (1 - ab)/(1 - alpha)
    ComplexRational expected{Rational(1) +
                             (Rational(1) - p.alpha * p.beta) / (Rational(1) - p.alpha)};
    CHECK(expected == ComplexRational(Rational(8, 3)));
    CHECK(askey::little_q_jacobi(1, ComplexRational(Rational(-1)), p) == expected);
}

TEST_CASE("askey closed bound") {
    askey::Params p = spot();
    BoundValue b0 = askey::closed_bound(p, 0, 256);
    CHECK(*b0.exact == Rational(1)); // lambda of the 1x1 normalized matrix

    BoundValue b1 = askey::closed_bound(p, 1, 256);
    ExactMatrix h = build_entries(p, 1);
    EigenvalueEnclosure enc = smallest_eigenvalue(h, 256);
    CHECK(*b1.exact <= enc.lo);

    // same value through the circle bound at -1, alignment holds
    CircleBound cb = unit_circle_bound(askey::system(p), 1, ComplexRational(Rational(-1)), 256);
    CHECK(cb.exact == *b1.exact);
    CHECK(cb.aligned);
    CHECK(sign_alignment_holds(askey::system(p), 4, ComplexRational(Rational(-1))));

    askey::Params outside{Rational(3, 2), Rational(1, 3), Rational(1, 4)};
    CHECK_THROWS_AS(askey::closed_bound(outside, 1, 256), NotPositiveDefiniteError);
}

TEST_CASE("askey infinite product cross checks") {
    askey::Params p = spot();
    const long prec = 256;
    const BigFloat tol = BigFloat::pow2(-prec / 2, prec);

    BoundValue b = askey::closed_bound(p, 1, prec);
    BigFloat inf = askey::infinite_product_bound(p, 1, prec);
    BigFloat diff = abs(sub(inf, b.value, prec, Round::Nearest), prec, Round::Nearest);
    CHECK(diff.cmp(mul(b.value, tol, prec, Round::Nearest)) <= 0);

    // the published prefactor sits on the wrong side: at n = 0 it exceeds
    // the exact smallest eigenvalue 1
    BigFloat published = askey::published_bound(p, 0, prec);
    CHECK(published.cmp(BigFloat::from_long(1, prec)) > 0);
    CHECK(*askey::closed_bound(p, 0, prec).exact == Rational(1));
}

TEST_CASE("askey moment ratio series") {
    askey::Params p = spot();
    const long prec = 256;
    // 10^-30 acceptance tolerance
    BigFloat tol = BigFloat::from_rational(Rational(10).pow(-30), prec, Round::Nearest);
    for (int m = 0; m <= 4; ++m) {
        BigFloat series = askey::moment_ratio_series(m, p, prec);
        BigFloat exact = BigFloat::from_rational(askey::moment_ratio(m, p), prec, Round::Nearest);
        BigFloat diff = abs(sub(series, exact, prec, Round::Nearest), prec, Round::Nearest);
        CHECK(diff.cmp(tol) <= 0);
    }
}
