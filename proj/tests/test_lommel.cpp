#include <doctest.h>

#include "ghm/errors.hpp"
#include "ghm/lommel.hpp"
#include "ghm/qseries.hpp"
#include "ghm/rational_polynomial.hpp"

using namespace ghm;

namespace {
const Rational kHalf(1, 2);
}

TEST_CASE("lommel parameter validation") {
    lommel::Params ok{kHalf, kHalf};
    ok.validate();
    CHECK_THROWS_AS((lommel::Params{Rational(1), kHalf}.validate()), InvalidParamsError);
    CHECK_THROWS_AS((lommel::Params{kHalf, Rational(0)}.validate()), InvalidParamsError);
    CHECK_THROWS_AS((lommel::Params{Rational(-1, 2), kHalf}.validate()), InvalidParamsError);
}

TEST_CASE("lommel polynomial coefficients") {
    CHECK(lommel::h_coeff(0, 0, kHalf, kHalf) == Rational(1));
    // constant term of the degree-2 polynomial is -V
    CHECK(lommel::h_coeff(1, 0, kHalf, kHalf) == Rational(-1, 2));
    CHECK(lommel::h_coeff(1, 0, Rational(1, 3), Rational(2, 3)) == Rational(-2, 3));
    // leading coefficient: the q powers cancel, leaving 4^n (V;q)_{2n}
    for (int n = 1; n <= 4; ++n) {
        Rational q(1, 2), V(1, 3);
        CHECK(lommel::h_coeff(n, n, q, V) == Rational(4).pow(n) * qpoch_finite(V, q, 2 * n));
    }
    CHECK_THROWS_AS(lommel::h_coeff(1, 2, kHalf, kHalf), DomainError);
    CHECK_THROWS_AS(lommel::h_coeff(1, -1, kHalf, kHalf), DomainError);
}

TEST_CASE("lommel moment matrix is real symmetric Hankel") {
    // the factored construction must produce a genuine moment (Hankel)
    // matrix: a strong consistency check on the coefficients and scales
    for (auto [qn, qd, vn, vd] : {std::tuple{1, 2, 1, 2}, {1, 3, 2, 3}, {2, 3, 1, 5}}) {
        lommel::Params p{Rational(qn, qd), Rational(vn, vd)};
        ExactMatrix h = moment_matrix(lommel::system(p), 4);
        for (int j = 0; j <= 4; ++j)
            for (int k = 0; k <= 4; ++k) {
                CHECK(h.at(j, k).is_real());
                if (j > 0 && k < 4) CHECK(h.at(j, k) == h.at(j - 1, k + 1));
            }
        CHECK(is_positive_definite(h));
    }
}

TEST_CASE("lommel first moment") {
    lommel::Params p{kHalf, kHalf};
    ExactMatrix h = moment_matrix(lommel::system(p), 0);
    CHECK(h.at(0, 0) == ComplexRational(Rational(2))); // 1/(1-V)
    CHECK(lommel::system(p).scale_sq(0) == kHalf);
}

TEST_CASE("lommel closed determinant") {
    lommel::Params p{kHalf, kHalf};
    CHECK(lommel::closed_det(p, 0) == Rational(2)); // 1/(1-V)

    ExactMatrix h1 = moment_matrix(lommel::system(p), 1);
    CHECK(bareiss_det(h1) == ComplexRational(Rational(8, 63)));
    CHECK(lommel::closed_det(p, 1) == Rational(8, 63));

    for (int n = 0; n <= 4; ++n) {
        lommel::Params p2{Rational(1, 3), Rational(2, 3)};
        ExactMatrix h = moment_matrix(lommel::system(p2), n);
        CHECK(ComplexRational(lommel::closed_det(p2, n)) == bareiss_det(h));
    }

    // published form disagrees from n = 1 on, agrees at n = 0
    CHECK(lommel::published_det(p, 0) == lommel::closed_det(p, 0));
    CHECK(lommel::published_det(p, 1) != lommel::closed_det(p, 1));
}

TEST_CASE("lommel closed inverse") {
    lommel::Params p{kHalf, kHalf};
    CHECK(lommel::closed_inverse_entry(p, 0, 0, 0) == kHalf); // 1 - V

    ExactMatrix h = moment_matrix(lommel::system(p), 1);
    ExactMatrix inv = exact_inverse(h);
    for (int j = 0; j <= 1; ++j)
        for (int k = 0; k <= 1; ++k)
            CHECK(ComplexRational(lommel::closed_inverse_entry(p, 1, j, k)) == inv.at(j, k));

    // symmetry and the det * det(inverse) = 1 relation on a larger case
    lommel::Params p2{Rational(2, 3), Rational(1, 3)};
    const int n = 3;
    ExactMatrix g(n + 1);
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) {
            Rational v = lommel::closed_inverse_entry(p2, n, j, k);
            CHECK(v == lommel::closed_inverse_entry(p2, n, k, j));
            g.at(j, k) = ComplexRational(v);
        }
    CHECK(g == factored_inverse(lommel::system(p2), n));
    CHECK(ComplexRational(lommel::closed_det(p2, n)) * bareiss_det(g) ==
          ComplexRational(Rational(1)));
}

TEST_CASE("lommel closed bound") {
    lommel::Params p{kHalf, kHalf};
    BoundValue b0 = lommel::closed_bound(p, 0, 256);
    CHECK(*b0.exact == Rational(2)); // equals lambda of the 1x1 matrix exactly

    BoundValue b1 = lommel::closed_bound(p, 1, 256);
    CHECK(*b1.exact == Rational(2, 57));
    ExactMatrix h = moment_matrix(lommel::system(p), 1);
    EigenvalueEnclosure enc = smallest_eigenvalue(h, 256);
    CHECK(*b1.exact <= enc.lo);

    // identical to the circle bound at -1 in the x^2 variable
    CircleBound cb = unit_circle_bound(lommel::system(p), 1, ComplexRational(Rational(-1)), 256);
    CHECK(cb.exact == *b1.exact);
    CHECK(cb.aligned);
}

TEST_CASE("lommel sign alignment at -1") {
    for (auto [qn, qd, vn, vd] : {std::tuple{1, 2, 1, 2}, {1, 3, 2, 3}, {3, 4, 1, 7}}) {
        lommel::Params p{Rational(qn, qd), Rational(vn, vd)};
        for (int l = 0; l <= 5; ++l)
            for (int k = 0; k <= l; ++k) {
                Rational t = lommel::h_coeff(l, k, p.q, p.V);
                if (k % 2) t = -t;
                CHECK(t.sign() == ((l % 2) ? -1 : 1));
            }
        CHECK(sign_alignment_holds(lommel::system(p), 5, ComplexRational(Rational(-1))));
    }
}

TEST_CASE("lommel published bound exponent") {
    lommel::Params p{kHalf, kHalf};
    // agrees for n <= 1 (the exponents coincide there), differs from n = 2
    CHECK(lommel::published_bound_denominator(p, 1).inverse() ==
          *lommel::closed_bound(p, 1, 256).exact);
    CHECK(lommel::published_bound_denominator(p, 2).inverse() !=
          *lommel::closed_bound(p, 2, 256).exact);
}
