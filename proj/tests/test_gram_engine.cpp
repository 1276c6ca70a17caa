#include <doctest.h>

#include <memory>

#include "ghm/errors.hpp"
#include "ghm/gram_engine.hpp"
#include "ghm/muntz.hpp"
#include "ghm/rational_polynomial.hpp"

using namespace ghm;

namespace {

muntz::Params muntz01() { return {{ComplexRational(Rational(0)), ComplexRational(Rational(1))}}; }

muntz::Params muntz012() {
    return {{ComplexRational(Rational(0)), ComplexRational(Rational(1)),
             ComplexRational(Rational(2))}};
}

OrthoSystemSpec from_rows(std::vector<std::vector<Rational>> rows,
                          std::vector<Rational> scales) {
    OrthoSystemSpec sys;
    auto rows_p = std::make_shared<std::vector<std::vector<Rational>>>(std::move(rows));
    auto scales_p = std::make_shared<std::vector<Rational>>(std::move(scales));
    sys.coeff_core = [rows_p](int n, int k) {
        return ComplexRational((*rows_p)[static_cast<size_t>(n)][static_cast<size_t>(k)]);
    };
    sys.scale_sq = [scales_p](int n) { return (*scales_p)[static_cast<size_t>(n)]; };
    sys.max_order = static_cast<int>(rows_p->size()) - 1;
    return sys;
}

const ComplexRational kMinusOne{Rational(-1)};

} // namespace

TEST_CASE("orthonormal coefficients for the order-1 system") {
    OrthoSystemSpec sys = muntz::system(muntz01());
    FactoredTriangular a = orthonormal_coefficients(sys, 1);
    CHECK(a.scale_sq == std::vector<Rational>{Rational(1), Rational(3)});
    CHECK(a.core.at(0, 0) == ComplexRational(Rational(1)));
    CHECK(a.core.at(1, 0) == ComplexRational(Rational(-1)));
    CHECK(a.core.at(1, 1) == ComplexRational(Rational(2)));
    // orthogonality oracle: the row-1 polynomial integrates to zero on (0,1)
    Rational integral(0);
    for (int k = 0; k <= 1; ++k) integral += a.core.at(1, k).re() / Rational(k + 1);
    CHECK(integral == Rational(0));
}

TEST_CASE("single-entry core at order zero") {
    OrthoSystemSpec sys = muntz::system(muntz012());
    FactoredTriangular a = orthonormal_coefficients(sys, 0);
    CHECK(a.core.size() == 1);
    CHECK(a.core.at(0, 0) == ComplexRational(Rational(1)));
}

TEST_CASE("moment matrix from the factorization") {
    OrthoSystemSpec sys = muntz::system(muntz01());
    ExactMatrix h = moment_matrix(sys, 1);
    // entry oracle 1/(j+k+1)
    for (int j = 0; j <= 1; ++j)
        for (int k = 0; k <= 1; ++k)
            CHECK(h.at(j, k) == ComplexRational(Rational(1, j + k + 1)));

    // order 0: 1 / (d2 * core * conj(core))
    ExactMatrix h0 = moment_matrix(sys, 0);
    CHECK(h0.at(0, 0) == ComplexRational(Rational(1)));
}

TEST_CASE("factored inverse equals the elimination oracle") {
    OrthoSystemSpec sys = muntz::system(muntz01());
    ExactMatrix h = moment_matrix(sys, 1);
    ExactMatrix g = factored_inverse(sys, 1);
    CHECK(g.at(0, 0) == ComplexRational(Rational(4)));
    CHECK(g.at(0, 1) == ComplexRational(Rational(-6)));
    CHECK(g.at(1, 1) == ComplexRational(Rational(12)));
    CHECK(g == exact_inverse(h));
    CHECK(g * h == ExactMatrix::identity(2));

    CHECK(factored_inverse(sys, 0).at(0, 0) == ComplexRational(Rational(1)));
}

TEST_CASE("closed determinants") {
    OrthoSystemSpec sys = muntz::system(muntz01());
    ClosedDeterminants cd = closed_determinants(sys, 1);
    CHECK(cd.gram == Rational(1, 12));
    CHECK(cd.moment == ComplexRational(Rational(1, 12))); // identity connection
    CHECK(cd.moment == bareiss_det(moment_matrix(sys, 1)));

    ClosedDeterminants cd0 = closed_determinants(sys, 0);
    CHECK(cd0.gram == Rational(1));
}

TEST_CASE("gram recovery round trip") {
    OrthoSystemSpec sys = muntz::system(muntz01());
    ExactMatrix g = moment_matrix(sys, 1);

    ExactMatrix c = ExactMatrix::identity(2);
    CHECK(recover_gram(g, c) == g);

    c.at(0, 0) = ComplexRational(Rational(2));
    c.at(1, 1) = ComplexRational(Rational(3));
    ExactMatrix h = g * c.conj_transpose();
    CHECK(recover_gram(h, c) == g);
    CHECK(recover_gram(h, c) * c.conj_transpose() == h);

    ExactMatrix sing(2);
    sing.at(1, 0) = ComplexRational(Rational(1));
    CHECK_THROWS_AS(recover_gram(h, sing), SingularMatrixError);
}

TEST_CASE("rescaled inverse") {
    OrthoSystemSpec sys = muntz::system(muntz01());
    ExactMatrix h = moment_matrix(sys, 1);
    ExactMatrix y = exact_inverse(h);

    std::vector<ComplexRational> ones{ComplexRational(Rational(1)), ComplexRational(Rational(1))};
    CHECK(rescaled_inverse(y, ComplexRational(Rational(1)), ones, ones) == y);

    // 1x1 scalar algebra: y = 1/7, e = 2, c = 3, d = 5 -> 1/210
    ExactMatrix y1(1);
    y1.at(0, 0) = ComplexRational(Rational(1, 7));
    ExactMatrix out = rescaled_inverse(y1, ComplexRational(Rational(2)),
                                       {ComplexRational(Rational(3))},
                                       {ComplexRational(Rational(5))});
    CHECK(out.at(0, 0) == ComplexRational(Rational(1, 210)));

    // doubled Hilbert matrix: inverse halves
    ExactMatrix doubled(2);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) doubled.at(j, k) = h.at(j, k) * ComplexRational(Rational(2));
    ExactMatrix scaled = rescaled_inverse(y, ComplexRational(Rational(2)), ones, ones);
    CHECK(scaled.at(0, 0) == ComplexRational(Rational(2)));
    CHECK(scaled.at(0, 1) == ComplexRational(Rational(-3)));
    CHECK(scaled.at(1, 1) == ComplexRational(Rational(6)));
    CHECK(doubled * scaled == ExactMatrix::identity(2));
    CHECK(scaled == exact_inverse(doubled));

    CHECK_THROWS_AS(rescaled_inverse(y, ComplexRational(), ones, ones), DomainError);
}

TEST_CASE("coefficient bounds for the order-1 system") {
    OrthoSystemSpec sys = muntz::system(muntz01());
    CoefficientBounds b = coefficient_bounds(sys, 1, 256);
    // denominators 1 + 3(1+4) = 16 and 1 + 3(1+2)^2 = 28
    CHECK(b.b1_exact == Rational(1, 16));
    REQUIRE(b.b2_exact.has_value());
    CHECK(*b.b2_exact == Rational(1, 28));

    // order 0: both bounds equal the eigenvalue exactly
    CoefficientBounds b0 = coefficient_bounds(sys, 0, 256);
    CHECK(b0.b1_exact == Rational(1));
    CHECK(*b0.b2_exact == Rational(1));
}

TEST_CASE("unit circle bound and sign alignment") {
    OrthoSystemSpec sys = muntz::system(muntz01());
    CircleBound aligned = unit_circle_bound(sys, 1, kMinusOne, 256);
    CHECK(aligned.exact == Rational(1, 28)); // equals b2: signs (-1, -2) agree
    CHECK(aligned.aligned);
    CHECK(sign_alignment_holds(sys, 1, kMinusOne));

    CircleBound misaligned = unit_circle_bound(sys, 1, ComplexRational(Rational(1)), 256);
    CHECK(misaligned.exact == Rational(1, 4)); // not a bound: 1/4 > lambda
    CHECK_FALSE(misaligned.aligned);

    EigenvalueEnclosure enc = smallest_eigenvalue(moment_matrix(sys, 1), 256);
    CHECK(aligned.exact <= enc.lo);
    CHECK(misaligned.exact > enc.hi);

    CHECK_THROWS_AS(unit_circle_bound(sys, 1, ComplexRational(Rational(2)), 256), DomainError);
}

TEST_CASE("unit circle bound accepts non-real unit points") {
    OrthoSystemSpec sys = muntz::system(muntz012());
    // |3/5 + 4/5 i| = 1 exactly
    ComplexRational z(Rational(3, 5), Rational(4, 5));
    CircleBound b = unit_circle_bound(sys, 2, z, 256);
    CHECK(b.exact.sign() > 0);
}

TEST_CASE("christoffel-darboux bound") {
    OrthoSystemSpec sys = muntz::system(muntz012());
    // order 0 at z0 = -1: denominator p1'(-1) p0(-1) = 2
    CdBound cd0 = christoffel_darboux_bound(sys, 0, kMinusOne, 256);
    CHECK(cd0.exact == Rational(1));
    CHECK(cd0.exact == unit_circle_bound(sys, 0, kMinusOne, 256).exact);

    CdBound cd1 = christoffel_darboux_bound(sys, 1, kMinusOne, 256);
    CHECK(cd1.exact == Rational(1, 28));
    CHECK(cd1.exact == unit_circle_bound(sys, 1, kMinusOne, 256).exact);

    // degree n+1 generator unavailable
    CHECK_THROWS_AS(christoffel_darboux_bound(sys, 2, kMinusOne, 256), DomainError);

    // degenerate: both factored polynomials vanish at z0
    OrthoSystemSpec degen = from_rows({{Rational(1)},
                                       {Rational(1), Rational(1)},
                                       {Rational(1), Rational(2), Rational(1)}},
                                      {Rational(1), Rational(1), Rational(1)});
    CHECK_THROWS_AS(christoffel_darboux_bound(degen, 1, kMinusOne, 256), DomainError);
}

TEST_CASE("inverse identity holds through order 8") {
    muntz::Params p;
    for (long k = 0; k <= 8; ++k) p.alphas.emplace_back(Rational(k));
    OrthoSystemSpec sys = muntz::system(p);
    ExactMatrix h = moment_matrix(sys, 8);
    CHECK(factored_inverse(sys, 8) * h == ExactMatrix::identity(9));
    CHECK(factored_inverse(sys, 8) == exact_inverse(h));
}

TEST_CASE("engine error paths") {
    OrthoSystemSpec zero_diag = from_rows({{Rational(1)}, {Rational(1), Rational(0)}},
                                          {Rational(1), Rational(1)});
    CHECK_THROWS_AS(orthonormal_coefficients(zero_diag, 1), DomainError);

    OrthoSystemSpec bad_scale = from_rows({{Rational(1)}}, {Rational(-1)});
    CHECK_THROWS_AS(orthonormal_coefficients(bad_scale, 0), DomainError);

    OrthoSystemSpec sys = muntz::system(muntz01());
    OrthoSystemSpec dual = sys;
    dual.same_basis = false;
    dual.dual_core = sys.coeff_core;
    CHECK_THROWS_AS(coefficient_bounds(dual, 1, 256), NotApplicableError);
    CHECK_THROWS_AS(unit_circle_bound(dual, 1, kMinusOne, 256), NotApplicableError);
}
