#include <doctest.h>

#include "ghm/errors.hpp"
#include "ghm/rational_polynomial.hpp"

using namespace ghm;

namespace {

ExactMatrix hilbert(int size) {
    ExactMatrix m(size);
    for (int j = 0; j < size; ++j)
        for (int k = 0; k < size; ++k) m.at(j, k) = ComplexRational(Rational(1, j + k + 1));
    return m;
}

ExactMatrix diag(std::vector<long> values) {
    ExactMatrix m(static_cast<int>(values.size()));
    for (size_t i = 0; i < values.size(); ++i)
        m.at(static_cast<int>(i), static_cast<int>(i)) =
            ComplexRational(Rational(values[i]));
    return m;
}

} // namespace

TEST_CASE("sturm chain root counting") {
    // (x-1)(x-2)(x-3)
    RationalPolynomial p({Rational(-6), Rational(11), Rational(-6), Rational(1)});
    SturmChain chain(p);
    CHECK(chain.count_roots(Rational(1, 2), Rational(7, 2)) == 3);
    CHECK(chain.count_roots(Rational(3, 2), Rational(5, 2)) == 1);
    CHECK(chain.count_roots(Rational(7, 2), Rational(10)) == 0);
    // half-open convention: root at the right endpoint counts
    CHECK(chain.count_roots(Rational(3, 2), Rational(2)) == 1);
}

TEST_CASE("real root isolation with multiplicities") {
    // (x-1)^2 from the identity matrix
    auto roots = isolate_real_roots(char_poly(ExactMatrix::identity(2)));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].multiplicity == 2);

    auto hroots = isolate_real_roots(char_poly(hilbert(3)));
    int total = 0;
    for (const auto& r : hroots) {
        total += r.multiplicity;
        CHECK(r.hi.sign() > 0); // positive definite: all roots positive
    }
    CHECK(hroots.size() == 3);
    CHECK(total == 3);
}

TEST_CASE("smallest eigenvalue: exact cases") {
    EigenvalueEnclosure one = smallest_eigenvalue(ExactMatrix::identity(3));
    CHECK(one.lo == Rational(1));
    CHECK(one.hi == Rational(1));

    EigenvalueEnclosure d = smallest_eigenvalue(diag({2, 5}));
    CHECK(d.lo <= Rational(2));
    CHECK(Rational(2) <= d.hi);
    CHECK(d.hi - d.lo <= Rational(2) * Rational(2).pow(-256));
}

TEST_CASE("smallest eigenvalue of the 2x2 Hilbert matrix") {
    const long prec = 256;
    ExactMatrix h = hilbert(2);
    EigenvalueEnclosure enc = smallest_eigenvalue(h, prec);

    // quadratic-formula oracle: (4 - sqrt(13)) / 6 at higher precision
    const long wp = 320;
    BigFloat root = sqrt(BigFloat::from_long(13, wp), wp, Round::Nearest);
    BigFloat oracle = div(sub(BigFloat::from_long(4, wp), root, wp, Round::Nearest),
                          BigFloat::from_long(6, wp), wp, Round::Nearest);
    CHECK(oracle.decimal(10).substr(0, 12) == "6.574145409e");

    BigFloat diff = abs(sub(enc.value, oracle, wp, Round::Nearest), wp, Round::Nearest);
    BigFloat tol = mul(oracle, BigFloat::pow2(-prec + 8, wp), wp, Round::Up);
    CHECK(diff.cmp(tol) <= 0);

    // enclosure endpoints straddle a sign change of the (square-free)
    // characteristic polynomial
    RationalPolynomial sf = square_free_part(char_poly(h));
    CHECK(enc.lo < enc.hi);
    CHECK(sf.eval(enc.lo).sign() * sf.eval(enc.hi).sign() < 0);
    CHECK(enc.lo > Rational(0));
    CHECK(enc.hi - enc.lo <= enc.lo * Rational(2).pow(-prec));
}

TEST_CASE("smallest eigenvalue rejects invalid input") {
    ExactMatrix nh(2);
    nh.at(0, 1) = ComplexRational(Rational(1));
    CHECK_THROWS_AS(smallest_eigenvalue(nh), NotHermitianError);

    ExactMatrix indef(2);
    indef.at(0, 0) = ComplexRational(Rational(1));
    indef.at(0, 1) = ComplexRational(Rational(2));
    indef.at(1, 0) = ComplexRational(Rational(2));
    indef.at(1, 1) = ComplexRational(Rational(1));
    CHECK_THROWS_AS(smallest_eigenvalue(indef), NotPositiveDefiniteError);
}

TEST_CASE("positive definiteness implies a positive smallest eigenvalue") {
    for (int size : {1, 2, 3, 4}) {
        ExactMatrix h = hilbert(size);
        REQUIRE(is_positive_definite(h));
        EigenvalueEnclosure enc = smallest_eigenvalue(h, 128);
        CHECK(enc.lo.sign() >= 0);
        CHECK(enc.hi.sign() > 0);
        CHECK(enc.value.sign() > 0);
    }
}

TEST_CASE("polynomial division and gcd") {
    RationalPolynomial a({Rational(-2), Rational(0), Rational(1)}); // x^2 - 2
    RationalPolynomial b({Rational(1), Rational(1)});               // x + 1
    auto [q, r] = poly_divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() == 0);

    RationalPolynomial pp = a * b * b;
    CHECK(poly_gcd(pp, pp.derivative()) == b); // repeated factor, made monic
    CHECK(square_free_part(pp) == a * b);
}
