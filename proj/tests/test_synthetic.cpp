#include <doctest.h>

#include "ghm/errors.hpp"
#include "ghm/synthetic.hpp"

using namespace ghm;

namespace {

muntz::Params base4() {
    muntz::Params p;
    for (long k = 0; k < 4; ++k) p.alphas.emplace_back(Rational(k));
    return p;
}

ExactMatrix sample_connection() {
    ExactMatrix c(3);
    c.at(0, 0) = ComplexRational(Rational(1));
    c.at(1, 0) = ComplexRational(Rational(1, 2));
    c.at(1, 1) = ComplexRational(Rational(2));
    c.at(2, 0) = ComplexRational();
    c.at(2, 1) = ComplexRational(Rational(-1, 3));
    c.at(2, 2) = ComplexRational(Rational(3));
    return c;
}

} // namespace

TEST_CASE("synthetic two-basis system satisfies H = G C*") {
    synthetic::Params p{base4(), sample_connection()};
    OrthoSystemSpec sys = synthetic::system(p);
    CHECK_FALSE(sys.same_basis);

    ExactMatrix g = moment_matrix(muntz::system(base4()), 2);
    ExactMatrix h = moment_matrix(sys, 2);
    CHECK(h == g * sample_connection().conj_transpose());

    // determinant relation det H = det G * prod conj(c_jj)
    ClosedDeterminants cd = closed_determinants(sys, 2);
    ComplexRational conn_det(Rational(1 * 2 * 3));
    CHECK(cd.moment == ComplexRational(cd.gram) * conn_det);
    CHECK(cd.moment == bareiss_det(h));
    CHECK(ComplexRational(cd.gram) == bareiss_det(g));

    // inverse through the coefficient sums matches elimination
    ExactMatrix inv = factored_inverse(sys, 2);
    CHECK(inv == exact_inverse(h));
    CHECK(h * inv == ExactMatrix::identity(3));

    // recovery
    CHECK(recover_gram(h, sample_connection()) == g);
}

TEST_CASE("synthetic diagonal connection determinant") {
    ExactMatrix c(2);
    c.at(0, 0) = ComplexRational(Rational(2));
    c.at(1, 1) = ComplexRational(Rational(3));
    muntz::Params base;
    base.alphas = {ComplexRational(Rational(0)), ComplexRational(Rational(1))};
    synthetic::Params p{base, c};
    OrthoSystemSpec sys = synthetic::system(p);
    // det H = det G * prod conj(c_jj) = (1/12) * 6
    ClosedDeterminants cd = closed_determinants(sys, 1);
    CHECK(cd.gram == Rational(1, 12));
    CHECK(cd.moment == ComplexRational(Rational(1, 2)));
    ExactMatrix g = moment_matrix(muntz::system(base), 1);
    CHECK(moment_matrix(sys, 1) == g * c.conj_transpose());
    CHECK(cd.moment == bareiss_det(moment_matrix(sys, 1)));
}

TEST_CASE("synthetic with a complex connection") {
    ExactMatrix c(2);
    c.at(0, 0) = ComplexRational(Rational(1));
    c.at(1, 0) = ComplexRational(Rational(0), Rational(1)); // i
    c.at(1, 1) = ComplexRational(Rational(2));
    muntz::Params base;
    base.alphas = {ComplexRational(Rational(0)), ComplexRational(Rational(1))};
    synthetic::Params p{base, c};
    OrthoSystemSpec sys = synthetic::system(p);

    ExactMatrix g = moment_matrix(muntz::system(base), 1);
    ExactMatrix h = moment_matrix(sys, 1);
    CHECK(h == g * c.conj_transpose());
    CHECK(factored_inverse(sys, 1) == exact_inverse(h));
    CHECK(recover_gram(h, c) == g);
    CHECK_FALSE(h.is_hermitian());
}

TEST_CASE("synthetic validation and bound rejection") {
    ExactMatrix zero_diag(2);
    zero_diag.at(1, 0) = ComplexRational(Rational(1));
    muntz::Params base = base4();
    CHECK_THROWS_AS((synthetic::Params{base, zero_diag}.validate()), InvalidParamsError);

    ExactMatrix not_lower(2);
    not_lower.at(0, 0) = ComplexRational(Rational(1));
    not_lower.at(0, 1) = ComplexRational(Rational(1));
    not_lower.at(1, 1) = ComplexRational(Rational(1));
    CHECK_THROWS_AS((synthetic::Params{base, not_lower}.validate()), InvalidParamsError);

    synthetic::Params p{base4(), sample_connection()};
    CHECK_THROWS_AS(coefficient_bounds(synthetic::system(p), 2, 256), NotApplicableError);
}
