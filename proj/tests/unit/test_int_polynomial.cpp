#include "doctest.h"

#include "dyckzeta/errors.hpp"
#include "dyckzeta/int_polynomial.hpp"

using namespace dyckzeta;

TEST_SUITE("int_polynomial") {

TEST_CASE("arithmetic and trimming") {
  const IntPolynomial p{1, -1};
  const IntPolynomial q{1, 1};
  CHECK(p * q == IntPolynomial{1, 0, -1});
  CHECK((p + q) == IntPolynomial{2});
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(IntPolynomial{0, 0, 3, 0}.degree() == 2);
  CHECK(IntPolynomial{1, 2, 3}.derivative() == IntPolynomial{2, 6});
}

TEST_CASE("evaluation is exact on rationals") {
  const IntPolynomial p{0, 0, 3, -8};
  CHECK(p.evaluate(Rational(3, 8)) == 0);
  CHECK(p.evaluate(0.375L) == doctest::Approx(0.0));
}

TEST_CASE("strip z power") {
  IntPolynomial p{0, 0, 3, -8};
  CHECK(p.strip_z_power() == 2);
  CHECK(p == IntPolynomial{3, -8});
}

TEST_CASE("Sturm counts distinct roots") {
  // -(3z-1)^2 (3z+1): a double root at 1/3 and a simple one at -1/3.
  const IntPolynomial p{-1, 3, 9, -27};
  CHECK(count_distinct_roots(p, Rational(0), Rational(1)) == 1);
  CHECK(count_distinct_roots(p, Rational(-1), Rational(1)) == 2);
  CHECK(count_distinct_roots(IntPolynomial{-1, 0, 1}, Rational(-2), Rational(2)) == 2);
}

TEST_CASE("smallest positive root handles a double root") {
  const IntPolynomial p{-1, 3, 9, -27};
  const RootBracket r = smallest_positive_root(p, Rational(1), 1e-12);
  CHECK(r.root == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(r.lo < Rational(1, 3));
  CHECK(r.hi >= Rational(1, 3));
  CHECK_FALSE(r.sign_change);  // tangency: no sign change
}

TEST_CASE("smallest positive root skips z = 0") {
  const RootBracket r = smallest_positive_root(IntPolynomial{0, 0, 3, -8}, Rational(1), 1e-12);
  CHECK(r.root == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(r.sign_change);
}

TEST_CASE("no root raises NoRoot") {
  try {
    smallest_positive_root(IntPolynomial{1, 1}, Rational(1), 1e-12);
    FAIL("expected NoRoot");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoRoot);
  }
}

TEST_CASE("all roots in an interval") {
  // (2z - 1)(4z - 1)(5z - 4)
  const IntPolynomial p =
      IntPolynomial{-1, 2} * IntPolynomial{-1, 4} * IntPolynomial{-4, 5};
  const auto roots = roots_in(p, Rational(0), Rational(1), 1e-12);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].root == doctest::Approx(0.25));
  CHECK(roots[1].root == doctest::Approx(0.5));
  CHECK(roots[2].root == doctest::Approx(0.8));
}

TEST_CASE("series conversion") {
  const Series s = IntPolynomial{1, -1, -1}.to_series(4);
  CHECK(s.order() == 4);
  CHECK(s[1] == -1);
  CHECK(s[3] == 0);
}

}  // TEST_SUITE
