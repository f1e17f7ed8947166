#include "doctest.h"
#include "support.hpp"

#include "dyckzeta/errors.hpp"

using namespace dyckzeta;
using dyckzeta::testing::ints;

TEST_SUITE("series") {

TEST_CASE("ring operations truncate to the smaller order") {
  const Series a = ints({1, 2, 3});
  const Series b = ints({0, 1, 1, 1, 1});
  CHECK((a + b).order() == 2);
  CHECK(a * b == ints({0, 1, 3}));
  CHECK(-a + a == Series(2));
  CHECK(a * Rational(1, 2) == Series({Rational(1, 2), Rational(1), Rational(3, 2)}));
}

TEST_CASE("inverse of 1 - z is the geometric series") {
  const Series g = inverse(ints({1, -1, 0, 0, 0, 0}));
  CHECK(g == ints({1, 1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(inverse(ints({0, 1})), Error);
}

TEST_CASE("log and exp are inverse") {
  const Series a = ints({0, 1, -2, 5, 7, 0, 3});
  const Series e = exp(a);
  CHECK(e[0] == 1);
  CHECK(log(e) == a);
  // log(1/(1-2z)) = sum 2^n z^n / n
  const Series l = log(inverse(ints({1, -2, 0, 0, 0})));
  CHECK(l[1] == 2);
  CHECK(l[2] == 2);
  CHECK(l[3] == Rational(8, 3));
  CHECK(l[4] == 4);
}

TEST_CASE("log and sqrt reject a constant term other than 1") {
  CHECK_THROWS_AS(log(ints({2, 1})), Error);
  CHECK_THROWS_AS(sqrt(ints({4, 1})), Error);
  CHECK_THROWS_AS(exp(ints({1, 1})), Error);
}

TEST_CASE("sqrt(1 - 8z^2)") {
  const Series s = sqrt(ints({1, 0, -8, 0, 0, 0, 0, 0, 0}));
  CHECK(s == ints({1, 0, -4, 0, -8, 0, -32, 0, -160}));
  CHECK(s * s == ints({1, 0, -8, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("Catalan numbers from (1 - sqrt(1 - 4z^2))/2") {
  const std::size_t order = 12;
  Series four(order);
  four[0] = 1;
  four[2] = -4;
  const Series g = (Series::constant(1, order) - sqrt(four)) * Rational(1, 2);
  const long catalan[] = {1, 1, 2, 5, 14, 42};
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(g[2 * k + 2] == catalan[k]);
    CHECK(g[2 * k + 1] == 0);
  }
}

TEST_CASE("compose with z^2 keeps the order") {
  const Series a = ints({1, 2, 3, 4, 5});
  CHECK(compose_z_squared(a) == ints({1, 0, 2, 0, 3}));
}

TEST_CASE("division with a common power of z") {
  const Series num = ints({0, 0, 1, 1, 1});
  const Series den = ints({0, 0, 1, 0, 0});
  const Series q = divide_with_valuation(num, den);
  CHECK(q.order() == 2);
  CHECK(q == ints({1, 1, 1}));
  CHECK_THROWS_AS(divide_with_valuation(num, Series(4)), Error);
}

TEST_CASE("shifts") {
  const Series a = ints({0, 0, 3, 4});
  CHECK(a.valuation() == 2u);
  CHECK(a.shifted_down(2) == ints({3, 4}));
  CHECK(ints({1, 2}).shifted_up(1) == ints({0, 1}));
  CHECK_THROWS_AS(ints({1, 2}).shifted_down(1), Error);
  CHECK_FALSE(Series(3).valuation().has_value());
}

TEST_CASE("rational strings always carry a denominator") {
  CHECK(rational_string(Rational(3)) == "3/1");
  CHECK(rational_string(Rational(1, 2) - 1) == "-1/2");
  CHECK(ints({1, -1}).coefficient_strings() == std::vector<std::string>{"1/1", "-1/1"});
}

TEST_CASE("series_arith dispatch") {
  const Series a = ints({1, 1, 0});
  CHECK(series_arith(SeriesOp::Mul, a, a) == ints({1, 2, 1}));
  CHECK(series_arith(SeriesOp::Sqrt, ints({1, 2, 1})) == a);
  CHECK_THROWS_AS(series_arith(SeriesOp::Add, a, std::nullopt), Error);
}

TEST_CASE("integrality predicates") {
  CHECK(ints({1, 2, 3}).is_nonnegative_integral());
  CHECK_FALSE(ints({1, -2}).is_nonnegative_integral());
  CHECK(ints({1, -2}).is_integral());
  CHECK_FALSE(Series({Rational(1, 2)}).is_integral());
}

}  // TEST_SUITE
