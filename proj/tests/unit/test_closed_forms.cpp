#include "doctest.h"
#include "support.hpp"

#include <cmath>

#include "dyckzeta/closed_forms.hpp"
#include "dyckzeta/errors.hpp"
#include "dyckzeta/zeta.hpp"

using namespace dyckzeta;
using namespace dyckzeta::testing;

TEST_SUITE("closed_forms") {

TEST_CASE("Fibonacci code identities") {
  const std::size_t order = 24;
  const auto sol = solve_code_system(fib_graph(), order);
  const Series& g1 = sol.gstar[0];
  const Series& g2 = sol.gstar[1];
  const Series z = Series::monomial(1, 1, order);
  const Series z2 = Series::monomial(1, 2, order);
  const Series one = Series::constant(1, order);
  CHECK(z2 * g2 * g2 * g2 - g2 + one == Series(order));
  CHECK(g1 == g2 * g2);
  CHECK(fib_xi_series(order) == g2 * z);
}

TEST_CASE("xi") {
  const Series xi = fib_xi_series(12);
  // xi = z + z^3 + 3 z^5 + 12 z^7 + 55 z^9 + 273 z^11
  CHECK(xi == ints({0, 1, 0, 1, 0, 3, 0, 12, 0, 55, 0, 273, 0}));
  CHECK(fib_xi(0.375) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(fib_xi(0.0) == 0.0);
  CHECK(fib_xi(0.1) == doctest::Approx(static_cast<double>(xi.evaluate(0.1L))).epsilon(1e-9));
  CHECK_THROWS_AS(fib_xi(0.5), Error);
}

TEST_CASE("Fibonacci zeta") {
  CHECK(fib_zeta(20) == markov_dyck_zeta(fib_graph(), 20));
  CHECK(fabc_zeta({1, 1, 1}, 20) == fib_zeta(20));
}

TEST_CASE("Dyck closed forms") {
  for (std::uint64_t n = 1; n <= 4; ++n) {
    const auto [g, zeta] = dyck_gf_and_zeta(n, 20);
    CHECK(g == solve_code_system(one_vertex_graph(n), 20).g[0]);
    CHECK(zeta == markov_dyck_zeta(one_vertex_graph(n), 20));
    CHECK(dyck_entropy(n).value == doctest::Approx(std::log(n + 1.0)));
  }
  CHECK(fib_entropy().value == doctest::Approx(3 * std::log(2.0) - std::log(3.0)));
}

TEST_CASE("cubic branch") {
  for (const FabcParams p : {FabcParams{1, 1, 1}, FabcParams{1, 2, 3}, FabcParams{3, 2, 1}}) {
    const CubicBranch cubic{p};
    const Graph g = fabc_graph(p);
    const Series s = fabc_code_series(p, 30);
    CHECK(s == solve_code_system(g, 30).g[1]);
    const double rho = perron_rho(g);
    for (int i = 1; i <= 50; ++i) {
      const double x = 0.5 * rho * i / 50;
      const double v = fabc_code_gf(p, x);
      CHECK(std::fabs(static_cast<double>(cubic.value(v, x))) < 1e-12);
      const auto numeric = eval_code_gf(g, x);
      if (!numeric.divergent) {
        CHECK(v == doctest::Approx(static_cast<double>(numeric.g[1])).epsilon(1e-9));
      }
    }
  }
  CHECK_THROWS_AS(fabc_graph({0, 1, 1}), Error);
}

TEST_CASE("entropy polynomial") {
  CHECK(fabc_entropy_poly({1, 1, 2}) == IntPolynomial{-1, 3, 9, -27});
  const auto r = fabc_entropy({1, 1, 2});
  CHECK(r.root == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(r.value == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  // At a = b = c = 1 the polynomial has root 3/8.
  CHECK(fabc_entropy({1, 1, 1}).root == doctest::Approx(0.375).epsilon(1e-12));
}

TEST_CASE("diagonal family values") {
  const double expected[] = {0.98082925301172624, 1.32175583998231945, 1.56861591791384525,
                             1.76358859226135868};
  for (std::uint64_t a = 1; a <= 4; ++a) {
    CHECK(fabc_entropy({a, 1, a}).value == doctest::Approx(expected[a - 1]).epsilon(1e-10));
    CHECK(entropy_markov_dyck(fabc_graph({a, 1, a})).value ==
          doctest::Approx(expected[a - 1]).epsilon(1e-8));
  }
}

TEST_CASE("extraneous root of the entropy polynomial") {
  const FabcParams p{1, 2, 2};
  const auto literal = fabc_entropy(p);
  const auto branch = fabc_entropy_branch_root(p);
  CHECK(literal.root < branch.root);
  const double g_literal = fabc_code_gf(p, literal.root);
  const double g_branch = fabc_code_gf(p, branch.root);
  CHECK(std::fabs(static_cast<double>(fabc_quadratic(p, g_literal, literal.root))) > 1e-3);
  CHECK(std::fabs(static_cast<double>(fabc_quadratic(p, g_branch, branch.root))) < 1e-8);
  CHECK(branch.value == doctest::Approx(entropy_markov_dyck(fabc_graph(p)).value).epsilon(1e-8));
}

TEST_CASE("shape detection") {
  const auto dyck = detect_closed_form_shape(one_vertex_graph(3));
  REQUIRE(dyck);
  CHECK(dyck->kind == ClosedFormShape::Kind::DyckLoops);
  CHECK(dyck->loops == 3);
  const auto fabc = detect_closed_form_shape(fabc_graph({2, 1, 3}));
  REQUIRE(fabc);
  CHECK(fabc->kind == ClosedFormShape::Kind::Fabc);
  CHECK(fabc->params == FabcParams{2, 1, 3});
  CHECK_FALSE(fabc->relabeled);
  const auto swapped = detect_closed_form_shape(Graph::from_adjacency({{0, 3}, {1, 2}}));
  REQUIRE(swapped);
  CHECK(swapped->params == FabcParams{2, 1, 3});
  CHECK(swapped->relabeled);
  CHECK_FALSE(detect_closed_form_shape(Graph::from_adjacency({{1, 1}, {1, 1}})));
  CHECK(closed_form_entropy(*fabc).value ==
        doctest::Approx(entropy_markov_dyck(fabc_graph({2, 1, 3})).value).epsilon(1e-8));
}

}  // TEST_SUITE
