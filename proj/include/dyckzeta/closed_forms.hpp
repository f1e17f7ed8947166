#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "dyckzeta/entropy.hpp"
#include "dyckzeta/graph.hpp"
#include "dyckzeta/int_polynomial.hpp"
#include "dyckzeta/series.hpp"

namespace dyckzeta {

/// Parameters of the two-vertex family with adjacency [[a, b], [c, 0]].
struct FabcParams {
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::uint64_t c = 1;

  /// Throws DomainError unless a, b, c >= 1.
  void validate() const;
  friend bool operator==(const FabcParams&, const FabcParams&) = default;
};

Graph fabc_graph(const FabcParams& p);

/// The cubic a g^3 - (a+c) g^2 + c(1 + (c-b) z^2) g - c^2 z^2 = 0 satisfied
/// by the code series of the second vertex, and its branch with g(0) = 0.
struct CubicBranch {
  FabcParams p;

  /// Coefficients of g^0..g^3 at z.
  std::array<long double, 4> coefficients(long double z) const;
  long double value(long double g, long double z) const;
  long double derivative(long double g, long double z) const;
  long double discriminant(long double z) const;

  // Trigonometric-solution parameters as printed in the literature. They do
  // not reproduce the branch (at a = b = c = 1 the arccos argument is
  // -2 - 27z^2), so they are kept for reference and never evaluated on the
  // computation path.
  long double mu(long double z) const;
  long double nu(long double z) const;
};

/// Dyck shift on N symbols: g = (1 - sqrt(1 - 4N z^2))/2 and
/// zeta = 2(1 + s)/(1 - 2Nz + s)^2 with s = sqrt(1 - 4N z^2). The zeta series
/// is checked against the generic engine (InternalInconsistency otherwise).
std::pair<Series, Series> dyck_gf_and_zeta(std::uint64_t loops,
                                           std::size_t order);
/// log(N + 1).
EntropyReport dyck_entropy(std::uint64_t loops);

/// xi(x) = (2/sqrt 3) sin(arcsin(3 sqrt(3) x / 2) / 3), the root of
/// xi^3 - xi + x = 0 vanishing at 0. Defined for 0 <= x <= 2/(3 sqrt 3).
double fib_xi(double x);
/// Series of xi from xi = z + xi^3.
Series fib_xi_series(std::size_t order);
/// zeta = (xi/z) / (2 xi^2 + xi - 1)^2.
Series fib_zeta(std::size_t order);
/// 3 log 2 - log 3, cross-checked against the generic root 3/8.
EntropyReport fib_entropy();

/// Code series of the second vertex at x > 0: Newton continuation along the
/// branch from the origin, seeded by the series solution. Throws BranchError
/// when the branch cannot be followed (the cubic's derivative vanishes or
/// the value leaves [0, 1)).
double fabc_code_gf(const FabcParams& p, double x);
/// Series solution of the cubic with g(0) = 0.
Series fabc_code_series(const FabcParams& p, std::size_t order);
/// c g (1 - g) / (a g^2 - (a + c(1+b)z) g + c z)^2, checked against the
/// generic engine.
Series fabc_zeta(const FabcParams& p, std::size_t order);

/// P_{a,b,c}, ascending coefficients.
IntPolynomial fabc_entropy_poly(const FabcParams& p);
/// -log of the smallest positive root of P_{a,b,c}. For c = a + b the value
/// is log(1 + a + b); for (a, 1, a) it is log(a+1) - log(a+2) + log(a+3).
/// Both closed forms are compared with the root.
EntropyReport fabc_entropy(const FabcParams& p, double tol = 1e-12);

/// Smallest positive root z of P_{a,b,c} at which the code branch g(z) of
/// the cubic also solves a g^2 - (a + c(1+b)z) g + c z = 0, i.e. the root
/// that does come from a common solution of the two equations. For some
/// parameters (e.g. (1,2,2)) P_{a,b,c} has a smaller extraneous root, and
/// fabc_entropy then overstates the entropy; this selection does not.
EntropyReport fabc_entropy_branch_root(const FabcParams& p, double tol = 1e-12);

/// a g^2 - (a + c(1+b)z) g + c z.
long double fabc_quadratic(const FabcParams& p, long double g, long double z);

/// Graphs with a closed-form entropy, recognised from the adjacency matrix.
struct ClosedFormShape {
  enum class Kind { DyckLoops, Fabc } kind = Kind::DyckLoops;
  std::uint64_t loops = 0;  ///< DyckLoops
  FabcParams params;        ///< Fabc
  bool relabeled = false;   ///< Fabc with the vertices swapped
};
std::optional<ClosedFormShape> detect_closed_form_shape(const Graph& g);
/// Closed-form entropy for a recognised shape: log(N+1), 3 log 2 - log 3,
/// log(1+a+b) for c = a+b, log(a+1) - log(a+2) + log(a+3) for (a,1,a), and
/// otherwise the branch-consistent
/// root of P_{a,b,c}.
EntropyReport closed_form_entropy(const ClosedFormShape& shape);

}  // namespace dyckzeta
