#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dyckzeta/graph.hpp"
#include "dyckzeta/series.hpp"

namespace dyckzeta {

enum class FixedPointScheme {
  Newton,  ///< Newton steps on g = F(g) from g = 0 (monotone, fast near the branch point)
  Kleene,  ///< plain iteration g <- F(g) from g = 0
};

struct CodeGfOptions {
  double tol = 1e-14;
  std::uint64_t max_iter = 1'000'000;
  FixedPointScheme scheme = FixedPointScheme::Newton;
};

/// Value of the Markov-Dyck code system at a real point, or divergence.
struct CodeGfValue {
  bool divergent = false;
  std::vector<long double> g;
  std::uint64_t iterations = 0;
};

/// Sums g_u(x) = x^2 sum_v A(u,v) / (1 - g_v(x)) by iterating from 0. The
/// iterates increase monotonically to the power-series value; a component
/// reaching 1, loss of the M-matrix property of I - F'(g) (no fixed point),
/// or max_iter mark the point as divergent.
CodeGfValue eval_code_gf(const Graph& g, double x,
                         const CodeGfOptions& opts = {});

enum class EntropyMethod { Cor32Root, PeriodicEstimate, ClosedForm, XvKappa };
std::string to_string(EntropyMethod m);

/// Entropy value with the data that certifies it.
struct EntropyReport {
  double value = 0.0;  ///< natural-log units, value = -log(root)
  double root = 0.0;
  double lo = 0.0;  ///< certified bracket lo < root < hi
  double hi = 0.0;
  double residual = 0.0;
  EntropyMethod method = EntropyMethod::Cor32Root;
  std::uint64_t iterations = 0;
  /// The bracket closed against the divergence frontier of the code system
  /// rather than a sign change (root at the branch point).
  bool at_divergence_frontier = false;
  std::optional<std::string> closed_form;
};

struct EntropyOptions {
  double tol = 1e-10;
  CodeGfOptions code;
};

/// -log of the smallest positive zero of det(I - D*(x) A x), located by an
/// upward scan of (0, rho] and bisection. Throws NotIrreducible for graphs
/// that are not strongly connected and SingularityBeforeRoot when the code
/// system diverges before any zero can be bracketed.
EntropyReport entropy_markov_dyck(const Graph& g,
                                  const EntropyOptions& opts = {});

/// det(I - D*(x) A x); nullopt when the code system diverges at x.
std::optional<double> entropy_phi(const Graph& g, double x,
                                  const CodeGfOptions& opts = {});

struct PeriodicEstimate {
  std::vector<std::size_t> n;    ///< periods with Pi_n >= 1
  std::vector<double> rate;      ///< (1/n) log Pi_n
  double estimate = 0.0;         ///< last rate
};

/// (1/n) log Pi_n along the available n; no extrapolation. pi[k] is Pi_{k+1}.
PeriodicEstimate entropy_periodic_estimate(const std::vector<BigInt>& pi);

/// First-return generating function 1 - p(x)/p_v(x), in extended precision.
long double first_return_value(const Graph& g, Vertex v, long double x);

/// Exact series of 1 - p(z)/p_v(z).
Series first_return_rational_series(const Graph& g, Vertex v,
                                    std::size_t order);

/// Generating function of the elementary words D_v at x:
/// (1 - sqrt(1 - 4 fr_v(x^2))) / 2. Throws DomainError outside the domain.
double dv_gf_closed(const Graph& g, Vertex v, double x);
/// The same quotient divided by 2 (1 - fr_v(x)), i.e. the series of D_v
/// words followed by first-return cycles.
double dv_cv_gf_closed(const Graph& g, Vertex v, double x);
/// Exact series of (1 - sqrt(1 - 4 fr_v(z^2))) / 2.
Series dv_gf_series(const Graph& g, Vertex v, std::size_t order);

/// h(X_v) = -log kappa with kappa the root of
/// 2 fr_v(z) - sqrt(1 - 4 fr_v(z^2)) = 1 in (0, rho].
EntropyReport xv_entropy(const Graph& g, Vertex v, double tol = 1e-10);

enum class BoundBranch { None, Thm34, Thm35 };
std::string to_string(BoundBranch b);

struct BoundReport {
  Vertex vertex = 0;
  double rho = 0.0;
  double q_at_rho2 = 0.0;
  double bound = 0.0;
  bool applicable = false;
  BoundBranch branch = BoundBranch::None;
  bool degenerate = false;  ///< p_v(rho^2) = 0; vertex skipped
};

struct BoundsSummary {
  double rho = 0.0;
  std::vector<BoundReport> vertices;
  /// rho < 1/4; then some vertex has q_v(rho^2) > 3/4.
  bool rho_below_quarter = false;
  bool cor37_applicable = false;
  double cor37_bound = 0.0;
};

/// Lower bounds for h(X_v) from q_v(rho^2) = p(rho^2)/p_v(rho^2), and the
/// resulting lower bound for h(D_G) when rho < 1/4.
BoundsSummary entropy_bounds(const Graph& g);

}  // namespace dyckzeta
