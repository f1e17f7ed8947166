#include "dyckzeta/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "dyckzeta/errors.hpp"

namespace dyckzeta {

namespace {

using Real = long double;
using RealMatrix = std::vector<std::vector<Real>>;

// Gaussian elimination without pivoting. For a Z-matrix, every pivot being
// positive is equivalent to all leading principal minors being positive,
// i.e. to the matrix being a nonsingular M-matrix. Returns false otherwise.
bool solve_m_matrix(RealMatrix m, std::vector<Real>& rhs) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (!(m[k][k] > 0)) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Real f = m[i][k] / m[k][k];
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    Real acc = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= m[k][j] * rhs[j];
    rhs[k] = acc / m[k][k];
  }
  return true;
}

Real determinant(RealMatrix m) {
  const std::size_t n = m.size();
  Real det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(m[i][k]) > std::fabs(m[p][k])) p = i;
    }
    if (m[p][k] == 0) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Real f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

void require_strongly_connected(const Graph& g) {
  if (!g.strongly_connected()) {
    throw Error(ErrorKind::NotIrreducible, "graph is not strongly connected");
  }
}

}  // namespace

std::string to_string(EntropyMethod m) {
  switch (m) {
    case EntropyMethod::Cor32Root: return "Cor32Root";
    case EntropyMethod::PeriodicEstimate: return "PeriodicEstimate";
    case EntropyMethod::ClosedForm: return "ClosedForm";
    case EntropyMethod::XvKappa: return "XvKappa";
  }
  return "Unknown";
}

std::string to_string(BoundBranch b) {
  switch (b) {
    case BoundBranch::None: return "None";
    case BoundBranch::Thm34: return "Thm34";
    case BoundBranch::Thm35: return "Thm35";
  }
  return "Unknown";
}

CodeGfValue eval_code_gf(const Graph& g, double x, const CodeGfOptions& opts) {
  if (!(x > 0)) throw Error(ErrorKind::DomainError, "eval_code_gf needs x > 0");
  const std::size_t n = g.vertex_count();
  const auto& adj = g.adjacency();
  const Real x2 = static_cast<Real>(x) * static_cast<Real>(x);

  CodeGfValue out;
  std::vector<Real> cur(n, 0.0L);
  const auto image = [&](const std::vector<Real>& at) {
    std::vector<Real> f(n, 0.0L);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (adj[u][v] != 0) f[u] += static_cast<Real>(adj[u][v]) / (1 - at[v]);
      }
      f[u] *= x2;
    }
    return f;
  };
  const auto diverged = [&](std::uint64_t it) {
    out.divergent = true;
    out.iterations = it;
    out.g = cur;
    return out;
  };

  for (std::uint64_t it = 1; it <= opts.max_iter; ++it) {
    const std::vector<Real> f = image(cur);
    if (std::any_of(f.begin(), f.end(), [](Real y) { return !(y < 1); })) {
      return diverged(it);
    }
    std::vector<Real> next;
    if (opts.scheme == FixedPointScheme::Kleene) {
      next = f;
    } else {
      RealMatrix m(n, std::vector<Real>(n, 0.0L));
      std::vector<Real> step(n);
      for (std::size_t u = 0; u < n; ++u) {
        step[u] = f[u] - cur[u];
        for (std::size_t v = 0; v < n; ++v) {
          const Real d = 1 - cur[v];
          m[u][v] = (u == v ? 1.0L : 0.0L) - x2 * static_cast<Real>(adj[u][v]) / (d * d);
        }
      }
      if (!solve_m_matrix(std::move(m), step)) return diverged(it);
      next.resize(n);
      for (std::size_t u = 0; u < n; ++u) next[u] = cur[u] + step[u];
    }
    Real change = 0;
    bool decreased = false;
    for (std::size_t u = 0; u < n; ++u) {
      change = std::max(change, std::fabs(next[u] - cur[u]));
      decreased = decreased || next[u] < cur[u];
    }
    if (decreased) {
      // In exact arithmetic the iterates never decrease below the fixed
      // point. A decrease is rounding at convergence, or else a sign that
      // there is no fixed point to approach.
      Real defect = 0;
      for (std::size_t u = 0; u < n; ++u) {
        defect = std::max(defect, std::fabs(f[u] - cur[u]));
      }
      if (defect < opts.tol) {
        out.g = cur;
        out.iterations = it;
        return out;
      }
      return diverged(it);
    }
    cur = std::move(next);
    if (std::any_of(cur.begin(), cur.end(), [](Real y) { return !(y < 1); })) {
      return diverged(it);
    }
    if (change < opts.tol) {
      out.g = cur;
      out.iterations = it;
      return out;
    }
  }
  return diverged(opts.max_iter);
}

std::optional<double> entropy_phi(const Graph& g, double x,
                                  const CodeGfOptions& opts) {
  const CodeGfValue val = eval_code_gf(g, x, opts);
  if (val.divergent) return std::nullopt;
  const std::size_t n = g.vertex_count();
  RealMatrix m(n, std::vector<Real>(n));
  for (std::size_t u = 0; u < n; ++u) {
    const Real dstar = 1 / (1 - val.g[u]);
    for (std::size_t v = 0; v < n; ++v) {
      m[u][v] = (u == v ? 1.0L : 0.0L) -
                dstar * static_cast<Real>(g.adjacency()[u][v]) * x;
    }
  }
  return static_cast<double>(determinant(std::move(m)));
}

EntropyReport entropy_markov_dyck(const Graph& g, const EntropyOptions& opts) {
  require_strongly_connected(g);
  const double rho = perron_rho(g);
  const double upper = rho + opts.tol;

  EntropyReport rep;
  rep.method = EntropyMethod::Cor32Root;
  const auto phi = [&](double x) {
    ++rep.iterations;
    return entropy_phi(g, x, opts.code);
  };

  // Upward scan: lo always has phi > 0 (phi(0) = 1).
  const double step = rho / 64;
  double lo = 0.0;
  double lo_phi = 1.0;
  double hi = 0.0;
  bool hi_divergent = false;
  for (int k = 1;; ++k) {
    const double x = std::min(upper, k * step);
    const auto val = phi(x);
    if (val && *val > 0) {
      lo = x;
      lo_phi = *val;
      if (x >= upper) {
        throw Error(ErrorKind::InternalInconsistency,
                    "no zero of det(I - D* A z) up to rho");
      }
      continue;
    }
    hi = x;
    hi_divergent = !val;
    break;
  }

  // Bisection; divergent points lie beyond the root, like negative ones.
  while (hi - lo > opts.tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const auto val = phi(mid);
    if (val && *val > 0) {
      lo = mid;
      lo_phi = *val;
    } else {
      hi = mid;
      hi_divergent = !val;
    }
  }

  rep.lo = lo;
  rep.hi = hi;
  rep.root = 0.5 * (lo + hi);
  if (!hi_divergent) {
    const auto at_root = phi(rep.root);
    rep.residual = at_root ? *at_root : lo_phi;
  } else {
    // The bracket closed against the divergence frontier x_s. Near x_s the
    // code series has a square-root singularity, phi(x) ~ phi_s + k
    // sqrt(x_s - x); extrapolate phi_s from lo and a point further inside.
    const double inner = std::max(0.0, lo - 99 * (hi - lo));
    const auto inner_phi = phi(inner);
    const double s_lo = std::sqrt(hi - lo);
    const double s_in = std::sqrt(hi - inner);
    const double slope = inner_phi ? (*inner_phi - lo_phi) / (s_in - s_lo) : 0.0;
    const double phi_s = lo_phi - slope * s_lo;
    const double slack = 2 * std::fabs(slope) * s_lo + 1e-9;
    rep.residual = phi_s;
    if (!inner_phi || std::fabs(phi_s) > slack) {
      throw Error(ErrorKind::SingularityBeforeRoot,
                  "code system diverges at x = " + std::to_string(hi) +
                      " with det(I - D* A z) still positive (" +
                      std::to_string(phi_s) + ")");
    }
    rep.at_divergence_frontier = true;
  }
  if (rep.root > rho + 2 * opts.tol) {
    throw Error(ErrorKind::InternalInconsistency,
                "entropy root exceeds the Perron root of the edge shift");
  }
  rep.value = -std::log(rep.root);
  return rep;
}

PeriodicEstimate entropy_periodic_estimate(const std::vector<BigInt>& pi) {
  PeriodicEstimate out;
  for (std::size_t k = 0; k < pi.size(); ++k) {
    if (sgn(pi[k]) <= 0) continue;
    const std::size_t n = k + 1;
    // log of a big integer: log(mantissa) + exponent * log 2.
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, pi[k].get_mpz_t());
    const double lg = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    out.n.push_back(n);
    out.rate.push_back(lg / static_cast<double>(n));
  }
  if (out.n.empty()) {
    throw Error(ErrorKind::NoData, "no period with a nonzero point count");
  }
  out.estimate = out.rate.back();
  return out;
}

long double first_return_value(const Graph& g, Vertex v, long double x) {
  const IntPolynomial p = char_poly(g);
  const IntPolynomial pv = char_poly_minor(g, v);
  return 1 - p.evaluate(x) / pv.evaluate(x);
}

Series first_return_rational_series(const Graph& g, Vertex v,
                                    std::size_t order) {
  const Series p = char_poly(g).to_series(order);
  const Series pv = char_poly_minor(g, v).to_series(order);
  return Series::constant(1, order) - p / pv;
}

double dv_gf_closed(const Graph& g, Vertex v, double x) {
  const Real fr2 = first_return_value(g, v, static_cast<Real>(x) * x);
  const Real disc = 1 - 4 * fr2;
  if (disc < 0) {
    throw Error(ErrorKind::DomainError,
                "1 - 4 fr_v(x^2) < 0 at x = " + std::to_string(x));
  }
  return static_cast<double>((1 - std::sqrt(disc)) / 2);
}

double dv_cv_gf_closed(const Graph& g, Vertex v, double x) {
  const Real fr = first_return_value(g, v, x);
  if (!(fr < 1)) {
    throw Error(ErrorKind::DomainError, "fr_v(x) >= 1 at x = " + std::to_string(x));
  }
  return static_cast<double>(dv_gf_closed(g, v, x) / (1 - fr));
}

Series dv_gf_series(const Graph& g, Vertex v, std::size_t order) {
  const Series fr2 = compose_z_squared(first_return_rational_series(g, v, order));
  const Series one = Series::constant(1, order);
  return (one - sqrt(one - fr2 * Rational(4))) * Rational(1, 2);
}

EntropyReport xv_entropy(const Graph& g, Vertex v, double tol) {
  g.check_vertex(v);
  require_strongly_connected(g);
  const double rho = perron_rho(g);
  const IntPolynomial p = char_poly(g);
  const IntPolynomial pv = char_poly_minor(g, v);
  const auto fr = [&](Real z) { return 1 - p.evaluate(z) / pv.evaluate(z); };
  const auto disc = [&](Real z) { return 1 - 4 * fr(z * z); };
  const auto psi = [&](Real z) {
    return 2 * fr(z) - std::sqrt(std::max<Real>(0, disc(z))) - 1;
  };

  EntropyReport rep;
  rep.method = EntropyMethod::XvKappa;

  // fr_v increases on (0, rho), so the domain 1 - 4 fr_v(z^2) >= 0 is an
  // interval (0, edge].
  Real upper = rho;
  if (disc(upper) < 0) {
    Real lo = 0;
    Real hi = upper;
    while (hi - lo > tol * 1e-3) {
      const Real mid = (lo + hi) / 2;
      (disc(mid) >= 0 ? lo : hi) = mid;
      ++rep.iterations;
    }
    upper = hi;
  }
  // At the domain edge the square root vanishes; psi is 2 fr - 1 there.
  if (psi(upper) < -tol) {
    throw Error(ErrorKind::NoRoot,
                "no root of 2 fr_v(z) - sqrt(1 - 4 fr_v(z^2)) = 1 in (0, " +
                    std::to_string(static_cast<double>(upper)) +
                    "]; psi = " + std::to_string(static_cast<double>(psi(upper))) +
                    (upper < rho ? " at the domain edge" : " at rho"));
  }
  Real lo = 0;
  Real hi = upper;
  while (hi - lo > tol) {
    const Real mid = (lo + hi) / 2;
    (psi(mid) < 0 ? lo : hi) = mid;
    ++rep.iterations;
  }
  rep.lo = static_cast<double>(lo);
  rep.hi = static_cast<double>(hi);
  rep.root = static_cast<double>((lo + hi) / 2);
  rep.residual = static_cast<double>(psi((lo + hi) / 2));
  rep.value = -std::log(rep.root);
  return rep;
}

BoundsSummary entropy_bounds(const Graph& g) {
  require_strongly_connected(g);
  BoundsSummary out;
  out.rho = perron_rho(g);
  const Real rho = out.rho;
  const IntPolynomial p = char_poly(g);
  const IntPolynomial dp = p.derivative();
  const Real p_prime = dp.evaluate(rho);
  const Real p_rho2 = p.evaluate(rho * rho);

  bool any_thm34 = false;
  Real best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    BoundReport rep;
    rep.vertex = v;
    rep.rho = out.rho;
    const IntPolynomial pv = char_poly_minor(g, v);
    const Real pv_rho2 = pv.evaluate(rho * rho);
    if (pv_rho2 == 0) {
      rep.degenerate = true;
      out.vertices.push_back(rep);
      continue;
    }
    const Real q = p_rho2 / pv_rho2;
    rep.q_at_rho2 = static_cast<double>(q);
    const Real pv_rho = pv.evaluate(rho);
    const Real excess = q - 0.75L;
    if (excess > 0) {
      const Real s = std::sqrt(excess);
      const Real correction =
          pv_rho * (excess - s / 2) / (rho * p_prime * (rho + s));
      rep.branch = BoundBranch::Thm34;
      rep.applicable = true;
      rep.bound = static_cast<double>(-std::log(rho) + correction);
      if (!any_thm34 || correction > best) best = correction;
      any_thm34 = true;
    } else if (excess < 0) {
      const Real correction = pv_rho / (2 * rho * rho * p_prime) * excess;
      rep.branch = BoundBranch::Thm35;
      rep.applicable = true;
      rep.bound = static_cast<double>(-std::log(rho) + correction);
    }
    out.vertices.push_back(rep);
  }
  out.rho_below_quarter = out.rho < 0.25;
  out.cor37_applicable = out.rho_below_quarter && any_thm34;
  if (out.cor37_applicable) {
    out.cor37_bound = static_cast<double>(-std::log(rho) + best);
  }
  return out;
}

}  // namespace dyckzeta
