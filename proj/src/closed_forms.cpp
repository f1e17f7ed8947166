#include "dyckzeta/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dyckzeta/errors.hpp"
#include "dyckzeta/zeta.hpp"

namespace dyckzeta {

namespace {

Rational to_rational(std::uint64_t v) {
  return Rational(static_cast<unsigned long>(v));
}

// z as a series.
Series z_series(std::size_t order) { return Series::monomial(1, 1, order); }

void check_against_engine(const Series& closed, const Graph& g,
                          const std::string& what) {
  if (!(closed == markov_dyck_zeta(g, closed.order()))) {
    throw Error(ErrorKind::InternalInconsistency,
                what + " disagrees with the generic zeta series");
  }
}

std::string log_term(std::uint64_t n) { return "log(" + std::to_string(n) + ")"; }

}  // namespace

void FabcParams::validate() const {
  if (a == 0 || b == 0 || c == 0) {
    throw Error(ErrorKind::DomainError, "F(a,b,c) needs a, b, c >= 1");
  }
}

Graph fabc_graph(const FabcParams& p) {
  p.validate();
  std::ostringstream name;
  name << "F(" << p.a << "," << p.b << "," << p.c << ")";
  return Graph::from_adjacency({{p.a, p.b}, {p.c, 0}}, name.str());
}

std::array<long double, 4> CubicBranch::coefficients(long double z) const {
  const long double a = p.a, b = p.b, c = p.c;
  return {-c * c * z * z, c * (1 + (c - b) * z * z), -(a + c), a};
}

long double CubicBranch::value(long double g, long double z) const {
  const auto k = coefficients(z);
  return ((k[3] * g + k[2]) * g + k[1]) * g + k[0];
}

long double CubicBranch::derivative(long double g, long double z) const {
  const auto k = coefficients(z);
  return (3 * k[3] * g + 2 * k[2]) * g + k[1];
}

long double CubicBranch::discriminant(long double z) const {
  const auto k = coefficients(z);
  const long double a = k[3], b = k[2], c = k[1], d = k[0];
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c -
         4 * a * c * c * c - 27 * a * a * d * d;
}

long double CubicBranch::mu(long double z) const {
  const long double a = p.a, b = p.b, c = p.c;
  return (c - a) * (c - a) + a * c - 3 * a * c * (c - b) * z * z;
}

long double CubicBranch::nu(long double z) const {
  const long double a = p.a, b = p.b, c = p.c;
  return 2 * (a + c) * (a + c) * (a + c) - 9 * a * c * (a + b) -
         (c - b + 27 * a * a * c * c) * z * z;
}

std::pair<Series, Series> dyck_gf_and_zeta(std::uint64_t loops,
                                           std::size_t order) {
  if (loops == 0) throw Error(ErrorKind::DomainError, "Dyck shift needs N >= 1");
  const Series one = Series::constant(1, order);
  const Rational n = to_rational(loops);
  const Series s = sqrt(one - Series::monomial(4 * n, 2, order));
  const Series gf = (one - s) * Rational(1, 2);
  const Series denom = one - Series::monomial(2 * n, 1, order) + s;
  const Series zeta = (one + s) * Rational(2) / (denom * denom);
  check_against_engine(zeta, one_vertex_graph(loops), "Dyck zeta");
  return {gf, zeta};
}

EntropyReport dyck_entropy(std::uint64_t loops) {
  if (loops == 0) throw Error(ErrorKind::DomainError, "Dyck shift needs N >= 1");
  EntropyReport rep;
  rep.method = EntropyMethod::ClosedForm;
  rep.root = 1.0 / static_cast<double>(loops + 1);
  rep.lo = rep.hi = rep.root;
  rep.value = std::log(static_cast<double>(loops + 1));
  rep.closed_form = log_term(loops + 1);
  return rep;
}

double fib_xi(double x) {
  const double edge = 2.0 / (3.0 * std::sqrt(3.0));
  if (!(x >= 0.0 && x <= edge)) {
    throw Error(ErrorKind::DomainError,
                "xi(x) needs 0 <= x <= 2/(3 sqrt 3), got " + std::to_string(x));
  }
  const double arg = std::min(1.0, 1.5 * std::sqrt(3.0) * x);
  return 2.0 / std::sqrt(3.0) * std::sin(std::asin(arg) / 3.0);
}

Series fib_xi_series(std::size_t order) {
  const Series z = z_series(order);
  Series xi = z;
  // Each round fixes two more coefficients.
  for (std::size_t round = 0; round <= order; ++round) {
    Series next = z + xi * xi * xi;
    if (next == xi) break;
    xi = std::move(next);
  }
  return xi;
}

Series fib_zeta(std::size_t order) {
  const Series xi = fib_xi_series(order + 1);
  const Series xi_over_z = xi.shifted_down(1);
  const Series x = xi.truncated(order);
  const Series denom = x * x * Rational(2) + x - Series::constant(1, order);
  return xi_over_z / (denom * denom);
}

EntropyReport fib_entropy() {
  const EntropyReport generic = entropy_markov_dyck(fabc_graph({1, 1, 1}));
  if (std::fabs(generic.root - 0.375) > 1e-9) {
    throw Error(ErrorKind::InternalInconsistency,
                "generic entropy root for F is not 3/8");
  }
  EntropyReport rep;
  rep.method = EntropyMethod::ClosedForm;
  rep.root = 0.375;
  rep.lo = generic.lo;
  rep.hi = generic.hi;
  rep.residual = generic.residual;
  rep.iterations = generic.iterations;
  rep.value = 3 * std::numbers::ln2 - std::log(3.0);
  rep.closed_form = "3 log(2) - log(3)";
  return rep;
}

Series fabc_code_series(const FabcParams& p, std::size_t order) {
  p.validate();
  const Rational a = to_rational(p.a), b = to_rational(p.b), c = to_rational(p.c);
  // g = (c z^2 + ((a+c)/c) g^2 - (a/c) g^3) / (1 + (c-b) z^2)
  const Series lead = Series::monomial(c, 2, order);
  const Series scale =
      inverse(Series::constant(1, order) + Series::monomial(c - b, 2, order));
  const Rational k2 = (a + c) / c;
  const Rational k3 = a / c;
  Series g(order);
  for (std::size_t round = 0;; ++round) {
    const Series g2 = g * g;
    Series next = (lead + g2 * k2 - g2 * g * k3) * scale;
    if (next == g) break;
    g = std::move(next);
    if (round > order + 2) {
      throw Error(ErrorKind::InternalInconsistency,
                  "cubic series iteration did not stabilise");
    }
  }
  return g;
}

double fabc_code_gf(const FabcParams& p, double x) {
  p.validate();
  if (!(x >= 0)) {
    throw Error(ErrorKind::DomainError, "fabc_code_gf needs x >= 0");
  }
  if (x == 0) return 0.0;
  const CubicBranch cubic{p};
  const auto fail = [&](long double z, long double g, const std::string& why) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "lost the g(0) = 0 branch at z = " << static_cast<double>(z)
        << " (g = " << static_cast<double>(g)
        << ", discriminant = " << static_cast<double>(cubic.discriminant(z))
        << "): " << why;
    throw Error(ErrorKind::BranchError, msg.str());
  };

  constexpr int kSteps = 256;
  constexpr std::size_t kSeedOrder = 24;
  const Series seed = fabc_code_series(p, kSeedOrder);
  long double g = 0;
  for (int k = 1; k <= kSteps; ++k) {
    const long double z = static_cast<long double>(x) * k / kSteps;
    if (k == 1) g = seed.evaluate(z);
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
      const long double f = cubic.value(g, z);
      const long double d = cubic.derivative(g, z);
      if (!(d > 0)) fail(z, g, "derivative of the cubic is not positive");
      const long double step = f / d;
      long double t = 1;
      while (t > 1e-8L &&
             std::fabs(cubic.value(g - t * step, z)) > std::fabs(f)) {
        t /= 2;
      }
      g -= t * step;
      if (std::fabs(t * step) <= 1e-19L * std::max<long double>(1, g)) {
        converged = true;
        break;
      }
    }
    if (!converged && std::fabs(cubic.value(g, z)) > 1e-15L) {
      fail(z, g, "Newton iteration did not converge");
    }
    if (!(g >= 0 && g < 1)) fail(z, g, "value left [0, 1)");
  }
  if (std::fabs(cubic.value(g, x)) > 1e-12L) {
    fail(x, g, "residual above 1e-12");
  }
  return static_cast<double>(g);
}

Series fabc_zeta(const FabcParams& p, std::size_t order) {
  p.validate();
  // Numerator and denominator both start at z^2; work two orders deeper and
  // cancel the factor.
  const std::size_t inner = order + 2;
  const Rational a = to_rational(p.a), b = to_rational(p.b), c = to_rational(p.c);
  const Series g = fabc_code_series(p, inner);
  const Series one = Series::constant(1, inner);
  const Series z = z_series(inner);
  const Series num = g * (one - g) * c;
  const Series lin = Series::constant(a, inner) + z * (c * (1 + b));
  const Series base = g * g * a - lin * g + z * c;
  const Series zeta = divide_with_valuation(num, base * base);
  const Series out = zeta.truncated(order);
  check_against_engine(out, fabc_graph(p), "F(a,b,c) zeta");
  return out;
}

IntPolynomial fabc_entropy_poly(const FabcParams& p) {
  p.validate();
  const BigInt a(static_cast<unsigned long>(p.a));
  const BigInt b(static_cast<unsigned long>(p.b));
  const BigInt c(static_cast<unsigned long>(p.c));
  std::vector<BigInt> k(4);
  k[0] = a - c;
  k[1] = b * c - a - (1 + a) * (a - c);
  k[2] = c * ((1 + b) * (1 + c) - 2 * a * b) + a * (1 + a - b);
  k[3] = (1 + c) * (a * (b - c) - c * (1 + b) * (1 + b));
  return IntPolynomial(std::move(k));
}

EntropyReport fabc_entropy(const FabcParams& p, double tol) {
  const IntPolynomial poly = fabc_entropy_poly(p);
  const RootBracket br = smallest_positive_root(poly, Rational(1), tol);
  EntropyReport rep;
  rep.method = EntropyMethod::ClosedForm;
  rep.lo = br.lo.get_d();
  rep.hi = br.hi.get_d();
  rep.root = br.root;
  rep.residual = static_cast<double>(poly.evaluate(static_cast<long double>(br.root)));
  rep.value = -std::log(br.root);

  std::optional<double> closed;
  if (p.c == p.a + p.b) {
    closed = std::log(static_cast<double>(1 + p.a + p.b));
    rep.closed_form = log_term(1 + p.a + p.b);
  } else if (p.b == 1 && p.a == p.c) {
    const double a = static_cast<double>(p.a);
    closed = std::log(a + 1) - std::log(a + 2) + std::log(a + 3);
    rep.closed_form = log_term(p.a + 1) + " - " + log_term(p.a + 2) + " + " +
                      log_term(p.a + 3);
  }
  if (closed) {
    if (std::fabs(*closed - rep.value) > 1e-10) {
      throw Error(ErrorKind::InternalInconsistency,
                  "closed form " + *rep.closed_form +
                      " disagrees with the root of P_{a,b,c}");
    }
    rep.value = *closed;
  }
  return rep;
}

long double fabc_quadratic(const FabcParams& p, long double g, long double z) {
  const long double a = p.a, b = p.b, c = p.c;
  return a * g * g - (a + c * (1 + b) * z) * g + c * z;
}

EntropyReport fabc_entropy_branch_root(const FabcParams& p, double tol) {
  constexpr long double kCommonRootTol = 1e-8L;
  const IntPolynomial poly = fabc_entropy_poly(p);
  std::string rejected;
  for (const RootBracket& br : roots_in(poly, Rational(0), Rational(1), tol)) {
    double g = 0.0;
    try {
      g = fabc_code_gf(p, br.root);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BranchError) throw;
      break;  // past the branch point; no later root can be on the branch
    }
    const long double q = fabc_quadratic(p, g, br.root);
    if (std::fabs(q) > kCommonRootTol) {
      rejected += (rejected.empty() ? "" : ", ") + std::to_string(br.root);
      continue;
    }
    EntropyReport rep;
    rep.method = EntropyMethod::ClosedForm;
    rep.lo = br.lo.get_d();
    rep.hi = br.hi.get_d();
    rep.root = br.root;
    rep.residual = static_cast<double>(q);
    rep.value = -std::log(br.root);
    rep.closed_form = rejected.empty()
                          ? "smallest root of P_{a,b,c}"
                          : "root of P_{a,b,c} on the code branch (extraneous: " +
                                rejected + ")";
    return rep;
  }
  throw Error(ErrorKind::NoRoot,
              "no root of P_{a,b,c} in (0, 1] lies on the code branch");
}

std::optional<ClosedFormShape> detect_closed_form_shape(const Graph& g) {
  const auto& m = g.adjacency();
  ClosedFormShape shape;
  if (g.vertex_count() == 1 && m[0][0] >= 1) {
    shape.kind = ClosedFormShape::Kind::DyckLoops;
    shape.loops = m[0][0];
    return shape;
  }
  if (g.vertex_count() != 2) return std::nullopt;
  shape.kind = ClosedFormShape::Kind::Fabc;
  if (m[1][1] == 0 && m[0][0] >= 1 && m[0][1] >= 1 && m[1][0] >= 1) {
    shape.params = {m[0][0], m[0][1], m[1][0]};
    return shape;
  }
  if (m[0][0] == 0 && m[1][1] >= 1 && m[1][0] >= 1 && m[0][1] >= 1) {
    shape.params = {m[1][1], m[1][0], m[0][1]};
    shape.relabeled = true;
    return shape;
  }
  return std::nullopt;
}

EntropyReport closed_form_entropy(const ClosedFormShape& shape) {
  if (shape.kind == ClosedFormShape::Kind::DyckLoops) {
    return dyck_entropy(shape.loops);
  }
  const FabcParams& p = shape.params;
  if (p == FabcParams{1, 1, 1}) return fib_entropy();
  if (p.c == p.a + p.b || (p.b == 1 && p.a == p.c)) return fabc_entropy(p);
  return fabc_entropy_branch_root(p);
}

}  // namespace dyckzeta
