// Acceptance checks, one per criterion. `acceptance` runs them all,
// `acceptance <id>` runs one; the exit status is nonzero if any selected
// check fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

#include "dyckzeta/closed_forms.hpp"
#include "dyckzeta/entropy.hpp"
#include "dyckzeta/errors.hpp"
#include "dyckzeta/semigroup.hpp"
#include "dyckzeta/zeta.hpp"

using namespace dyckzeta;
using namespace dyckzeta::testing;

namespace {

// Pinned tolerances and limits.
constexpr double kFibTol = 1e-9;
constexpr double kFibRuntimeSeconds = 1.0;
constexpr double kOracleRuntimeSeconds = 300.0;
constexpr std::size_t kOracleMaxN = 8;
constexpr double kDyckTol = 1e-9;
constexpr double kFamilyTol = 1e-8;
constexpr double kSumCaseTol = 1e-10;
constexpr double kDiagonalTol = 1e-10;
constexpr double kBoundTarget = 1.7554;
constexpr double kBoundTol = 1e-3;
constexpr double kQTol = 1e-8;
constexpr int kRandomGraphs = 20;
constexpr int kFuzzCases = 10000;
constexpr std::size_t kExhaustiveLength = 7;

const double kFibEntropy = 3 * std::log(2.0) - std::log(3.0);

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Log {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 8) os_ << (os_.tellp() > 0 ? "; " : "") << what;
  }
  void note(const std::string& what) { notes_ << (notes_.tellp() > 0 ? "; " : "") << what; }
  Outcome done() const {
    if (failures_ == 0) return {true, notes_.str()};
    std::ostringstream o;
    o << failures_ << " failure(s): " << os_.str();
    return {false, o.str()};
  }

 private:
  std::ostringstream os_;
  std::ostringstream notes_;
  int failures_ = 0;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<FabcParams> cube() {
  std::vector<FabcParams> out;
  for (std::uint64_t a = 1; a <= 3; ++a)
    for (std::uint64_t b = 1; b <= 3; ++b)
      for (std::uint64_t c = 1; c <= 3; ++c) out.push_back({a, b, c});
  return out;
}

std::string triple(const FabcParams& p) {
  std::ostringstream o;
  o << '(' << p.a << ',' << p.b << ',' << p.c << ')';
  return o.str();
}

Outcome fib_entropy_check() {
  Log log;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = entropy_markov_dyck(fib_graph());
  const double dt = seconds_since(t0);
  if (std::fabs(r.value - kFibEntropy) > kFibTol) log.fail("h = " + fmt("%.12f", r.value));
  if (std::fabs(r.root - 0.375) > kFibTol) log.fail("root = " + fmt("%.12f", r.root));
  if (dt >= kFibRuntimeSeconds) log.fail("runtime " + fmt("%.3f s", dt));
  log.note("h = " + fmt("%.12f", r.value) + ", root = " + fmt("%.12f", r.root));
  return log.done();
}

Outcome fib_zeta_check() {
  Log log;
  const auto t0 = std::chrono::steady_clock::now();
  const Series engine = markov_dyck_zeta(fib_graph(), 20);
  const Series closed = fib_zeta(20);
  const double dt = seconds_since(t0);
  if (engine.order() != 20 || closed.order() != 20) log.fail("wrong order");
  for (std::size_t n = 0; n <= 20; ++n) {
    if (engine[n] != closed[n]) log.fail("coefficient " + std::to_string(n));
  }
  if (dt >= kFibRuntimeSeconds) log.fail("runtime " + fmt("%.3f s", dt));
  log.note("21 coefficients equal");
  return log.done();
}

Outcome oracle_agreement() {
  Log log;
  const auto t0 = std::chrono::steady_clock::now();
  for (const Graph& g : test_graphs()) {
    const auto pi = periodic_counts_from_zeta(markov_dyck_zeta(g, kOracleMaxN));
    for (std::size_t n = 1; n <= kOracleMaxN; ++n) {
      const std::uint64_t oracle = count_periodic(g, n);
      if (pi[n - 1] != BigInt(static_cast<unsigned long>(oracle))) {
        log.fail(g.name() + " n=" + std::to_string(n) + ": " + pi[n - 1].get_str() +
                 " vs " + std::to_string(oracle));
      }
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= kOracleRuntimeSeconds) log.fail("runtime " + fmt("%.1f s", dt));
  log.note("8 graphs, n = 1..8");
  return log.done();
}

Outcome fib_first_counts() {
  Log log;
  const auto pi = periodic_counts_from_zeta(markov_dyck_zeta(fib_graph(), 3));
  const long expected[] = {2, 12, 26};
  std::ostringstream got;
  for (std::size_t n = 0; n < 3; ++n) {
    got << (n ? ", " : "") << pi[n].get_str();
    if (pi[n] != expected[n]) {
      log.fail("Pi_" + std::to_string(n + 1) + " = " + pi[n].get_str() + ", expected " +
               std::to_string(expected[n]) + " (oracle: " +
               std::to_string(count_periodic(fib_graph(), n + 1)) + ")");
    }
  }
  log.note("Pi_1..3 = " + got.str());
  return log.done();
}

Outcome code_series_agreement() {
  Log log;
  for (const Graph& g : test_graphs()) {
    const auto sol = solve_code_system(g, kOracleMaxN);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (std::size_t n = 1; n <= kOracleMaxN; ++n) {
        const std::uint64_t oracle = count_code_words(g, v, n, CodeKind::MDCode);
        if (sol.g[v][n] != Rational(static_cast<unsigned long>(oracle))) {
          log.fail(g.name() + " v=" + std::to_string(v) + " n=" + std::to_string(n));
        }
      }
    }
  }
  log.note("all vertices of 8 graphs, n <= 8");
  return log.done();
}

Outcome dyck_shifts() {
  Log log;
  for (std::uint64_t n = 1; n <= 6; ++n) {
    const double h = entropy_markov_dyck(one_vertex_graph(n)).value;
    if (std::fabs(h - std::log(n + 1.0)) > kDyckTol) {
      log.fail("N=" + std::to_string(n) + " h=" + fmt("%.12f", h));
    }
    const auto [g, zeta] = dyck_gf_and_zeta(n, 20);
    if (g != solve_code_system(one_vertex_graph(n), 20).g[0]) {
      log.fail("N=" + std::to_string(n) + " code series");
    }
    if (zeta != markov_dyck_zeta(one_vertex_graph(n), 20)) {
      log.fail("N=" + std::to_string(n) + " zeta");
    }
  }
  log.note("N = 1..6");
  return log.done();
}

Outcome family_smallest_root() {
  Log log;
  for (const auto& p : cube()) {
    const double closed = fabc_entropy(p).value;
    const double generic = entropy_markov_dyck(fabc_graph(p)).value;
    if (std::fabs(closed - generic) > kFamilyTol) {
      log.fail(triple(p) + " " + fmt("%.10f", closed) + " vs " + fmt("%.10f", generic));
    }
  }
  log.note("27 triples");
  return log.done();
}

Outcome family_sum_case() {
  Log log;
  for (std::uint64_t a = 1; a <= 3; ++a) {
    for (std::uint64_t b = 1; b <= 3; ++b) {
      const double h = fabc_entropy({a, b, a + b}).value;
      if (std::fabs(h - std::log(1.0 + a + b)) > kSumCaseTol) {
        log.fail(triple({a, b, a + b}) + " " + fmt("%.12f", h));
      }
    }
  }
  log.note("9 pairs");
  return log.done();
}

Outcome family_diagonal() {
  Log log;
  double first = 0;
  for (std::uint64_t a = 1; a <= 4; ++a) {
    const double x = static_cast<double>(a);
    const double expected = std::log(x + 1) - std::log(x + 2) + std::log(x + 3);
    const double h = fabc_entropy({a, 1, a}).value;
    if (a == 1) first = h;
    if (std::fabs(h - expected) > kDiagonalTol) {
      log.fail("a=" + std::to_string(a) + " " + fmt("%.12f", h));
    }
  }
  const double h1 = entropy_markov_dyck(fib_graph()).value;
  if (std::fabs(first - h1) > kFibTol) log.fail("a=1 differs from the Fibonacci value");
  log.note("a = 1..4");
  return log.done();
}

Outcome family_branch_root() {
  Log log;
  for (const auto& p : cube()) {
    const double closed = fabc_entropy_branch_root(p).value;
    const double generic = entropy_markov_dyck(fabc_graph(p)).value;
    if (std::fabs(closed - generic) > kFamilyTol) {
      log.fail(triple(p) + " " + fmt("%.10f", closed) + " vs " + fmt("%.10f", generic));
    }
  }
  log.note("27 triples, branch-consistent root");
  return log.done();
}

Outcome cofactor_identity() {
  Log log;
  for (const Graph& g : test_graphs()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (first_return_series(g, v, 15) != first_return_rational_series(g, v, 15)) {
        log.fail(g.name() + " v=" + std::to_string(v));
      }
    }
  }
  const Series f0 = first_return_series(fib_graph(), 0, 15);
  const Series f1 = first_return_series(fib_graph(), 1, 15);
  Series z_z2(15);
  z_z2[1] = 1;
  z_z2[2] = 1;
  Series geo(15);
  for (std::size_t n = 2; n <= 15; ++n) geo[n] = 1;
  if (f0 != z_z2) log.fail("F v=0");
  if (f1 != geo) log.fail("F v=1");
  log.note("order 15, all vertices");
  return log.done();
}

Outcome bounds() {
  Log log;
  const auto b = entropy_bounds(one_vertex_graph(5));
  const auto& v = b.vertices.at(0);
  if (!v.applicable || std::fabs(v.bound - kBoundTarget) > kBoundTol) {
    log.fail("bound " + fmt("%.10f", v.bound));
  }
  if (!(v.bound < std::log(6.0))) log.fail("bound not below log 6");
  if (std::fabs(v.q_at_rho2 - 0.8) > kQTol || !(v.q_at_rho2 > 0.75)) {
    log.fail("q = " + fmt("%.10f", v.q_at_rho2));
  }

  std::mt19937_64 rng(424242);
  int found = 0;
  for (int attempt = 0; found < kRandomGraphs && attempt < 100000; ++attempt) {
    const Graph g = random_strongly_connected(rng, 2 + attempt % 3, 4);
    if (perron_rho(g) >= 0.25) continue;
    ++found;
    bool any = false;
    for (const auto& r : entropy_bounds(g).vertices) {
      any = any || (!r.degenerate && r.q_at_rho2 > 0.75);
    }
    if (!any) log.fail("random graph " + std::to_string(found));
  }
  if (found < kRandomGraphs) log.fail("only " + std::to_string(found) + " random graphs");
  log.note("bound = " + fmt("%.10f", v.bound) + ", " + std::to_string(found) +
           " random graphs");
  return log.done();
}

Outcome identities() {
  Log log;
  for (const Graph& g : test_graphs()) {
    try {
      const auto z = markov_dyck_zeta_details(g, 32);
      const std::size_t n = g.vertex_count();
      const SeriesMatrix i = SeriesMatrix::identity(n, 32);
      const SeriesMatrix az = SeriesMatrix::scaled_z(g.adjacency(), 32);
      const Series first =
          z.dstar.determinant() * inverse((i - z.dstar * az).determinant() *
                                          (i - z.dstar * az).determinant());
      const Series second = inverse(((i - z.d - az) * (i - z.dstar * az)).determinant());
      if (first != second) log.fail(g.name() + " determinant forms");
    } catch (const Error& e) {
      log.fail(g.name() + ": " + e.what());
    }
  }

  const std::size_t order = 32;
  const auto sol = solve_code_system(fib_graph(), order);
  const Series& g1 = sol.gstar[0];
  const Series& g2 = sol.gstar[1];
  const Series z = Series::monomial(1, 1, order);
  const Series z2 = Series::monomial(1, 2, order);
  if (!(z2 * g2 * g2 * g2 - g2 + Series::constant(1, order)).is_zero()) {
    log.fail("cubic identity");
  }
  if (g1 != g2 * g2) log.fail("square identity");
  if (fib_xi_series(order) != g2 * z) log.fail("xi identity");

  const Graph f = fib_graph();
  for (Vertex v = 0; v < 2; ++v) {
    const Series dv = dv_gf_series(f, v, kOracleMaxN);
    for (std::size_t n = 1; n <= kOracleMaxN; ++n) {
      const auto oracle = count_code_words(f, v, n, CodeKind::ElementaryDv);
      if (dv[n] != Rational(static_cast<unsigned long>(oracle))) {
        log.fail("D_v v=" + std::to_string(v) + " n=" + std::to_string(n));
      }
    }
  }
  log.note("order 32");
  return log.done();
}

Word random_admissible(std::mt19937_64& rng, const Graph& g, std::size_t len) {
  const Word letters = alphabet(g);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word w;
  SemigroupElement e = SemigroupElement::unit();
  for (int attempts = 0; w.size() < len && attempts < 1000; ++attempts) {
    const Letter x = letters[pick(rng)];
    const SemigroupElement next = append_letter(g, e, x);
    if (next.is_zero()) continue;
    w.push_back(x);
    e = next;
  }
  return w;
}

Word random_word(std::mt19937_64& rng, const Graph& g, std::size_t len) {
  const Word letters = alphabet(g);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(letters[pick(rng)]);
  return w;
}

Outcome semigroup_properties() {
  Log log;
  std::mt19937_64 rng(99);
  for (const Graph& g : test_graphs()) {
    for (int i = 0; i < kFuzzCases; ++i) {
      const auto pick = [&](int k) {
        return (i + k) % 3 == 0 ? random_word(rng, g, 1 + rng() % 4)
                                : random_admissible(rng, g, 1 + rng() % 4);
      };
      const Word u = pick(0), v = pick(1), w = pick(2);
      const auto a = reduce_word(g, u), b = reduce_word(g, v), c = reduce_word(g, w);
      if (multiply(g, multiply(g, a, b), c) != multiply(g, a, multiply(g, b, c))) {
        log.fail(g.name() + " associativity: " + format_word(u) + " | " + format_word(v) +
                 " | " + format_word(w));
      }
      const Word x = random_admissible(rng, g, 2 + rng() % 8);
      if (x.empty()) continue;
      const std::size_t from = rng() % x.size();
      const std::size_t to = from + 1 + rng() % (x.size() - from);
      if (!is_admissible(g, std::span<const Letter>(x).subspan(from, to - from))) {
        log.fail(g.name() + " heredity: " + format_word(x));
      }
    }
  }

  std::uint64_t words = 0;
  for (const Graph& g : {fib_graph(), one_vertex_graph(2)}) {
    const Word letters = alphabet(g);
    Word w;
    std::function<void()> rec = [&] {
      if (!w.empty()) {
        ++words;
        const int window = static_cast<int>(kExhaustiveLength) + 4;
        if (periodic_orbit_check(g, w) != periodic_check_fallback(g, w, window)) {
          log.fail(g.name() + " periodic: " + format_word(w));
        }
      }
      if (w.size() == kExhaustiveLength) return;
      for (const auto& l : letters) {
        w.push_back(l);
        rec();
        w.pop_back();
      }
    };
    rec();
  }
  log.note(std::to_string(kFuzzCases) + " cases per graph, " + std::to_string(words) +
           " words checked exhaustively");
  return log.done();
}

Outcome integrality() {
  Log log;
  std::size_t checked = 0;
  for (const Graph& g : test_graphs()) {
    try {
      const auto z = markov_dyck_zeta_details(g, 32);
      require_nonnegative_integral(z.zeta, "zeta");
      for (const auto& s : z.codes.g) require_nonnegative_integral(s, "code series");
      for (const auto& s : z.codes.gstar) require_nonnegative_integral(s, "code star");
      for (const auto& pi : periodic_counts_from_zeta(z.zeta)) {
        ++checked;
        if (pi < 0) log.fail(g.name() + " negative Pi");
      }
    } catch (const Error& e) {
      log.fail(g.name() + ": " + e.what());
    }
  }
  for (const auto& p : cube()) {
    try {
      const auto pi = periodic_counts_from_zeta(fabc_zeta(p, 24));
      for (const auto& x : pi) {
        ++checked;
        if (x < 0) log.fail(triple(p) + " negative Pi");
      }
      require_nonnegative_integral(fabc_code_series(p, 24), "code series");
    } catch (const Error& e) {
      log.fail(triple(p) + ": " + e.what());
    }
  }
  log.note(std::to_string(checked) + " periodic counts");
  return log.done();
}

struct Criterion {
  const char* id;
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"1", "Fibonacci-Dyck entropy", fib_entropy_check},
    {"2", "Fibonacci-Dyck zeta", fib_zeta_check},
    {"3a", "zeta counts equal oracle counts", oracle_agreement},
    {"3b", "F: Pi_1..Pi_3 = (2, 12, 26)", fib_first_counts},
    {"4", "code series equal oracle counts", code_series_agreement},
    {"5", "Dyck shifts", dyck_shifts},
    {"6a", "F(a,b,c) smallest root of P equals generic entropy", family_smallest_root},
    {"6b", "F(a,b,a+b) entropy = log(1+a+b)", family_sum_case},
    {"6c", "F(a,1,a) entropy = log(a+1) - log(a+2) + log(a+3)", family_diagonal},
    {"6d", "F(a,b,c) branch-consistent root equals generic entropy", family_branch_root},
    {"7", "first-return cofactor identity", cofactor_identity},
    {"8", "entropy bounds", bounds},
    {"9", "series identities", identities},
    {"10", "semigroup properties", semigroup_properties},
    {"11", "integrality", integrality},
};

}  // namespace

int main(int argc, char** argv) {
  const std::string only = argc > 1 ? argv[1] : "";
  bool matched = false;
  bool all_pass = true;
  for (const auto& c : kCriteria) {
    if (!only.empty() && only != c.id) continue;
    matched = true;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = seconds_since(t0);
    std::printf("%s %s: %s [%s] (%.3f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str(), dt);
    std::fflush(stdout);
    all_pass = all_pass && o.pass;
  }
  if (!matched) {
    std::fprintf(stderr, "unknown criterion %s\n", only.c_str());
    return 2;
  }
  return all_pass ? 0 : 1;
}
