#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>

#include "dyckzeta/cli.hpp"
#include "dyckzeta/semigroup.hpp"
#include "dyckzeta/zeta.hpp"

namespace dyckzeta::cli {

namespace {

// Words checked exhaustively against the fallback periodic test.
constexpr std::size_t kFallbackWordCap = 200'000;
constexpr double kClosedFormTol = 1e-8;
constexpr std::size_t kCofactorOrder = 15;

Json header(const RunConfig& cfg) {
  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = to_string(cfg.command);
  doc["config"] = cfg.to_json();
  return doc;
}

Json graph_json(const Graph& g) {
  Json doc = Json::parse(g.to_json().dump());
  doc["adjacency"] = g.adjacency();
  doc["strongly_connected"] = g.strongly_connected();
  return doc;
}

Json error_json(const Error& e) {
  Json doc;
  doc["kind"] = std::string(to_string(e.kind()));
  doc["message"] = e.what();
  return doc;
}

EnumerationOptions enumeration(const RunConfig& cfg) {
  EnumerationOptions opts;
  opts.budget = cfg.budget;
  opts.threads = cfg.threads;
  return opts;
}

std::string shape_name(const ClosedFormShape& s) {
  if (s.kind == ClosedFormShape::Kind::DyckLoops) {
    return "one vertex, " + std::to_string(s.loops) + " loops";
  }
  return "F(" + std::to_string(s.params.a) + "," + std::to_string(s.params.b) +
         "," + std::to_string(s.params.c) + ")" +
         (s.relabeled ? " (vertices swapped)" : "");
}

// One report section: a JSON object plus its CSV tables.
struct Section {
  Json doc = Json::object();
  std::vector<Table> tables;
};

Section zeta_section(const RunConfig& cfg, const Graph& g) {
  Section s;
  const MarkovDyckZeta z = markov_dyck_zeta_details(g, cfg.order);
  const std::vector<BigInt> pi = periodic_counts_from_zeta(z.zeta);
  s.doc["zeta"] = series_json(z.zeta);
  s.doc["determinant_forms_agree"] = true;
  s.doc["fixed_point_rounds"] = z.codes.rounds;
  Json counts = Json::array();
  Table zt{"zeta", {"n", "coefficient", "coefficient_exact"}, {}};
  Table pt{"periodic_counts", {"n", "pi"}, {}};
  for (std::size_t n = 0; n <= z.zeta.order(); ++n) {
    zt.rows.push_back({std::to_string(n), decimal(z.zeta[n].get_d()),
                       rational_string(z.zeta[n])});
  }
  for (std::size_t k = 0; k < pi.size(); ++k) {
    counts.push_back({{"n", k + 1}, {"pi", big_int_json(pi[k])}});
    pt.rows.push_back({std::to_string(k + 1), pi[k].get_str()});
  }
  s.doc["periodic_counts"] = std::move(counts);
  s.tables = {std::move(zt), std::move(pt)};
  return s;
}

Section counts_section(const RunConfig& cfg, const Graph& g) {
  Section s;
  const EnumerationOptions opts = enumeration(cfg);
  Json rows = Json::array();
  Table t{"oracle_counts", {"n", "words", "periodic"}, {}};
  for (std::size_t n = 1; n <= cfg.max_n; ++n) {
    const std::uint64_t words = count_words(g, n, opts);
    const std::uint64_t periodic = count_periodic(g, n, opts);
    rows.push_back({{"n", n}, {"words", words}, {"periodic", periodic}});
    t.rows.push_back(
        {std::to_string(n), std::to_string(words), std::to_string(periodic)});
  }
  s.doc["oracle_counts"] = std::move(rows);
  s.tables = {std::move(t)};
  return s;
}

Section series_section(const RunConfig& cfg, const Graph& g) {
  Section s;
  const CodeSystemSolution sol = solve_code_system(g, cfg.order);
  Json per_vertex = Json::array();
  Table t{"code_series", {"n"}, {}};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    per_vertex.push_back({{"vertex", v}, {"series", series_json(sol.g[v])}});
    t.columns.push_back("g" + std::to_string(v));
    t.columns.push_back("g" + std::to_string(v) + "_exact");
  }
  for (std::size_t n = 0; n <= cfg.order; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& gv : sol.g) {
      row.push_back(decimal(gv[n].get_d()));
      row.push_back(rational_string(gv[n]));
    }
    t.rows.push_back(std::move(row));
  }
  s.doc["code_series"] = std::move(per_vertex);
  s.doc["fixed_point_rounds"] = sol.rounds;
  s.tables = {std::move(t)};
  return s;
}

Table entropy_table(const std::string& name, const EntropyReport& r) {
  return {name,
          {"value", "root", "lo", "hi", "residual", "method", "iterations",
           "closed_form"},
          {{decimal(r.value), decimal(r.root), decimal(r.lo), decimal(r.hi),
            decimal(r.residual), to_string(r.method),
            std::to_string(r.iterations), r.closed_form.value_or("")}}};
}

Section entropy_section(const RunConfig& cfg, const Graph& g) {
  Section s;
  EntropyOptions opts;
  opts.tol = cfg.tol;
  const EntropyReport rep = entropy_markov_dyck(g, opts);
  s.doc["entropy"] = entropy_json(rep);
  s.tables.push_back(entropy_table("entropy", rep));
  if (const auto shape = detect_closed_form_shape(g)) {
    const EntropyReport closed = closed_form_entropy(*shape);
    Json cf = entropy_json(closed);
    cf["shape"] = shape_name(*shape);
    cf["difference"] = number(closed.value - rep.value);
    s.doc["closed_form"] = std::move(cf);
    s.tables.push_back(entropy_table("closed_form", closed));
  } else {
    s.doc["closed_form"] = nullptr;
  }
  return s;
}

Section bounds_section(const RunConfig& cfg, const Graph& g) {
  Section s;
  const BoundsSummary b = entropy_bounds(g);
  Json doc = bounds_json(b);
  EntropyOptions opts;
  opts.tol = cfg.tol;
  const EntropyReport h = entropy_markov_dyck(g, opts);
  doc["entropy"] = number(h.value);
  Table t{"bounds",
          {"vertex", "q_at_rho2", "branch", "bound", "xv_entropy", "degenerate"},
          {}};
  Json xv = Json::array();
  bool below = true;
  for (const auto& v : b.vertices) {
    Json row;
    row["vertex"] = v.vertex;
    std::string xv_text;
    try {
      const EntropyReport x = xv_entropy(g, v.vertex, cfg.tol);
      row["value"] = number(x.value);
      row["kappa"] = number(x.root);
      xv_text = decimal(x.value);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoRoot) throw;
      row["error"] = error_json(e);
    }
    xv.push_back(std::move(row));
    if (v.applicable && !(v.bound < h.value)) below = false;
    t.rows.push_back({std::to_string(v.vertex),
                      v.degenerate ? "" : decimal(v.q_at_rho2),
                      to_string(v.branch), v.applicable ? decimal(v.bound) : "",
                      xv_text, v.degenerate ? "true" : "false"});
  }
  doc["xv_entropy"] = std::move(xv);
  doc["bounds_below_entropy"] = below;
  s.doc["bounds"] = std::move(doc);
  s.tables = {std::move(t)};
  return s;
}

Json poly_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) {
    if (c.fits_slong_p()) {
      out.push_back(c.get_si());
    } else {
      out.push_back(c.get_str());
    }
  }
  return out;
}

Section family_section(const RunConfig& cfg, const FabcParams& p) {
  Section s;
  const Graph g = fabc_graph(p);
  Json doc;
  doc["params"] = {{"a", p.a}, {"b", p.b}, {"c", p.c}};
  doc["adjacency"] = g.adjacency();
  const IntPolynomial poly = fabc_entropy_poly(p);
  doc["P_coefficients"] = poly_json(poly);

  const EntropyReport literal = fabc_entropy(p);
  const EntropyReport branch = fabc_entropy_branch_root(p);
  EntropyOptions opts;
  opts.tol = cfg.tol;
  const EntropyReport generic = entropy_markov_dyck(g, opts);
  doc["entropy"] = entropy_json(literal);
  doc["entropy_branch_root"] = entropy_json(branch);
  doc["entropy_generic"] = entropy_json(generic);
  doc["smallest_root_matches_generic"] =
      std::fabs(literal.value - generic.value) <= kClosedFormTol;
  doc["sum_case"] = p.c == p.a + p.b;
  doc["symmetric_case"] = p.b == 1 && p.a == p.c;

  const Series code = fabc_code_series(p, cfg.order);
  const CodeSystemSolution sol = solve_code_system(g, cfg.order);
  doc["code_series"] = series_json(code);
  doc["code_series_matches_engine"] = code == sol.g[1];
  doc["code_gf_at_root"] = number(fabc_code_gf(p, branch.root));
  doc["zeta"] = series_json(fabc_zeta(p, cfg.order));
  doc["zeta_matches_engine"] = true;  // fabc_zeta throws otherwise

  Table t{"family",
          {"a", "b", "c", "P_coefficients", "entropy", "entropy_branch_root",
           "entropy_generic"},
          {}};
  std::string coeffs;
  for (const auto& c : poly.coeffs()) coeffs += (coeffs.empty() ? "" : " ") + c.get_str();
  t.rows.push_back({std::to_string(p.a), std::to_string(p.b), std::to_string(p.c),
                    coeffs, decimal(literal.value), decimal(branch.value),
                    decimal(generic.value)});
  s.tables.push_back(std::move(t));

  if (p == FabcParams{1, 1, 1}) {
    Json fib;
    fib["xi"] = series_json(fib_xi_series(cfg.order));
    fib["zeta_matches_engine"] =
        fib_zeta(cfg.order) == markov_dyck_zeta(g, cfg.order);
    fib["entropy"] = entropy_json(fib_entropy());
    doc["fibonacci"] = std::move(fib);
  }
  s.doc["family"] = std::move(doc);
  return s;
}

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

void run_check(std::vector<Check>& out, const std::string& name,
               const std::function<std::string(bool&)>& body) {
  Check c{name, true, {}};
  try {
    c.detail = body(c.pass);
  } catch (const Error& e) {
    c.pass = false;
    c.detail = e.what();
  }
  out.push_back(std::move(c));
}

// Every word over the alphabet of length 1..max_len, in lexicographic order.
template <class F>
void for_each_word(const Word& letters, std::size_t max_len, F f) {
  Word w;
  std::function<void()> rec = [&] {
    if (!w.empty()) f(w);
    if (w.size() == max_len) return;
    for (const auto& x : letters) {
      w.push_back(x);
      rec();
      w.pop_back();
    }
  };
  rec();
}

Section verify_section(const RunConfig& cfg, const Graph& g) {
  std::vector<Check> checks;
  const std::size_t order = std::max(cfg.order, cfg.max_n);
  const EnumerationOptions opts = enumeration(cfg);
  const std::size_t n_vertices = g.vertex_count();

  std::optional<MarkovDyckZeta> z;
  run_check(checks, "zeta_determinant_forms", [&](bool&) {
    z = markov_dyck_zeta_details(g, order);
    return "quotient and product forms agree to order " + std::to_string(order);
  });
  run_check(checks, "integrality", [&](bool& pass) {
    if (!z) throw Error(ErrorKind::NoData, "zeta unavailable");
    const auto pi = periodic_counts_from_zeta(z->zeta);
    pass = std::all_of(z->codes.g.begin(), z->codes.g.end(),
                       [](const Series& s) { return s.is_nonnegative_integral(); });
    return std::to_string(pi.size()) + " periodic counts and " +
           std::to_string(n_vertices) + " code series";
  });
  run_check(checks, "periodic_counts_vs_oracle", [&](bool& pass) {
    if (!z) throw Error(ErrorKind::NoData, "zeta unavailable");
    const auto pi = periodic_counts_from_zeta(z->zeta);
    std::string detail;
    for (std::size_t n = 1; n <= cfg.max_n; ++n) {
      const std::uint64_t oracle = count_periodic(g, n, opts);
      if (pi[n - 1] != BigInt(std::to_string(oracle))) {
        pass = false;
        detail += "n=" + std::to_string(n) + ": zeta " + pi[n - 1].get_str() +
                  " vs oracle " + std::to_string(oracle) + "; ";
      }
    }
    return pass ? "n = 1.." + std::to_string(cfg.max_n) : detail;
  });
  run_check(checks, "code_series_vs_oracle", [&](bool& pass) {
    if (!z) throw Error(ErrorKind::NoData, "zeta unavailable");
    std::string detail;
    for (Vertex v = 0; v < n_vertices; ++v) {
      for (std::size_t n = 1; n <= cfg.max_n; ++n) {
        const std::uint64_t oracle =
            count_code_words(g, v, n, CodeKind::MDCode, opts);
        if (z->codes.g[v][n] != Rational(std::to_string(oracle))) {
          pass = false;
          detail += "v=" + std::to_string(v) + " n=" + std::to_string(n) + "; ";
        }
      }
    }
    return pass ? "all vertices, n = 1.." + std::to_string(cfg.max_n) : detail;
  });
  run_check(checks, "first_return_cofactor", [&](bool& pass) {
    for (Vertex v = 0; v < n_vertices; ++v) {
      if (!(first_return_series(g, v, kCofactorOrder) ==
            first_return_rational_series(g, v, kCofactorOrder))) {
        pass = false;
        return "mismatch at vertex " + std::to_string(v);
      }
    }
    return std::string("1 - p/p_v equals the path count to order 15");
  });
  run_check(checks, "elementary_dv_vs_oracle", [&](bool& pass) {
    for (Vertex v = 0; v < n_vertices; ++v) {
      const Series dv = dv_gf_series(g, v, cfg.max_n);
      for (std::size_t n = 1; n <= cfg.max_n; ++n) {
        const std::uint64_t oracle =
            count_code_words(g, v, n, CodeKind::ElementaryDv, opts);
        if (dv[n] != Rational(std::to_string(oracle))) {
          pass = false;
          return "mismatch at v=" + std::to_string(v) + " n=" + std::to_string(n);
        }
      }
    }
    return "all vertices, n = 1.." + std::to_string(cfg.max_n);
  });
  run_check(checks, "periodic_check_fallback", [&](bool& pass) {
    const Word letters = alphabet(g);
    std::size_t max_len = 0;
    std::size_t total = 0;
    std::size_t layer = 1;
    while (max_len < cfg.max_n && !letters.empty()) {
      layer *= letters.size();
      if (total + layer > kFallbackWordCap) break;
      total += layer;
      ++max_len;
    }
    std::size_t mismatches = 0;
    for_each_word(letters, max_len, [&](const Word& w) {
      if (periodic_orbit_check(g, w) !=
          periodic_check_fallback(g, w, cfg.resolved_window_factor())) {
        ++mismatches;
      }
    });
    pass = mismatches == 0;
    return std::to_string(total) + " words up to length " +
           std::to_string(max_len) + ", " + std::to_string(mismatches) +
           " mismatches";
  });
  if (g.strongly_connected()) {
    std::optional<EntropyReport> h;
    run_check(checks, "entropy_root_below_rho", [&](bool& pass) {
      EntropyOptions eo;
      eo.tol = cfg.tol;
      h = entropy_markov_dyck(g, eo);
      const double rho = perron_rho(g);
      pass = h->root <= rho + cfg.tol;
      return "root " + decimal(h->root) + ", rho " + decimal(rho);
    });
    run_check(checks, "bounds_below_entropy", [&](bool& pass) {
      if (!h) throw Error(ErrorKind::NoData, "entropy unavailable");
      const BoundsSummary b = entropy_bounds(g);
      for (const auto& v : b.vertices) {
        if (v.applicable && !(v.bound < h->value)) pass = false;
      }
      if (b.cor37_applicable && !(b.cor37_bound < h->value)) pass = false;
      return "h = " + decimal(h->value);
    });
    if (const auto shape = detect_closed_form_shape(g)) {
      run_check(checks, "closed_form_entropy", [&](bool& pass) {
        if (!h) throw Error(ErrorKind::NoData, "entropy unavailable");
        const EntropyReport closed = closed_form_entropy(*shape);
        pass = std::fabs(closed.value - h->value) <= kClosedFormTol;
        return shape_name(*shape) + ": " + closed.closed_form.value_or("") +
               " = " + decimal(closed.value);
      });
      run_check(checks, "closed_form_zeta", [&](bool&) {
        // Both closed forms compare themselves with the engine.
        if (shape->kind == ClosedFormShape::Kind::DyckLoops) {
          dyck_gf_and_zeta(shape->loops, order);
        } else {
          fabc_zeta(shape->params, order);
        }
        return shape_name(*shape) + " to order " + std::to_string(order);
      });
    }
  }

  Section s;
  Json list = Json::array();
  Table t{"checks", {"name", "status", "detail"}, {}};
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    list.push_back(
        {{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
    t.rows.push_back({c.name, c.pass ? "pass" : "fail", c.detail});
  }
  s.doc["checks"] = std::move(list);
  s.doc["all_pass"] = all;
  s.tables = {std::move(t)};
  return s;
}

Report finish(const RunConfig& cfg, const std::optional<Graph>& g, Section s) {
  Report r;
  r.doc = header(cfg);
  if (g) r.doc["graph"] = graph_json(*g);
  for (auto& [key, value] : s.doc.items()) r.doc[key] = value;
  r.tables = std::move(s.tables);
  return r;
}

}  // namespace

Graph load_graph(const RunConfig& cfg) {
  if (!cfg.graph_path.empty()) return Graph::from_json_file(cfg.graph_path);
  if (const auto p = cfg.family_params()) return fabc_graph(*p);
  throw UsageError("no graph given");
}

Report cmd_zeta(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  return finish(cfg, g, zeta_section(cfg, g));
}

Report cmd_counts(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  return finish(cfg, g, counts_section(cfg, g));
}

Report cmd_series(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  return finish(cfg, g, series_section(cfg, g));
}

Report cmd_entropy(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  return finish(cfg, g, entropy_section(cfg, g));
}

Report cmd_bounds(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  return finish(cfg, g, bounds_section(cfg, g));
}

Report cmd_family(const RunConfig& cfg) {
  const auto p = cfg.family_params();
  if (!p) throw UsageError("family needs --a, --b and --c");
  return finish(cfg, std::nullopt, family_section(cfg, *p));
}

Report cmd_verify(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  Report r = finish(cfg, g, verify_section(cfg, g));
  if (!r.doc["all_pass"].get<bool>()) r.exit_code = kExitVerifyMismatch;
  return r;
}

Report cmd_report(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  Report r;
  r.doc = header(cfg);
  r.doc["graph"] = graph_json(g);
  const auto add = [&](const std::string& key,
                       const std::function<Section()>& make) {
    try {
      Section s = make();
      // Single-key sections are stored unwrapped.
      r.doc[key] = s.doc.size() == 1 ? s.doc.begin().value() : s.doc;
      for (auto& t : s.tables) r.tables.push_back(std::move(t));
    } catch (const Error& e) {
      r.doc[key] = {{"error", error_json(e)}};
      r.exit_code = std::max(r.exit_code, exit_code_for(e));
    }
  };
  add("zeta", [&] { return zeta_section(cfg, g); });
  add("counts", [&] { return counts_section(cfg, g); });
  add("series", [&] { return series_section(cfg, g); });
  if (g.strongly_connected()) {
    add("entropy", [&] { return entropy_section(cfg, g); });
    add("bounds", [&] { return bounds_section(cfg, g); });
  }
  if (const auto shape = detect_closed_form_shape(g);
      shape && shape->kind == ClosedFormShape::Kind::Fabc) {
    add("family", [&] { return family_section(cfg, shape->params); });
  }
  add("verify", [&] { return verify_section(cfg, g); });
  if (r.doc["verify"].contains("all_pass") &&
      !r.doc["verify"]["all_pass"].get<bool>()) {
    r.exit_code = std::max<int>(r.exit_code, kExitVerifyMismatch);
  }
  return r;
}

Report build_report(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Zeta: return cmd_zeta(cfg);
    case Command::Counts: return cmd_counts(cfg);
    case Command::Series: return cmd_series(cfg);
    case Command::Entropy: return cmd_entropy(cfg);
    case Command::Bounds: return cmd_bounds(cfg);
    case Command::Family: return cmd_family(cfg);
    case Command::Verify: return cmd_verify(cfg);
    case Command::Report: return cmd_report(cfg);
  }
  throw UsageError("unknown command");
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::InvalidGraph:
    case ErrorKind::InvalidVertex:
    case ErrorKind::NotIrreducible:
    case ErrorKind::TooLarge:
      return kExitInvalidGraph;
    case ErrorKind::InternalInconsistency:
      return kExitVerifyMismatch;
    default:
      return kExitNonConvergence;
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto fail = [&](int code, const Json& error) {
    Json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["error"] = error;
    doc["exit_code"] = code;
    err << doc.dump(2) << '\n';
    return code;
  };
  Report r;
  try {
    cfg.validate();
    r = build_report(cfg);
  } catch (const UsageError& e) {
    return fail(kExitUsage, {{"kind", "Usage"}, {"message", e.what()}});
  } catch (const Error& e) {
    return fail(exit_code_for(e), error_json(e));
  }
  const std::string text = render(r, cfg.format);
  if (cfg.out.empty() || cfg.out == "-") {
    out << text;
  } else {
    std::ofstream file(cfg.out);
    if (!file) {
      return fail(kExitUsage, {{"kind", "Usage"}, {"message", "cannot write " + cfg.out}});
    }
    file << text;
  }
  return r.exit_code;
}

}  // namespace dyckzeta::cli
