#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dyckzeta/cli.hpp"
#include "dyckzeta/closed_forms.hpp"
#include "dyckzeta/entropy.hpp"
#include "dyckzeta/semigroup.hpp"
#include "dyckzeta/zeta.hpp"

namespace py = pybind11;
using namespace dyckzeta;

namespace {

// Exact values cross the boundary as strings; the python package turns them
// into int / Fraction.
std::vector<std::string> big_ints(const std::vector<BigInt>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

std::string dump(const cli::Json& j) { return j.dump(); }

EnumerationOptions enum_opts(std::uint64_t budget, unsigned threads) {
  EnumerationOptions o;
  o.budget = budget;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Markov-Dyck shifts: zeta functions, periodic points, entropy";
  m.attr("__version__") = cli::kToolVersion;

  py::register_exception<Error>(m, "DyckZetaError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                       const std::string& name) {
             std::vector<Edge> es;
             for (const auto& [s, d] : edges) es.push_back({s, d});
             return Graph(n, std::move(es), name);
           }),
           py::arg("vertices"), py::arg("edges"), py::arg("name") = "")
      .def_static("from_adjacency", &Graph::from_adjacency, py::arg("adjacency"),
                  py::arg("name") = "")
      .def_static("from_json", [](const std::string& text) {
        return Graph::from_json(nlohmann::json::parse(text));
      })
      .def_static("from_json_file", &Graph::from_json_file)
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("adjacency", &Graph::adjacency)
      .def_property_readonly("name", &Graph::name)
      .def("strongly_connected", &Graph::strongly_connected)
      .def("to_json", [](const Graph& g) { return g.to_json().dump(); })
      .def("__repr__", [](const Graph& g) {
        std::ostringstream os;
        os << "Graph(vertices=" << g.vertex_count() << ", edges=" << g.edge_count()
           << ")";
        return os.str();
      });

  m.def("one_vertex_graph", &one_vertex_graph, py::arg("loops"));
  m.def("fabc_graph", [](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return fabc_graph({a, b, c});
  });
  m.def("perron_rho", [](const Graph& g) { return perron_rho(g); });
  m.def("char_poly", [](const Graph& g) { return big_ints(char_poly(g).coeffs()); });

  m.def("markov_dyck_zeta", [](const Graph& g, std::size_t order) {
    return markov_dyck_zeta(g, order).coefficient_strings();
  }, py::arg("graph"), py::arg("order") = kDefaultOrder);
  m.def("periodic_counts", [](const Graph& g, std::size_t order) {
    return big_ints(periodic_counts_from_zeta(markov_dyck_zeta(g, order)));
  }, py::arg("graph"), py::arg("order") = kDefaultOrder);
  m.def("code_series", [](const Graph& g, std::size_t order) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : solve_code_system(g, order).g) {
      out.push_back(s.coefficient_strings());
    }
    return out;
  }, py::arg("graph"), py::arg("order") = kDefaultOrder);

  m.def("count_words", [](const Graph& g, std::size_t n, std::uint64_t budget,
                          unsigned threads) {
    return count_words(g, n, enum_opts(budget, threads));
  }, py::arg("graph"), py::arg("n"), py::arg("budget") = 500'000'000,
        py::arg("threads") = 1);
  m.def("count_periodic", [](const Graph& g, std::size_t n, std::uint64_t budget,
                             unsigned threads) {
    return count_periodic(g, n, enum_opts(budget, threads));
  }, py::arg("graph"), py::arg("n"), py::arg("budget") = 500'000'000,
        py::arg("threads") = 1);
  m.def("count_code_words", [](const Graph& g, Vertex v, std::size_t n,
                               bool elementary) {
    return count_code_words(g, v, n,
                            elementary ? CodeKind::ElementaryDv : CodeKind::MDCode);
  }, py::arg("graph"), py::arg("vertex"), py::arg("n"),
        py::arg("elementary") = false);
  m.def("reduce_word", [](const Graph& g, const std::string& word) {
    return reduce_word(g, parse_word(word)).to_string();
  });
  m.def("periodic_orbit_check", [](const Graph& g, const std::string& word) {
    return periodic_orbit_check(g, parse_word(word));
  });

  m.def("entropy", [](const Graph& g, double tol) {
    EntropyOptions o;
    o.tol = tol;
    return dump(cli::entropy_json(entropy_markov_dyck(g, o)));
  }, py::arg("graph"), py::arg("tol") = 1e-10);
  m.def("xv_entropy", [](const Graph& g, Vertex v, double tol) {
    return dump(cli::entropy_json(xv_entropy(g, v, tol)));
  }, py::arg("graph"), py::arg("vertex"), py::arg("tol") = 1e-10);
  m.def("entropy_bounds", [](const Graph& g) {
    return dump(cli::bounds_json(entropy_bounds(g)));
  });

  m.def("fabc_entropy_poly", [](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return big_ints(fabc_entropy_poly({a, b, c}).coeffs());
  });
  m.def("fabc_entropy", [](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return dump(cli::entropy_json(fabc_entropy({a, b, c})));
  });
  m.def("fabc_entropy_branch_root",
        [](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
          return dump(cli::entropy_json(fabc_entropy_branch_root({a, b, c})));
        });
  m.def("fabc_code_gf", [](std::uint64_t a, std::uint64_t b, std::uint64_t c,
                           double x) { return fabc_code_gf({a, b, c}, x); });
  m.def("fib_xi", &fib_xi);
  m.def("fib_zeta", [](std::size_t order) {
    return fib_zeta(order).coefficient_strings();
  });

  m.def("run_command", [](const std::string& command, const std::string& graph,
                          std::optional<std::uint64_t> a, std::optional<std::uint64_t> b,
                          std::optional<std::uint64_t> c, std::size_t order,
                          std::size_t max_n, double tol) {
    cli::RunConfig cfg;
    const auto cmd = cli::parse_command(command);
    if (!cmd) throw py::value_error("unknown command " + command);
    cfg.command = *cmd;
    cfg.graph_path = graph;
    cfg.a = a;
    cfg.b = b;
    cfg.c = c;
    cfg.order = order;
    cfg.max_n = max_n;
    cfg.tol = tol;
    std::ostringstream out, err;
    const int code = cli::run(cfg, out, err);
    return py::make_tuple(code, out.str().empty() ? err.str() : out.str());
  }, py::arg("command"), py::arg("graph") = "", py::arg("a") = py::none(),
        py::arg("b") = py::none(), py::arg("c") = py::none(), py::arg("order") = 32,
        py::arg("max_n") = 8, py::arg("tol") = 1e-10);
}
