#include "dyckzeta/graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>

#include "dyckzeta/determinant.hpp"
#include "dyckzeta/errors.hpp"

namespace dyckzeta {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges,
             std::string name)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      adjacency_(vertex_count, std::vector<std::uint64_t>(vertex_count, 0)),
      out_(vertex_count),
      in_(vertex_count),
      name_(std::move(name)) {
  if (vertex_count_ == 0) {
    throw Error(ErrorKind::InvalidGraph, "graph needs at least one vertex");
  }
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto [s, d] = edges_[e];
    if (s >= vertex_count_ || d >= vertex_count_) {
      throw Error(ErrorKind::InvalidGraph,
                  "edge " + std::to_string(e) + " has an endpoint outside [0, " +
                      std::to_string(vertex_count_) + ")");
    }
    ++adjacency_[s][d];
    out_[s].push_back(e);
    in_[d].push_back(e);
  }
}

Graph Graph::from_adjacency(const AdjacencyMatrix& adjacency,
                            std::string name) {
  const std::size_t n = adjacency.size();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    if (adjacency[u].size() != n) {
      throw Error(ErrorKind::InvalidGraph, "adjacency matrix is not square");
    }
    for (Vertex v = 0; v < n; ++v) {
      for (std::uint64_t k = 0; k < adjacency[u][v]; ++k) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges), std::move(name));
}

Graph Graph::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorKind::InvalidGraph, "graph description must be an object");
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      throw Error(ErrorKind::InvalidGraph, "\"name\" must be a string");
    }
    name = doc["name"].get<std::string>();
  }
  const bool has_edges = doc.contains("edges");
  const bool has_adjacency = doc.contains("adjacency");
  if (has_edges == has_adjacency) {
    throw Error(ErrorKind::InvalidGraph,
                "exactly one of \"edges\" and \"adjacency\" is required");
  }
  try {
    if (has_adjacency) {
      const auto& rows = doc["adjacency"];
      if (!rows.is_array()) {
        throw Error(ErrorKind::InvalidGraph, "\"adjacency\" must be an array");
      }
      AdjacencyMatrix adjacency;
      for (const auto& row : rows) {
        std::vector<std::uint64_t> r;
        for (const auto& x : row) {
          if (!x.is_number_integer() || x.get<long long>() < 0) {
            throw Error(ErrorKind::InvalidGraph,
                        "adjacency entries must be nonnegative integers");
          }
          r.push_back(x.get<std::uint64_t>());
        }
        adjacency.push_back(std::move(r));
      }
      return from_adjacency(adjacency, std::move(name));
    }
    if (!doc.contains("vertices") || !doc["vertices"].is_number_integer() ||
        doc["vertices"].get<long long>() < 0) {
      throw Error(ErrorKind::InvalidGraph,
                  "\"vertices\" must be a nonnegative integer");
    }
    std::vector<Edge> edges;
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer() || e[0].get<long long>() < 0 ||
          e[1].get<long long>() < 0) {
        throw Error(ErrorKind::InvalidGraph,
                    "edges must be pairs of nonnegative integers");
      }
      edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    }
    return Graph(doc["vertices"].get<std::size_t>(), std::move(edges),
                 std::move(name));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::InvalidGraph, ex.what());
  }
}

Graph Graph::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidGraph, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::InvalidGraph, path + ": " + ex.what());
  }
  return from_json(doc);
}

Graph build_graph(const nlohmann::json& doc) { return Graph::from_json(doc); }

Graph one_vertex_graph(std::uint64_t loops) {
  return Graph::from_adjacency({{loops}},
                               "one vertex, " + std::to_string(loops) + " loops");
}

void Graph::check_vertex(Vertex v) const {
  if (v >= vertex_count_) {
    throw Error(ErrorKind::InvalidVertex,
                "vertex " + std::to_string(v) + " out of range");
  }
}

bool Graph::strongly_connected() const {
  const auto reaches_all = [this](bool forward) {
    std::vector<bool> seen(vertex_count_, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (EdgeId e : forward ? out_[u] : in_[u]) {
        const Vertex w = forward ? edges_[e].dst : edges_[e].src;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reaches_all(true) && reaches_all(false);
}

nlohmann::json Graph::to_json() const {
  nlohmann::json doc;
  if (!name_.empty()) doc["name"] = name_;
  doc["vertices"] = vertex_count_;
  auto edges = nlohmann::json::array();
  for (const auto& e : edges_) edges.push_back({e.src, e.dst});
  doc["edges"] = edges;
  return doc;
}

bool Path::valid_in(const Graph& g) const {
  if (base >= g.vertex_count()) return false;
  Vertex at = base;
  for (EdgeId e : edges) {
    if (e >= g.edge_count() || g.source(e) != at) return false;
    at = g.range(e);
  }
  return true;
}

namespace {

IntPolynomial det_of_identity_minus_az(const Graph& g,
                                       const std::vector<Vertex>& keep) {
  const std::size_t n = keep.size();
  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = g.adjacency()[keep[i]][keep[j]];
      std::vector<BigInt> c(2);
      c[0] = (i == j) ? 1 : 0;
      c[1] = -BigInt(static_cast<unsigned long>(a));
      m[i][j] = IntPolynomial(std::move(c));
    }
  }
  return laplace_determinant(m, IntPolynomial::one(),
                             [](const IntPolynomial& p) { return p.is_zero(); });
}

}  // namespace

IntPolynomial char_poly(const Graph& g) {
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return det_of_identity_minus_az(g, all);
}

IntPolynomial char_poly_minor(const Graph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return det_of_identity_minus_az(g, keep);
}

PerronRoot perron_root(const Graph& g, double tol) {
  if (!g.strongly_connected()) {
    throw Error(ErrorKind::NotIrreducible, "graph is not strongly connected");
  }
  const IntPolynomial p = char_poly(g);
  if (p.degree() < 1) {
    throw Error(ErrorKind::NoPerronRoot, "adjacency matrix is nilpotent");
  }
  // A strongly connected graph with an edge has Perron eigenvalue >= 1.
  PerronRoot out;
  out.bracket = smallest_positive_root(p, Rational(1), tol);
  out.rho = out.bracket.root;
  if (!out.bracket.sign_change) {
    throw Error(ErrorKind::InternalInconsistency,
                "Perron root is not a simple root of det(I - Az)");
  }
  return out;
}

double perron_rho(const Graph& g, double tol) { return perron_root(g, tol).rho; }

Series first_return_series(const Graph& g, Vertex v, std::size_t order) {
  g.check_vertex(v);
  const std::size_t n = g.vertex_count();
  constexpr auto kFar = std::numeric_limits<std::size_t>::max();

  // Shortest distance from each vertex to v, for pruning.
  std::vector<std::size_t> dist(n, kFar);
  dist[v] = 0;
  std::queue<Vertex> queue;
  queue.push(v);
  while (!queue.empty()) {
    const Vertex w = queue.front();
    queue.pop();
    for (EdgeId e : g.in_edges(w)) {
      const Vertex u = g.source(e);
      if (dist[u] == kFar) {
        dist[u] = dist[w] + 1;
        queue.push(u);
      }
    }
  }

  std::vector<BigInt> counts(order + 1);
  const auto& adj = g.adjacency();
  // Walks over vertex sequences; a step u -> w carries multiplicity A[u][w].
  const auto walk = [&](auto&& self, Vertex at, std::size_t length,
                        const BigInt& weight) -> void {
    for (Vertex w = 0; w < n; ++w) {
      if (adj[at][w] == 0) continue;
      const std::size_t next = length + 1;
      if (dist[w] == kFar || next + dist[w] > order) continue;
      const BigInt wt = weight * static_cast<unsigned long>(adj[at][w]);
      if (w == v) {
        counts[next] += wt;
      } else {
        self(self, w, next, wt);
      }
    }
  };
  walk(walk, v, 0, BigInt(1));

  Series out(order);
  for (std::size_t k = 0; k <= order; ++k) out[k] = Rational(counts[k]);
  return out;
}

}  // namespace dyckzeta
