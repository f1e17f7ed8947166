#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "dyckzeta/int_polynomial.hpp"
#include "dyckzeta/series.hpp"

namespace dyckzeta {

using Vertex = std::size_t;
using EdgeId = std::size_t;
using AdjacencyMatrix = std::vector<std::vector<std::uint64_t>>;

struct Edge {
  Vertex src;
  Vertex dst;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite directed multigraph. Edges are identified by their index in the
/// edge list; the adjacency matrix counts parallel edges.
class Graph {
 public:
  Graph(std::size_t vertex_count, std::vector<Edge> edges,
        std::string name = {});

  /// Expands row-major, parallel edges consecutive.
  static Graph from_adjacency(const AdjacencyMatrix& adjacency,
                              std::string name = {});
  /// Either {"vertices": n, "edges": [[s,d],...]} or {"adjacency": [[...]]},
  /// with an optional "name".
  static Graph from_json(const nlohmann::json& doc);
  static Graph from_json_file(const std::string& path);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  Vertex source(EdgeId e) const { return edges_.at(e).src; }
  Vertex range(EdgeId e) const { return edges_.at(e).dst; }
  const AdjacencyMatrix& adjacency() const noexcept { return adjacency_; }
  const std::vector<EdgeId>& out_edges(Vertex v) const { return out_.at(v); }
  const std::vector<EdgeId>& in_edges(Vertex v) const { return in_.at(v); }
  const std::string& name() const noexcept { return name_; }

  bool strongly_connected() const;
  void check_vertex(Vertex v) const;

  nlohmann::json to_json() const;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  AdjacencyMatrix adjacency_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::string name_;
};

Graph build_graph(const nlohmann::json& doc);

/// One vertex with `loops` loops (the Dyck shift graph).
Graph one_vertex_graph(std::uint64_t loops);

/// A path in G: a start vertex plus edge ids, consecutive edges composable.
struct Path {
  Vertex base = 0;
  std::vector<EdgeId> edges;

  bool empty() const noexcept { return edges.empty(); }
  std::size_t size() const noexcept { return edges.size(); }
  Vertex end(const Graph& g) const {
    return edges.empty() ? base : g.range(edges.back());
  }
  bool valid_in(const Graph& g) const;
  friend bool operator==(const Path&, const Path&) = default;
};

/// det(I - A z).
IntPolynomial char_poly(const Graph& g);
/// det(I - A z) with row and column v deleted; 1 for a one-vertex graph.
IntPolynomial char_poly_minor(const Graph& g, Vertex v);

/// 1 / (Perron eigenvalue), isolated as the smallest positive root of
/// char_poly. The returned bracket certifies the root.
struct PerronRoot {
  double rho = 0.0;
  RootBracket bracket;
};
PerronRoot perron_root(const Graph& g, double tol = 1e-12);
double perron_rho(const Graph& g, double tol = 1e-12);

/// Cycles at v that meet v only at their endpoints, counted by length with
/// edge multiplicity, by direct path enumeration.
Series first_return_series(const Graph& g, Vertex v, std::size_t order);

}  // namespace dyckzeta
