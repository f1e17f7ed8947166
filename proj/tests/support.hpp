#pragma once

#include <random>
#include <string>
#include <vector>

#include "dyckzeta/closed_forms.hpp"
#include "dyckzeta/graph.hpp"
#include "dyckzeta/series.hpp"

namespace dyckzeta::testing {

inline Graph fib_graph() { return fabc_graph({1, 1, 1}); }

/// F; one vertex with 1..4 loops; F(1,2,3); F(1,1,2); F(2,1,3).
inline std::vector<Graph> test_graphs() {
  std::vector<Graph> out;
  out.push_back(fib_graph());
  for (std::uint64_t n = 1; n <= 4; ++n) out.push_back(one_vertex_graph(n));
  out.push_back(fabc_graph({1, 2, 3}));
  out.push_back(fabc_graph({1, 1, 2}));
  out.push_back(fabc_graph({2, 1, 3}));
  return out;
}

inline Series ints(const std::vector<long long>& coeffs) {
  return Series::from_integers(coeffs, coeffs.size() - 1);
}

/// Random strongly connected graph: a Hamiltonian cycle plus random extra
/// multiplicities in 0..max_extra.
inline Graph random_strongly_connected(std::mt19937_64& rng, std::size_t vertices,
                                       std::uint64_t max_extra) {
  AdjacencyMatrix a(vertices, std::vector<std::uint64_t>(vertices, 0));
  std::uniform_int_distribution<std::uint64_t> extra(0, max_extra);
  for (std::size_t u = 0; u < vertices; ++u) {
    a[u][(u + 1) % vertices] = 1;
    for (std::size_t v = 0; v < vertices; ++v) a[u][v] += extra(rng);
  }
  return Graph::from_adjacency(a);
}

}  // namespace dyckzeta::testing
