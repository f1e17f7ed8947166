#pragma once

#include <cstddef>
#include <vector>

#include "dyckzeta/graph.hpp"
#include "dyckzeta/series.hpp"

namespace dyckzeta {

inline constexpr std::size_t kDefaultOrder = 32;

/// Square matrix of series sharing one truncation order.
class SeriesMatrix {
 public:
  SeriesMatrix(std::size_t dim, std::size_t order);
  explicit SeriesMatrix(std::vector<std::vector<Series>> entries);

  static SeriesMatrix identity(std::size_t dim, std::size_t order);
  /// A z for an integer matrix A.
  static SeriesMatrix scaled_z(const AdjacencyMatrix& a, std::size_t order);
  static SeriesMatrix diagonal(const std::vector<Series>& entries);

  std::size_t dim() const noexcept { return entries_.size(); }
  std::size_t order() const noexcept { return order_; }
  const Series& operator()(std::size_t i, std::size_t j) const {
    return entries_[i][j];
  }
  Series& operator()(std::size_t i, std::size_t j) { return entries_[i][j]; }

  Series determinant() const;
  /// Gauss-Jordan over series; needs an invertible constant-term matrix.
  SeriesMatrix inverse() const;
  SeriesMatrix transposed() const;

  friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<std::vector<Series>> entries_;
  std::size_t order_;
};

/// Generating functions of the Markov-Dyck codes C_v (words with product P_v
/// and no proper prefix with that product), one per vertex.
struct CodeSystemSolution {
  std::vector<Series> g;      ///< g_v
  std::vector<Series> gstar;  ///< 1 / (1 - g_v)
  std::size_t rounds = 0;     ///< fixed-point rounds until stable
};

/// Solves g_u = z^2 sum_v A(u,v) / (1 - g_v) by iteration from g = 0. Each
/// round fixes two more coefficients, so at most ceil(N/2) + 1 rounds are
/// needed before the iterate is stable.
CodeSystemSolution solve_code_system(const Graph& g,
                                     std::size_t order = kDefaultOrder);

/// Zeta function of a circular Markov code with matrix H: det(I - H)^-1.
Series keller_zeta(const SeriesMatrix& h);
/// Zeta function of a circular code: 1 / (1 - g_C).
Series circular_code_zeta(const Series& code_gf);

struct MarkovDyckZeta {
  Series zeta;
  CodeSystemSolution codes;
  SeriesMatrix d;       ///< diag(g_v)
  SeriesMatrix dstar;   ///< diag(1 / (1 - g_v))
  SeriesMatrix h_plus;  ///< D (I - A z)^-1, the matrix of the code C^+
};

/// Zeta function of the Markov-Dyck shift of g, computed both as
/// det(D*) / det(I - D* A z)^2 and as 1 / det((I - D - A z)(I - D* A z));
/// throws InternalInconsistency if the two disagree.
MarkovDyckZeta markov_dyck_zeta_details(const Graph& g,
                                        std::size_t order = kDefaultOrder);
Series markov_dyck_zeta(const Graph& g, std::size_t order = kDefaultOrder);

/// Pi_n = n [z^n] log zeta for n = 1..order; element n-1 holds Pi_n.
std::vector<BigInt> periodic_counts_from_zeta(const Series& zeta);

/// Throws InternalInconsistency unless every coefficient is a nonnegative
/// integer.
void require_nonnegative_integral(const Series& s, const char* what);

}  // namespace dyckzeta
