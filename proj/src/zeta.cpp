#include "dyckzeta/zeta.hpp"

#include "dyckzeta/determinant.hpp"
#include "dyckzeta/errors.hpp"

namespace dyckzeta {

SeriesMatrix::SeriesMatrix(std::size_t dim, std::size_t order)
    : entries_(dim, std::vector<Series>(dim, Series(order))), order_(order) {}

SeriesMatrix::SeriesMatrix(std::vector<std::vector<Series>> entries)
    : entries_(std::move(entries)), order_(0) {
  const std::size_t n = entries_.size();
  if (n == 0) return;
  order_ = entries_[0].empty() ? 0 : entries_[0][0].order();
  for (const auto& row : entries_) {
    if (row.size() != n) {
      throw Error(ErrorKind::InvalidMatrix, "series matrix is not square");
    }
    for (const auto& s : row) {
      if (s.order() != order_) {
        throw Error(ErrorKind::InvalidMatrix,
                    "series matrix entries differ in truncation order");
      }
    }
  }
}

SeriesMatrix SeriesMatrix::identity(std::size_t dim, std::size_t order) {
  SeriesMatrix m(dim, order);
  for (std::size_t i = 0; i < dim; ++i) m(i, i)[0] = 1;
  return m;
}

SeriesMatrix SeriesMatrix::scaled_z(const AdjacencyMatrix& a,
                                    std::size_t order) {
  SeriesMatrix m(a.size(), order);
  if (order == 0) return m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      m(i, j)[1] = Rational(static_cast<unsigned long>(a[i][j]));
    }
  }
  return m;
}

SeriesMatrix SeriesMatrix::diagonal(const std::vector<Series>& entries) {
  const std::size_t order = entries.empty() ? 0 : entries[0].order();
  SeriesMatrix m(entries.size(), order);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Series SeriesMatrix::determinant() const {
  return laplace_determinant(entries_, Series::constant(1, order_),
                             [](const Series& s) { return s.is_zero(); });
}

SeriesMatrix SeriesMatrix::inverse() const {
  const std::size_t n = dim();
  SeriesMatrix a = *this;
  SeriesMatrix inv = identity(n, order_);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)[0]) == 0) ++pivot;
    if (pivot == n) {
      throw Error(ErrorKind::NotInvertible,
                  "constant term of the series matrix is singular");
    }
    std::swap(a.entries_[col], a.entries_[pivot]);
    std::swap(inv.entries_[col], inv.entries_[pivot]);
    const Series p = dyckzeta::inverse(a(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) * p;
      inv(col, j) = inv(col, j) * p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Series factor = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(col, j);
        inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

SeriesMatrix SeriesMatrix::transposed() const {
  SeriesMatrix t(dim(), order_);
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

namespace {

void check_same_shape(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::InvalidMatrix, "series matrix dimension mismatch");
  }
}

}  // namespace

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
  check_same_shape(a, b);
  SeriesMatrix out(a.dim(), std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
  check_same_shape(a, b);
  SeriesMatrix out(a.dim(), std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
  }
  return out;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  check_same_shape(a, b);
  const std::size_t order = std::min(a.order(), b.order());
  SeriesMatrix out(a.dim(), order);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.dim(); ++j) {
        if (b(k, j).is_zero()) continue;
        out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

void require_nonnegative_integral(const Series& s, const char* what) {
  if (!s.is_nonnegative_integral()) {
    throw Error(ErrorKind::InternalInconsistency,
                std::string(what) + " has a coefficient that is not a "
                                    "nonnegative integer");
  }
}

CodeSystemSolution solve_code_system(const Graph& g, std::size_t order) {
  if (order < 2) {
    throw Error(ErrorKind::DomainError, "code system needs order >= 2");
  }
  const std::size_t n = g.vertex_count();
  const auto& adj = g.adjacency();
  const std::size_t max_rounds = (order + 1) / 2 + 2;

  CodeSystemSolution sol;
  sol.g.assign(n, Series(order));
  const Series one = Series::constant(1, order);
  for (std::size_t round = 1;; ++round) {
    std::vector<Series> gstar;
    gstar.reserve(n);
    for (const auto& gv : sol.g) gstar.push_back(inverse(one - gv));

    std::vector<Series> next(n, Series(order));
    for (Vertex u = 0; u < n; ++u) {
      Series acc(order);
      for (Vertex v = 0; v < n; ++v) {
        if (adj[u][v] != 0) {
          acc += gstar[v] * Rational(static_cast<unsigned long>(adj[u][v]));
        }
      }
      next[u] = acc.shifted_up(2);
    }
    const bool stable = next == sol.g;
    sol.g = std::move(next);
    if (stable) {
      sol.rounds = round;
      sol.gstar = std::move(gstar);
      break;
    }
    if (round > max_rounds) {
      throw Error(ErrorKind::InternalInconsistency,
                  "code system did not stabilise within " +
                      std::to_string(max_rounds) + " rounds");
    }
  }
  for (const auto& gv : sol.g) require_nonnegative_integral(gv, "code series");
  return sol;
}

Series keller_zeta(const SeriesMatrix& h) {
  const Series det = (SeriesMatrix::identity(h.dim(), h.order()) - h).determinant();
  if (det[0] != 1) {
    throw Error(ErrorKind::InvalidMatrix,
                "det(I - H) must have constant term 1");
  }
  return inverse(det);
}

Series circular_code_zeta(const Series& code_gf) {
  if (sgn(code_gf[0]) != 0) {
    throw Error(ErrorKind::DomainError,
                "circular code series must vanish at z = 0");
  }
  return inverse(Series::constant(1, code_gf.order()) - code_gf);
}

MarkovDyckZeta markov_dyck_zeta_details(const Graph& g, std::size_t order) {
  CodeSystemSolution codes = solve_code_system(g, order);
  const std::size_t n = g.vertex_count();
  const SeriesMatrix id = SeriesMatrix::identity(n, order);
  const SeriesMatrix az = SeriesMatrix::scaled_z(g.adjacency(), order);
  const SeriesMatrix d = SeriesMatrix::diagonal(codes.g);
  const SeriesMatrix dstar = SeriesMatrix::diagonal(codes.gstar);

  const Series det_rest = (id - dstar * az).determinant();
  const Series det_dstar = dstar.determinant();
  const Series quotient_form = det_dstar / (det_rest * det_rest);
  const Series product_form =
      inverse(((id - d - az) * (id - dstar * az)).determinant());
  if (!(quotient_form == product_form)) {
    throw Error(ErrorKind::InternalInconsistency,
                "the two determinant forms of the zeta function disagree");
  }
  SeriesMatrix h_plus = d * (id - az).inverse();
  return MarkovDyckZeta{quotient_form, std::move(codes), d, dstar,
                        std::move(h_plus)};
}

Series markov_dyck_zeta(const Graph& g, std::size_t order) {
  return markov_dyck_zeta_details(g, order).zeta;
}

std::vector<BigInt> periodic_counts_from_zeta(const Series& zeta) {
  if (zeta[0] != 1) {
    throw Error(ErrorKind::DomainError, "zeta function must start with 1");
  }
  const Series l = log(zeta);
  std::vector<BigInt> out;
  for (std::size_t n = 1; n <= l.order(); ++n) {
    const Rational pi = l[n] * static_cast<unsigned long>(n);
    if (pi.get_den() != 1 || sgn(pi) < 0) {
      throw Error(ErrorKind::InternalInconsistency,
                  "Pi_" + std::to_string(n) + " = " + rational_string(pi) +
                      " is not a nonnegative integer");
    }
    out.push_back(pi.get_num());
  }
  return out;
}

}  // namespace dyckzeta
