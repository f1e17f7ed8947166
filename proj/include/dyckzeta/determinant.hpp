#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "dyckzeta/errors.hpp"

namespace dyckzeta {

inline constexpr std::size_t kMaxDeterminantDim = 12;

/// Determinant by cofactor (Laplace) expansion along rows, memoised over the
/// set of columns already consumed. Works over any commutative ring T;
/// `one` is the ring identity (it fixes e.g. the truncation order of series).
template <class T, class IsZero>
T laplace_determinant(const std::vector<std::vector<T>>& m, const T& one,
                      IsZero is_zero) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) {
      throw Error(ErrorKind::InvalidMatrix, "determinant of non-square matrix");
    }
  }
  if (n > kMaxDeterminantDim) {
    throw Error(ErrorKind::TooLarge,
                "cofactor determinant limited to dimension " +
                    std::to_string(kMaxDeterminantDim));
  }
  if (n == 0) return one;

  // minor[mask]: determinant of rows popcount(mask)..n-1 over the columns
  // not in mask, columns kept in increasing order.
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<T> minor(std::size_t{full} + 1, one);
  std::vector<bool> known(std::size_t{full} + 1, false);
  known[full] = true;

  std::function<const T&(std::uint32_t)> solve =
      [&](std::uint32_t mask) -> const T& {
    if (known[mask]) return minor[mask];
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    T acc = one - one;
    std::size_t position = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::uint32_t{1} << col)) continue;
      if (!is_zero(m[row][col])) {
        const T& sub = solve(mask | (std::uint32_t{1} << col));
        if (position % 2 == 0) {
          acc += m[row][col] * sub;
        } else {
          acc -= m[row][col] * sub;
        }
      }
      ++position;
    }
    minor[mask] = std::move(acc);
    known[mask] = true;
    return minor[mask];
  };
  return solve(0);
}

}  // namespace dyckzeta
