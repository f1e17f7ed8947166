#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "dyckzeta/series.hpp"

namespace dyckzeta {

/// Polynomial in z with exact integer coefficients, index = power of z.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial one() { return IntPolynomial({1}); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of z^n (zero past the degree).
  BigInt operator[](std::size_t n) const;

  IntPolynomial derivative() const;
  /// Removes the largest factor z^k; returns k.
  std::size_t strip_z_power();

  Rational evaluate(const Rational& x) const;
  /// Horner in extended precision.
  long double evaluate(long double x) const;

  Series to_series(std::size_t order) const;
  std::vector<std::string> coefficient_strings() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial operator-() const;

  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b);

/// Certified isolation of a real root: p has at least one root in (lo, hi]
/// and none in (search_lo, lo].
struct RootBracket {
  Rational lo;
  Rational hi;
  double root = 0.0;  ///< midpoint of the bracket
  bool sign_change = false;  ///< p(lo), p(hi) have opposite signs
};

/// Number of distinct real roots of p in (a, b], by a Sturm sequence of the
/// square-free part of p. Requires a < b.
std::size_t count_distinct_roots(const IntPolynomial& p, const Rational& a,
                                 const Rational& b);

/// Smallest root of p in (lower, upper], bisected on Sturm counts until the
/// bracket is no wider than tol. A root at z = 0 is ignored. Throws NoRoot if
/// the interval has none.
RootBracket first_root_above(const IntPolynomial& p, const Rational& lower,
                             const Rational& upper, double tol);

/// All distinct roots in (lower, upper], increasing. Roots closer than tol
/// may share a bracket.
std::vector<RootBracket> roots_in(const IntPolynomial& p, const Rational& lower,
                                  const Rational& upper, double tol);

/// Smallest root of p in (0, upper], bisected on Sturm counts until the
/// bracket is no wider than tol. Roots at z = 0 are ignored. Throws NoRoot
/// if (0, upper] has none.
RootBracket smallest_positive_root(const IntPolynomial& p,
                                   const Rational& upper, double tol);

}  // namespace dyckzeta
