#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dyckzeta {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Truncated formal power series with exact rational coefficients.
///
/// A series of order N carries the coefficients of z^0 .. z^N. Binary
/// operations work at the smaller of the two orders, so a result never claims
/// more precision than its least precise operand.
class Series {
 public:
  explicit Series(std::size_t order = 0);
  explicit Series(std::vector<Rational> coeffs);

  static Series constant(const Rational& c, std::size_t order);
  /// c * z^power, truncated at `order`.
  static Series monomial(const Rational& c, std::size_t power,
                         std::size_t order);
  static Series from_integers(const std::vector<long long>& coeffs,
                              std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
  Rational& operator[](std::size_t n) { return coeffs_[n]; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient, or nullopt for the zero series.
  std::optional<std::size_t> valuation() const;
  bool is_zero() const;

  Series truncated(std::size_t order) const;
  /// Divides by z^k. The k lowest coefficients must vanish; order drops by k.
  Series shifted_down(std::size_t k) const;
  /// Multiplies by z^k at the same order.
  Series shifted_up(std::size_t k) const;

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Series& rhs);
  Series& operator*=(const Rational& c);
  Series operator-() const;

  /// True when every coefficient is an integer.
  bool is_integral() const;
  bool is_nonnegative_integral() const;

  long double evaluate(long double x) const;

  /// "p/q" strings, one per coefficient.
  std::vector<std::string> coefficient_strings() const;

  friend bool operator==(const Series& a, const Series& b);

 private:
  std::vector<Rational> coeffs_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(Series a, const Rational& c);
Series operator*(const Rational& c, Series a);
Series operator/(const Series& a, const Series& b);

/// 1/a. Throws NotInvertible when a(0) == 0.
Series inverse(const Series& a);
/// Requires a(0) == 1.
Series log(const Series& a);
/// Requires a(0) == 0.
Series exp(const Series& a);
/// Square root with constant term 1. Requires a(0) == 1.
Series sqrt(const Series& a);
/// sum a_n z^n  ->  sum a_n z^{2n}, same order.
Series compose_z_squared(const Series& a);
/// a / b where b may have positive valuation k; the quotient is computed as
/// (a / z^k) / (b / z^k) and has order min(a, b) - k.
Series divide_with_valuation(const Series& a, const Series& b);

enum class SeriesOp { Add, Mul, Div, Log, Sqrt, ComposeZSquared };

Series series_arith(SeriesOp op, const Series& a,
                    const std::optional<Series>& b = std::nullopt);

/// Canonical "p/q" form (always with a denominator).
std::string rational_string(const Rational& r);

}  // namespace dyckzeta
