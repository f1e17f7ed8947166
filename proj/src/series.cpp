#include "dyckzeta/series.hpp"

#include <algorithm>
#include <cmath>

#include "dyckzeta/errors.hpp"

namespace dyckzeta {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
  for (auto& c : coeffs_) c.canonicalize();
}

Series Series::constant(const Rational& c, std::size_t order) {
  Series s(order);
  s[0] = c;
  return s;
}

Series Series::monomial(const Rational& c, std::size_t power,
                        std::size_t order) {
  Series s(order);
  if (power <= order) s[power] = c;
  return s;
}

Series Series::from_integers(const std::vector<long long>& coeffs,
                             std::size_t order) {
  Series s(order);
  for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) {
    s[i] = Rational(static_cast<long>(coeffs[i]));
  }
  return s;
}

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return i;
  }
  return std::nullopt;
}

bool Series::is_zero() const { return !valuation().has_value(); }

Series Series::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw Error(ErrorKind::DomainError,
                "cannot raise the truncation order of a series");
  }
  return Series(std::vector<Rational>(coeffs_.begin(),
                                      coeffs_.begin() + order + 1));
}

Series Series::shifted_down(std::size_t k) const {
  if (k > order()) {
    throw Error(ErrorKind::DomainError, "shift exceeds truncation order");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(coeffs_[i]) != 0) {
      throw Error(ErrorKind::DomainError,
                  "series is not divisible by z^" + std::to_string(k));
    }
  }
  return Series(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

Series Series::shifted_up(std::size_t k) const {
  Series out(order());
  for (std::size_t i = 0; i + k <= order(); ++i) out[i + k] = coeffs_[i];
  return out;
}

Series& Series::operator+=(const Series& rhs) {
  const std::size_t n = std::min(order(), rhs.order());
  coeffs_.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  const std::size_t n = std::min(order(), rhs.order());
  coeffs_.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const Series& rhs) {
  *this = *this * rhs;
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series Series::operator-() const {
  Series out(*this);
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

bool Series::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) {
    return c.get_den() == 1;
  });
}

bool Series::is_nonnegative_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) {
    return c.get_den() == 1 && sgn(c) >= 0;
  });
}

long double Series::evaluate(long double x) const {
  long double acc = 0.0L;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + static_cast<long double>(coeffs_[i].get_d());
  }
  return acc;
}

std::vector<std::string> Series::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(rational_string(c));
  return out;
}

bool operator==(const Series& a, const Series& b) {
  return a.coeffs_ == b.coeffs_;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }

Series operator*(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (sgn(b[j]) == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Series operator*(Series a, const Rational& c) { return a *= c; }
Series operator*(const Rational& c, Series a) { return a *= c; }

Series inverse(const Series& a) {
  if (sgn(a[0]) == 0) {
    throw Error(ErrorKind::NotInvertible,
                "series with zero constant term has no inverse");
  }
  const std::size_t n = a.order();
  Series out(n);
  const Rational inv0 = 1 / a[0];
  out[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (sgn(a[j]) != 0) acc += a[j] * out[k - j];
    }
    out[k] = -acc * inv0;
  }
  return out;
}

Series operator/(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  return a.truncated(n) * inverse(b.truncated(n));
}

Series log(const Series& a) {
  if (a[0] != 1) {
    throw Error(ErrorKind::DomainError, "log requires constant term 1");
  }
  // n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}
  const std::size_t n = a.order();
  Series out(n);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = a[m] * static_cast<unsigned long>(m);
    for (std::size_t k = 1; k < m; ++k) {
      if (sgn(a[m - k]) != 0) acc -= out[k] * a[m - k] * static_cast<unsigned long>(k);
    }
    out[m] = acc / static_cast<unsigned long>(m);
  }
  return out;
}

Series exp(const Series& a) {
  if (sgn(a[0]) != 0) {
    throw Error(ErrorKind::DomainError, "exp requires constant term 0");
  }
  const std::size_t n = a.order();
  Series out(n);
  out[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc;
    for (std::size_t k = 1; k <= m; ++k) {
      if (sgn(a[k]) != 0) acc += a[k] * out[m - k] * static_cast<unsigned long>(k);
    }
    out[m] = acc / static_cast<unsigned long>(m);
  }
  return out;
}

Series sqrt(const Series& a) {
  if (a[0] != 1) {
    throw Error(ErrorKind::DomainError, "sqrt requires constant term 1");
  }
  const std::size_t n = a.order();
  Series out(n);
  out[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = a[m];
    for (std::size_t k = 1; k < m; ++k) acc -= out[k] * out[m - k];
    out[m] = acc / 2;
  }
  return out;
}

Series compose_z_squared(const Series& a) {
  Series out(a.order());
  for (std::size_t i = 0; 2 * i <= a.order(); ++i) out[2 * i] = a[i];
  return out;
}

Series divide_with_valuation(const Series& a, const Series& b) {
  const auto vb = b.valuation();
  if (!vb) {
    throw Error(ErrorKind::NotInvertible, "division by the zero series");
  }
  const std::size_t n = std::min(a.order(), b.order());
  if (*vb > n) {
    throw Error(ErrorKind::NotInvertible, "divisor valuation exceeds order");
  }
  return a.truncated(n).shifted_down(*vb) / b.truncated(n).shifted_down(*vb);
}

Series series_arith(SeriesOp op, const Series& a,
                    const std::optional<Series>& b) {
  const auto need_b = [&]() -> const Series& {
    if (!b) throw Error(ErrorKind::DomainError, "binary op needs two operands");
    return *b;
  };
  switch (op) {
    case SeriesOp::Add: return a + need_b();
    case SeriesOp::Mul: return a * need_b();
    case SeriesOp::Div: return a / need_b();
    case SeriesOp::Log: return log(a);
    case SeriesOp::Sqrt: return sqrt(a);
    case SeriesOp::ComposeZSquared: return compose_z_squared(a);
  }
  throw Error(ErrorKind::DomainError, "unknown series op");
}

std::string rational_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace dyckzeta
