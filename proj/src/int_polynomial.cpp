#include "dyckzeta/int_polynomial.hpp"

#include <algorithm>

#include "dyckzeta/errors.hpp"

namespace dyckzeta {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::operator[](std::size_t n) const {
  return n < coeffs_.size() ? coeffs_[n] : BigInt(0);
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  }
  return IntPolynomial(std::move(out));
}

std::size_t IntPolynomial::strip_z_power() {
  std::size_t k = 0;
  while (k < coeffs_.size() && sgn(coeffs_[k]) == 0) ++k;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(k));
  return k;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + Rational(coeffs_[i]);
  }
  return acc;
}

long double IntPolynomial::evaluate(long double x) const {
  long double acc = 0.0L;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + static_cast<long double>(coeffs_[i].get_d());
  }
  return acc;
}

Series IntPolynomial::to_series(std::size_t order) const {
  Series s(order);
  for (std::size_t i = 0; i < coeffs_.size() && i <= order; ++i) {
    s[i] = Rational(coeffs_[i]);
  }
  return s;
}

std::vector<std::string> IntPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RatPoly to_rational(const IntPolynomial& p) {
  RatPoly out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q;
  if (a.size() < b.size()) return {q, a};
  q.resize(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return {q, a};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) {
    out.push_back(p[i] * static_cast<unsigned long>(i));
  }
  return out;
}

Rational eval(const RatPoly& p, const Rational& x) {
  Rational acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::vector<RatPoly> sturm_chain(const IntPolynomial& poly) {
  RatPoly p = to_rational(poly);
  const RatPoly dp = derivative(p);
  const RatPoly g = gcd(p, dp);
  if (g.size() > 1) p = divmod(p, g).first;

  std::vector<RatPoly> chain{p, derivative(p)};
  trim(chain.back());
  while (!chain.back().empty()) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

std::size_t sign_variations(const std::vector<RatPoly>& chain,
                            const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_distinct_roots(const IntPolynomial& p, const Rational& a,
                                 const Rational& b) {
  if (p.is_zero()) {
    throw Error(ErrorKind::DomainError, "root count of the zero polynomial");
  }
  const auto chain = sturm_chain(p);
  const auto va = sign_variations(chain, a);
  const auto vb = sign_variations(chain, b);
  return va >= vb ? va - vb : 0;
}

RootBracket first_root_above(const IntPolynomial& poly, const Rational& lower,
                             const Rational& upper, double tol) {
  IntPolynomial p = poly;
  p.strip_z_power();
  if (p.degree() < 1) {
    throw Error(ErrorKind::NoRoot, "polynomial has no nonzero root");
  }
  const auto chain = sturm_chain(p);
  Rational lo = lower;
  Rational hi = upper;
  const auto v_lo = sign_variations(chain, lo);
  if (!(lo < hi) || v_lo <= sign_variations(chain, hi)) {
    throw Error(ErrorKind::NoRoot, "no root in (" + rational_string(lower) +
                                       ", " + rational_string(upper) + "]");
  }
  const Rational width(tol);
  auto lo_variations = v_lo;
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    const auto v_mid = sign_variations(chain, mid);
    if (v_mid < lo_variations) {
      hi = mid;
    } else {
      lo = mid;
      lo_variations = v_mid;
    }
  }
  RootBracket out;
  out.lo = lo;
  out.hi = hi;
  out.root = Rational((lo + hi) / 2).get_d();
  const int s_lo = sgn(p.evaluate(lo));
  const int s_hi = sgn(p.evaluate(hi));
  out.sign_change = s_lo != 0 && s_lo != s_hi;
  return out;
}

RootBracket smallest_positive_root(const IntPolynomial& poly,
                                   const Rational& upper, double tol) {
  return first_root_above(poly, Rational(0), upper, tol);
}

std::vector<RootBracket> roots_in(const IntPolynomial& poly,
                                  const Rational& lower, const Rational& upper,
                                  double tol) {
  std::vector<RootBracket> out;
  IntPolynomial p = poly;
  p.strip_z_power();
  if (p.degree() < 1) return out;
  Rational from = lower;
  while (from < upper && count_distinct_roots(p, from, upper) > 0) {
    out.push_back(first_root_above(p, from, upper, tol));
    from = out.back().hi;
  }
  return out;
}

}  // namespace dyckzeta
