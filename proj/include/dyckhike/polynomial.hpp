#pragma once

#include <cstddef>
#include <mutex>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace dyckhike {

/// Dense univariate polynomial over exact rationals.
/// Trailing zero coefficients are stripped; the zero polynomial has degree -1.
struct Poly {
  std::vector<BigRat> coeffs;  // coeffs[i] multiplies x^i

  Poly() = default;
  explicit Poly(std::vector<BigRat> c) : coeffs(std::move(c)) { normalize(); }

  static Poly constant(const BigRat& c) { return Poly({c}); }

  /// c * x^deg
  static Poly monomial(const BigRat& c, std::size_t deg) {
    std::vector<BigRat> v(deg + 1, BigRat(0));
    v[deg] = c;
    return Poly(std::move(v));
  }

  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }

  BigRat coeff(std::size_t i) const {
    return i < coeffs.size() ? coeffs[i] : BigRat(0);
  }

  BigRat eval(const BigRat& x) const {
    BigRat acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
  }

  bool operator==(const Poly& o) const { return coeffs == o.coeffs; }
};

inline Poly operator+(const Poly& p, const Poly& q) {
  std::vector<BigRat> r(std::max(p.coeffs.size(), q.coeffs.size()), BigRat(0));
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) r[i] = p.coeffs[i];
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) r[i] += q.coeffs[i];
  return Poly(std::move(r));
}

inline Poly operator-(const Poly& p, const Poly& q) {
  std::vector<BigRat> r(std::max(p.coeffs.size(), q.coeffs.size()), BigRat(0));
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) r[i] = p.coeffs[i];
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) r[i] -= q.coeffs[i];
  return Poly(std::move(r));
}

inline Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  std::vector<BigRat> r(p.coeffs.size() + q.coeffs.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs.size(); ++j)
      r[i + j] += p.coeffs[i] * q.coeffs[j];
  return Poly(std::move(r));
}

inline Poly operator*(const BigRat& c, const Poly& p) {
  if (c == 0) return Poly();
  std::vector<BigRat> r(p.coeffs);
  for (auto& x : r) x *= c;
  return Poly(std::move(r));
}

/// q(x) = p(x + c), exact binomial expansion via Horner on (x + c).
inline Poly shift(const Poly& p, const BigRat& c) {
  Poly res;
  for (long i = p.degree(); i >= 0; --i) {
    // res = res * (x + c) + p_i
    std::vector<BigRat> next(res.coeffs.size() + 1, BigRat(0));
    for (std::size_t t = 0; t < res.coeffs.size(); ++t) {
      next[t + 1] += res.coeffs[t];
      next[t] += res.coeffs[t] * c;
    }
    if (next.empty()) next.resize(1, BigRat(0));
    next[0] += p.coeffs[i];
    res.coeffs = std::move(next);
  }
  res.normalize();
  return res;
}

/// Bernoulli number B_n in the B_1 = -1/2 convention, cached.
inline BigRat bernoulli(std::size_t n) {
  static std::vector<BigRat> cache{BigRat(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    std::size_t m = cache.size();
    // sum_{i=0}^{m} binom(m+1, i) B_i = 0
    BigRat acc(0);
    for (std::size_t i = 0; i < m; ++i)
      acc += BigRat(binomial(static_cast<long>(m) + 1, static_cast<long>(i))) * cache[i];
    cache.push_back(-acc / BigRat(static_cast<long>(m) + 1));
  }
  return cache[n];
}

/// Power-sum polynomial S_t with S_t(X) = sum_{m=0}^{X-1} m^t, degree t+1.
/// Faulhaber: S_t(X) = 1/(t+1) sum_{i=0}^{t} binom(t+1, i) B_i X^{t+1-i}.
inline Poly power_sum(std::size_t t) {
  static std::vector<Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= t) {
    std::size_t n = cache.size();
    std::vector<BigRat> c(n + 2, BigRat(0));
    BigRat inv = make_rat(1, static_cast<long>(n) + 1);
    for (std::size_t i = 0; i <= n; ++i)
      c[n + 1 - i] = inv * BigRat(binomial(static_cast<long>(n) + 1, static_cast<long>(i))) *
                     bernoulli(i);
    cache.push_back(Poly(std::move(c)));
  }
  return cache[t];
}

/// F with F(M) = sum_{m=lower}^{M} p(m) for every integer M >= lower-1;
/// in particular F(lower-1) = 0 and deg F = deg p + 1.
inline Poly definite_sum(const Poly& p, long lower) {
  if (lower < 0) throw ValidationError("definite_sum requires lower >= 0");
  if (p.is_zero()) return Poly();
  // Q(X) = sum_{m=0}^{X-1} p(m); then F(M) = Q(M+1) - Q(lower).
  Poly q;
  for (std::size_t t = 0; t < p.coeffs.size(); ++t) {
    if (p.coeffs[t] == 0) continue;
    q = q + p.coeffs[t] * power_sum(t);
  }
  Poly f = shift(q, BigRat(1));
  BigRat c = q.eval(BigRat(lower));
  if (f.coeffs.empty()) f.coeffs.resize(1, BigRat(0));
  f.coeffs[0] -= c;
  f.normalize();
  return f;
}

/// Exact polynomial through the given points (Newton divided differences).
inline Poly interpolate(const std::vector<std::pair<BigRat, BigRat>>& pts) {
  std::size_t n = pts.size();
  if (n == 0) return Poly();
  std::vector<BigRat> dd;
  dd.reserve(n);
  for (auto& pt : pts) dd.push_back(pt.second);
  // dd[i] becomes the divided difference [y_0..y_i]
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (pts[i].first - pts[i - level].first);
  Poly res = Poly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    // res = res * (x - x_i) + dd[i]
    res = res * Poly({-pts[i].first, BigRat(1)});
    if (res.coeffs.empty()) res.coeffs.resize(1, BigRat(0));
    res.coeffs[0] += dd[i];
    res.normalize();
  }
  return res;
}

}  // namespace dyckhike
