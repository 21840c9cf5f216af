#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "engine.hpp"

namespace dyckhike {

/// Taylor data of exp[r(A.adjoint() +/- A)] on the vacuum, truncated at
/// order K. per_level keeps the raw power coefficients c_k; assembled holds
/// the series c_k/k! per level, indexed by power of r.
struct SeriesResult {
  long K = 0;
  SignMode sign = SignMode::minus;
  std::map<long, std::vector<std::pair<long, RatRadical>>> per_level;
  std::map<long, std::vector<RatRadical>> assembled;
};

inline SeriesResult build_series(DyckSumEngine& engine, long K, SignMode sign) {
  if (K < 0) throw ValidationError("truncation order must be non-negative");
  SeriesResult series;
  series.K = K;
  series.sign = sign;
  for (long k = 0; k <= K; ++k) {
    PowerResult pr = engine.power_coefficients(k, sign);
    BigRat inv_fact = make_rat(BigInt(1), factorial(static_cast<unsigned long>(k)));
    for (auto& [d2, c] : pr.coeffs) {
      series.per_level[d2].emplace_back(k, c);
      auto& poly = series.assembled[d2];
      if (static_cast<long>(poly.size()) <= K) poly.resize(K + 1);
      poly[k] = c * RatRadical(inv_fact);
    }
  }
  return series;
}

inline SeriesResult build_series(const BosonExpr& A, const FockState& vac, long K,
                                 SignMode sign) {
  DyckSumEngine engine(A, vac);
  return build_series(engine, K, sign);
}

/// Floating-point view of a series at one coupling value.
struct NumericAmplitudes {
  double r = 0;
  long K = 0;
  int precision_bits = 0;
  std::map<long, double> amplitudes;
  double vev = 0;
  /// Vacuum-level partial sums at orders K-2, K-1, K; convergence is the
  /// caller's judgment, not ours.
  std::vector<std::pair<long, double>> vev_partials;
};

namespace detail {

inline mpf_class eval_level(const std::vector<RatRadical>& coeffs, const mpf_class& r,
                            long order, int prec) {
  mpf_class acc(0, prec);
  long top = std::min<long>(order, static_cast<long>(coeffs.size()) - 1);
  for (long k = top; k >= 0; --k) {
    acc *= r;
    acc += coeffs[k].to_mpf(prec);
  }
  return acc;
}

}  // namespace detail

inline NumericAmplitudes evaluate_at(const SeriesResult& series, double r,
                                     int precision_bits = 256) {
  int prec = std::max(precision_bits, 53);
  NumericAmplitudes out;
  out.r = r;
  out.K = series.K;
  out.precision_bits = prec;
  mpf_class rr(r, prec);
  for (auto& [d2, coeffs] : series.assembled) {
    mpf_class v = detail::eval_level(coeffs, rr, series.K, prec);
    out.amplitudes[d2] = v.get_d();
  }
  auto vac_it = series.assembled.find(0);
  for (long order = std::max<long>(series.K - 2, 0); order <= series.K; ++order) {
    double partial = 0;
    if (vac_it != series.assembled.end())
      partial = detail::eval_level(vac_it->second, rr, order, prec).get_d();
    out.vev_partials.emplace_back(order, partial);
  }
  out.vev = out.amplitudes.count(0) ? out.amplitudes[0] : 0.0;
  return out;
}

/// Closed-form two-boson pair amplitude, tanh(r)^n / cosh(r).
inline double squeeze_reference(long n, double r) {
  double t = 1;
  for (long i = 0; i < n; ++i) t *= std::tanh(r);
  return t / std::cosh(r);
}

/// Vacuum-level Taylor coefficients as exact rationals, one per even order.
/// The vacuum series has no odd terms; entry m is the coefficient of r^(2m).
inline std::vector<BigRat> vacuum_even_coefficients(const SeriesResult& series) {
  std::vector<BigRat> out;
  auto it = series.assembled.find(0);
  if (it == series.assembled.end())
    throw ValidationError("series has no vacuum level");
  const auto& coeffs = it->second;
  for (long k = 0; k < static_cast<long>(coeffs.size()); ++k) {
    if (k & 1) {
      if (!coeffs[k].is_zero())
        throw ValidationError("vacuum series has an odd-order term at k=" + std::to_string(k));
      continue;
    }
    out.push_back(coeffs[k].as_rational());
  }
  return out;
}

}  // namespace dyckhike
