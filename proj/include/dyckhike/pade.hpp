#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace dyckhike {

/// Rational approximant N/D with deg N <= L, deg M <= M, D(0) = 1, agreeing
/// with the source Taylor series through order L+M.
struct PadeApproximant {
  long L = 0;
  long M = 0;
  Poly numerator;
  Poly denominator;
};

namespace detail {

/// Upper-triangularize an integer matrix in place by fraction-free
/// elimination with row swaps; divisions stay exact. Throws SingularSystem
/// naming the column where no pivot was found.
inline void bareiss_triangularize(std::vector<std::vector<BigInt>>& m, long suggested_m) {
  long rows = static_cast<long>(m.size());
  BigInt prev(1);
  for (long step = 0; step < rows; ++step) {
    long pivot_row = -1;
    for (long r = step; r < rows; ++r)
      if (m[r][step] != 0) {
        pivot_row = r;
        break;
      }
    if (pivot_row < 0)
      throw SingularSystem("denominator system is singular at rank " + std::to_string(step),
                           static_cast<int>(step), static_cast<int>(suggested_m));
    if (pivot_row != step) std::swap(m[pivot_row], m[step]);
    long cols = static_cast<long>(m[step].size());
    for (long r = step + 1; r < rows; ++r) {
      for (long c = step + 1; c < cols; ++c) {
        BigInt t = m[step][step] * m[r][c] - m[r][step] * m[step][c];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[r][c] = std::move(t);
      }
      m[r][step] = 0;
    }
    prev = m[step][step];
  }
}

}  // namespace detail

/// Build the [L/M] approximant from exact Taylor coefficients. Denominator
/// coefficients solve the order-condition linear system, set up over the
/// integers (one scaling per row) and triangularized fraction-free; the
/// numerator follows by convolution. A rank-deficient system is reported,
/// never silently reduced; suggested_m hints the [L/M-1] retry.
inline PadeApproximant build_pade(const std::vector<BigRat>& taylor, long L, long M) {
  if (L < 0 || M < 0) throw ValidationError("approximant degrees must be non-negative");
  if (static_cast<long>(taylor.size()) < L + M + 1)
    throw ValidationError("need " + std::to_string(L + M + 1) + " Taylor coefficients, have " +
                          std::to_string(taylor.size()));
  auto c = [&](long n) -> BigRat { return n < 0 ? BigRat(0) : taylor[n]; };

  std::vector<BigRat> b(M + 1, BigRat(0));
  b[0] = 1;
  if (M > 0) {
    // rows i = 1..M: sum_j c(L+i-j) b_j = -c(L+i), unknowns b_1..b_M
    std::vector<std::vector<BigInt>> m(M, std::vector<BigInt>(M + 1));
    for (long i = 1; i <= M; ++i) {
      BigInt scale(1);
      for (long j = 1; j <= M; ++j) scale = lcm(scale, denominator(c(L + i - j)));
      scale = lcm(scale, denominator(c(L + i)));
      auto row_entry = [&](const BigRat& q) {
        BigRat scaled = q * BigRat(scale);
        return numerator(scaled);
      };
      for (long j = 1; j <= M; ++j) m[i - 1][j - 1] = row_entry(c(L + i - j));
      m[i - 1][M] = row_entry(-c(L + i));
    }
    detail::bareiss_triangularize(m, M - 1);
    for (long i = M - 1; i >= 0; --i) {
      BigRat acc(m[i][M]);
      for (long j = i + 1; j < M; ++j) acc -= BigRat(m[i][j]) * b[j + 1];
      b[i + 1] = acc / BigRat(m[i][i]);
    }
  }

  PadeApproximant p;
  p.L = L;
  p.M = M;
  p.denominator.coeffs = b;
  p.denominator.normalize();
  std::vector<BigRat> a(L + 1, BigRat(0));
  for (long n = 0; n <= L; ++n)
    for (long j = 0; j <= std::min(n, M); ++j) a[n] += b[j] * c(n - j);
  p.numerator.coeffs = std::move(a);
  p.numerator.normalize();
  return p;
}

/// Re-expand N/D as a Taylor series and compare with the source through
/// order L+M, in exact arithmetic.
inline bool order_condition_holds(const PadeApproximant& p, const std::vector<BigRat>& taylor) {
  long order = p.L + p.M;
  if (static_cast<long>(taylor.size()) < order + 1) return false;
  // D*t = N termwise: t_n = a_n - sum_{j>=1} b_j t_{n-j}
  std::vector<BigRat> t(order + 1);
  for (long n = 0; n <= order; ++n) {
    BigRat v = p.numerator.coeff(n);
    for (long j = 1; j <= std::min<long>(n, p.denominator.degree()); ++j)
      v -= p.denominator.coeff(j) * t[n - j];
    t[n] = v;
    if (t[n] != taylor[n]) return false;
  }
  return true;
}

/// N(r)/D(r) at the stated working precision.
inline double eval_pade(const PadeApproximant& p, double r, int precision_bits = 256,
                        double pole_threshold = 1e-12) {
  int prec = std::max(precision_bits, 53);
  mpf_class x(r, prec);
  auto horner = [&](const Poly& q) {
    mpf_class acc(0, prec);
    for (long k = q.degree(); k >= 0; --k) {
      acc *= x;
      acc += to_mpf(q.coeff(k), prec);
    }
    return acc;
  };
  mpf_class den = horner(p.denominator);
  if (abs(den) <= mpf_class(pole_threshold, prec))
    throw NearPole("denominator magnitude at r=" + std::to_string(r) + " is below threshold");
  mpf_class num = horner(p.numerator);
  return mpf_class(num / den).get_d();
}

}  // namespace dyckhike
