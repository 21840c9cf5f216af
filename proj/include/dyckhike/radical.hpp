#pragma once

#include <string>

#include "numeric.hpp"

namespace dyckhike {

/// Exact scalar q * sqrt(n) with rational q and non-negative integer n.
/// Normalization folds perfect squares into q and extracts small square
/// factors; remaining radicands are compared via cross-multiplied squares,
/// so equality and addition stay exact without full factorization.
struct RatRadical {
  BigRat q;
  BigInt n;

  RatRadical() : q(0), n(1) {}
  RatRadical(const BigRat& rational) : q(rational), n(1) {}  // NOLINT: implicit by design
  RatRadical(long v) : q(v), n(1) {}                         // NOLINT
  RatRadical(const BigRat& rational, const BigInt& radicand) : q(rational), n(radicand) {
    normalize();
  }

  /// sqrt(x) for x >= 0; sqrt(p/q) is represented as sqrt(p*q)/q.
  static RatRadical sqrt_of(const BigRat& x) {
    if (x < 0) throw ValidationError("square root of a negative rational");
    return RatRadical(make_rat(1, denominator(x)), numerator(x) * denominator(x));
  }

  void normalize() {
    if (n < 0) throw ValidationError("negative radicand");
    if (q == 0 || n == 0) {
      q = 0;
      n = 1;
      return;
    }
    if (n == 1) return;
    // peel small square factors to keep radicands comparable
    static const unsigned long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                           29, 31, 37, 41, 43, 47, 53, 59, 61,
                                           67, 71, 73, 79, 83, 89, 97};
    for (unsigned long p : primes) {
      BigInt p2(p);
      p2 *= p;
      while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) {
        n /= p2;
        q *= static_cast<long>(p);
      }
    }
    if (is_perfect_square(n)) {
      q *= BigRat(isqrt(n));
      n = 1;
    }
  }

  bool is_zero() const { return q == 0; }
  bool is_rational() const { return n == 1; }

  BigRat as_rational() const {
    if (n != 1) throw MathError("radical value is irrational: " + to_string());
    return q;
  }

  /// True when the two radicands differ by a square factor (so the values
  /// live in the same quadratic extension and may be added).
  bool compatible(const RatRadical& o) const {
    return is_zero() || o.is_zero() || n == o.n || is_perfect_square(n * o.n);
  }

  RatRadical operator-() const {
    RatRadical r(*this);
    r.q = -r.q;
    return r;
  }

  RatRadical& operator+=(const RatRadical& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = o;
      return *this;
    }
    if (n == o.n) {
      q += o.q;
    } else {
      BigInt prod = n * o.n;
      if (!is_perfect_square(prod))
        throw IncompatibleRadicals("cannot add sqrt(" + dyckhike::to_string(n) +
                                   ") and sqrt(" + dyckhike::to_string(o.n) + ")");
      // sqrt(o.n) = isqrt(prod)/n * sqrt(n)
      q += o.q * make_rat(isqrt(prod), n);
    }
    if (q == 0) n = 1;
    return *this;
  }

  RatRadical& operator-=(const RatRadical& o) { return *this += -o; }

  friend RatRadical operator+(RatRadical a, const RatRadical& b) { return a += b; }
  friend RatRadical operator-(RatRadical a, const RatRadical& b) { return a -= b; }

  friend RatRadical operator*(const RatRadical& a, const RatRadical& b) {
    if (a.is_zero() || b.is_zero()) return RatRadical();
    if (a.n == b.n) return RatRadical(a.q * b.q * BigRat(a.n));
    return RatRadical(a.q * b.q, a.n * b.n);
  }

  friend RatRadical operator/(const RatRadical& a, const RatRadical& b) {
    if (b.is_zero()) throw ValidationError("division by zero radical");
    if (a.is_zero()) return RatRadical();
    // 1/sqrt(n) = sqrt(n)/n
    return RatRadical(a.q / (b.q * BigRat(b.n)), a.n * b.n);
  }

  friend bool operator==(const RatRadical& a, const RatRadical& b) {
    if (a.is_zero() || b.is_zero()) return a.q == b.q;
    if (sgn(a.q) != sgn(b.q)) return false;
    return a.q * a.q * BigRat(a.n) == b.q * b.q * BigRat(b.n);
  }
  friend bool operator!=(const RatRadical& a, const RatRadical& b) { return !(a == b); }

  double to_double() const { return to_mpf(64).get_d(); }

  mpf_class to_mpf(unsigned prec_bits) const {
    mpf_class f = dyckhike::to_mpf(q, prec_bits);
    if (n != 1) {
      mpf_class root(0, prec_bits);
      mpf_set_z(root.get_mpf_t(), n.get_mpz_t());
      mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
      f *= root;
    }
    return f;
  }

  std::string to_string() const {
    if (n == 1) return dyckhike::to_string(q);
    return dyckhike::to_string(q) + "*sqrt(" + dyckhike::to_string(n) + ")";
  }
};

inline RatRadical sqrt_of(const BigRat& x) { return RatRadical::sqrt_of(x); }

}  // namespace dyckhike
