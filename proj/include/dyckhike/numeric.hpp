#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace dyckhike {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Reduced fraction num/den. mpq_class does not canonicalize on its own.
inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt numerator(const BigRat& q) { return q.get_num(); }
inline BigInt denominator(const BigRat& q) { return q.get_den(); }

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// binom(n, j) with the ballot-problem convention: 0 whenever j < 0 or j > n.
inline BigInt binomial(long n, long j) {
  if (j < 0 || n < 0 || j > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(j));
  return r;
}

inline bool is_perfect_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline BigInt isqrt(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline std::string to_string(const BigInt& n) { return n.get_str(); }

/// Canonical "p" or "p/q" form, q > 1 only when needed.
inline std::string to_string(const BigRat& q) { return q.get_str(); }

inline double to_double(const BigRat& q) { return q.get_d(); }

/// Exact conversion into a floating-point value of the given precision.
inline mpf_class to_mpf(const BigRat& q, unsigned prec_bits) {
  mpf_class f(0, prec_bits);
  mpf_set_q(f.get_mpf_t(), q.get_mpq_t());
  return f;
}

/// Parse a decimal literal ("1", "-0.05", "2.5e-3") into an exact rational.
inline BigRat parse_decimal_rat(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  std::string digits;
  long scale = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++scale;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ParseError("malformed number '" + text + "'", i, "digit");
  long exp10 = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      eneg = text[i] == '-';
      ++i;
    }
    if (i >= text.size()) throw ParseError("malformed exponent in '" + text + "'", i, "digit");
    for (; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9')
        throw ParseError("malformed exponent in '" + text + "'", i, "digit");
      exp10 = exp10 * 10 + (text[i] - '0');
    }
    if (eneg) exp10 = -exp10;
  }
  if (i != text.size()) throw ParseError("trailing characters in number '" + text + "'", i, "");
  BigInt num(digits.empty() ? "0" : digits);
  if (neg) num = -num;
  long net = exp10 - scale;
  BigInt pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
  return net >= 0 ? BigRat(num * pow10) : make_rat(num, pow10);
}

}  // namespace dyckhike
