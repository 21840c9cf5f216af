#pragma once

#include <cctype>
#include <string>

#include "boson.hpp"

namespace dyckhike {

namespace detail {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!accept(c)) fail(what);
  }

  unsigned long number(const std::string& what) {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(what);
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (v > 1000000000UL) fail("a smaller number");
      ++pos_;
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError("cannot parse '" + text_ + "'", pos_, expected);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

inline BosonFactor parse_factor(Cursor& cur) {
  BosonFactor f;
  cur.expect('a', "'a' or 'ad'");
  f.dagger = cur.accept('d');
  cur.expect('[', "'['");
  f.mode = static_cast<unsigned>(cur.number("a mode index"));
  cur.expect(']', "']'");
  if (cur.accept('^')) {
    unsigned long p = cur.number("a positive exponent");
    if (p == 0) cur.fail("a positive exponent");
    f.power = static_cast<unsigned>(p);
  }
  return f;
}

}  // namespace detail

/// expr := term ("+" term)*; term := factor ("*" factor)*;
/// factor := ("a"|"ad") "[" mode "]" ("^" posint)?. Whitespace insignificant.
inline BosonExpr parse_expr(const std::string& text) {
  detail::Cursor cur(text);
  BosonExpr e;
  do {
    Monomial m;
    do {
      m.factors.push_back(detail::parse_factor(cur));
    } while (cur.accept('*'));
    m.normalize();
    e.terms.push_back(std::move(m));
  } while (cur.accept('+'));
  if (!cur.done()) cur.fail("'*', '+', or end of input");
  return e;
}

/// "|n0,n1,...>" with non-negative integer occupations.
inline FockState parse_vacuum(const std::string& text) {
  detail::Cursor cur(text);
  cur.expect('|', "'|'");
  FockState s;
  unsigned mode = 0;
  do {
    s.set(mode++, cur.number("a non-negative occupation"));
  } while (cur.accept(','));
  cur.expect('>', "'>'");
  if (!cur.done()) cur.fail("end of input");
  return s;
}

inline std::string to_text(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    const auto& f = m.factors[i];
    if (i) out += "*";
    out += f.dagger ? "ad" : "a";
    out += "[" + std::to_string(f.mode) + "]";
    if (f.power != 1) out += "^" + std::to_string(f.power);
  }
  return out;
}

inline std::string to_text(const BosonExpr& e) {
  std::string out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    if (i) out += " + ";
    out += to_text(e.terms[i]);
  }
  return out;
}

}  // namespace dyckhike
