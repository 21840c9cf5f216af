#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "radical.hpp"

namespace dyckhike {

/// One operator factor a[mode]^power or ad[mode]^power.
struct BosonFactor {
  unsigned mode = 0;
  bool dagger = false;
  unsigned power = 1;

  bool operator==(const BosonFactor&) const = default;
};

/// Product of factors, applied right-to-left to states.
struct Monomial {
  std::vector<BosonFactor> factors;

  unsigned length() const {
    unsigned d = 0;
    for (auto& f : factors) d += f.power;
    return d;
  }

  std::set<unsigned> modes() const {
    std::set<unsigned> m;
    for (auto& f : factors) m.insert(f.mode);
    return m;
  }

  /// Merge adjacent factors with identical mode and dagger flag.
  void normalize() {
    std::vector<BosonFactor> out;
    for (auto& f : factors) {
      if (!out.empty() && out.back().mode == f.mode && out.back().dagger == f.dagger)
        out.back().power += f.power;
      else
        out.push_back(f);
    }
    factors = std::move(out);
  }

  Monomial adjoint() const {
    Monomial m;
    m.factors.reserve(factors.size());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      m.factors.push_back({it->mode, !it->dagger, it->power});
    return m;
  }

  bool operator==(const Monomial&) const = default;
};

/// Sum of monomials A = sum_I A_I.
struct BosonExpr {
  std::vector<Monomial> terms;

  BosonExpr adjoint() const {
    BosonExpr e;
    e.terms.reserve(terms.size());
    for (auto& t : terms) e.terms.push_back(t.adjoint());
    return e;
  }

  /// Largest term length; the interpolation degree d of the ladder product.
  unsigned degree() const {
    unsigned d = 0;
    for (auto& t : terms) d = std::max(d, t.length());
    return d;
  }

  bool operator==(const BosonExpr&) const = default;
};

/// Occupation-number basis state; absent modes hold zero quanta.
struct FockState {
  std::map<unsigned, unsigned long> occ;

  unsigned long occupation(unsigned mode) const {
    auto it = occ.find(mode);
    return it == occ.end() ? 0 : it->second;
  }

  void set(unsigned mode, unsigned long n) {
    if (n == 0)
      occ.erase(mode);
    else
      occ[mode] = n;
  }

  unsigned long total() const {
    unsigned long t = 0;
    for (auto& [m, n] : occ) t += n;
    return t;
  }

  std::string to_string() const {
    unsigned max_mode = 0;
    for (auto& [m, n] : occ) max_mode = std::max(max_mode, m);
    std::string s = "|";
    for (unsigned m = 0; m <= max_mode; ++m) {
      if (m) s += ",";
      s += std::to_string(occupation(m));
    }
    return s + ">";
  }

  auto operator<=>(const FockState&) const = default;
};

/// Sparse vector over Fock basis states with exact radical amplitudes.
struct FockVector {
  std::map<FockState, RatRadical> amps;

  bool is_zero() const { return amps.empty(); }

  void add(const FockState& s, const RatRadical& a) {
    if (a.is_zero()) return;
    auto [it, inserted] = amps.emplace(s, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) amps.erase(it);
    }
  }

  FockVector& operator+=(const FockVector& o) {
    for (auto& [s, a] : o.amps) add(s, a);
    return *this;
  }

  FockVector& operator-=(const FockVector& o) {
    for (auto& [s, a] : o.amps) add(s, -a);
    return *this;
  }

  friend FockVector operator*(const FockVector& v, const RatRadical& c) {
    FockVector out;
    if (c.is_zero()) return out;
    for (auto& [s, a] : v.amps) out.amps.emplace(s, a * c);
    return out;
  }

  /// Exact real inner product <this, other>.
  RatRadical inner(const FockVector& o) const {
    RatRadical acc;
    for (auto& [s, a] : amps) {
      auto it = o.amps.find(s);
      if (it != o.amps.end()) acc += a * it->second;
    }
    return acc;
  }

  bool operator==(const FockVector&) const = default;
};

inline FockVector unit_vector(const FockState& s) {
  FockVector v;
  v.amps.emplace(s, RatRadical(1));
  return v;
}

namespace detail {

/// a^power or ad^power on a single mode of one basis state. Annihilation
/// below zero occupation drops the component (returns nullopt).
inline std::optional<std::pair<FockState, RatRadical>> apply_factor_to_state(
    const BosonFactor& f, const FockState& s, const RatRadical& amp) {
  unsigned long n = s.occupation(f.mode);
  BigInt under_root(1);
  FockState out = s;
  if (f.dagger) {
    for (unsigned long i = 1; i <= f.power; ++i) under_root *= BigInt(n + i);
    out.set(f.mode, n + f.power);
  } else {
    if (n < f.power) return std::nullopt;
    for (unsigned long i = 0; i < f.power; ++i) under_root *= BigInt(n - i);
    out.set(f.mode, n - f.power);
  }
  return std::make_pair(std::move(out), amp * RatRadical(BigRat(1), under_root));
}

}  // namespace detail

/// Linear action of a monomial, factor by factor right-to-left.
inline FockVector apply_monomial(const Monomial& m, const FockVector& v) {
  FockVector cur = v;
  for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it) {
    FockVector next;
    for (auto& [s, a] : cur.amps)
      if (auto hit = detail::apply_factor_to_state(*it, s, a))
        next.add(hit->first, hit->second);
    cur = std::move(next);
  }
  return cur;
}

inline FockVector apply_expr(const BosonExpr& e, const FockVector& v) {
  FockVector out;
  for (auto& t : e.terms) out += apply_monomial(t, v);
  return out;
}

/// Violations of the disjoint-monomial-sum shape; empty means valid.
inline std::vector<std::string> validate_disjoint(const BosonExpr& e) {
  std::vector<std::string> bad;
  if (e.terms.empty()) {
    bad.push_back("expression has no terms");
    return bad;
  }
  unsigned d = e.terms[0].length();
  for (std::size_t i = 1; i < e.terms.size(); ++i)
    if (e.terms[i].length() != d) {
      bad.push_back("terms 0 and " + std::to_string(i) + " have unequal lengths");
      break;
    }
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    auto mi = e.terms[i].modes();
    for (std::size_t j = i + 1; j < e.terms.size(); ++j) {
      auto mj = e.terms[j].modes();
      std::vector<unsigned> common;
      std::set_intersection(mi.begin(), mi.end(), mj.begin(), mj.end(),
                            std::back_inserter(common));
      if (!common.empty())
        bad.push_back("terms " + std::to_string(i) + " and " + std::to_string(j) +
                      " share mode " + std::to_string(common[0]));
    }
  }
  // per-term exponent profile: multiset of per-mode creation (and
  // annihilation) exponents; all terms must share both multisets
  auto profile = [](const Monomial& t, bool dagger) {
    std::map<unsigned, unsigned> per_mode;
    for (auto& f : t.factors)
      if (f.dagger == dagger) per_mode[f.mode] += f.power;
    std::vector<unsigned> exps;
    for (auto& [m, p] : per_mode) exps.push_back(p);
    std::sort(exps.begin(), exps.end());
    return exps;
  };
  for (std::size_t i = 1; i < e.terms.size(); ++i) {
    if (profile(e.terms[i], true) != profile(e.terms[0], true))
      bad.push_back("term " + std::to_string(i) +
                    " has a different creation-exponent profile than term 0");
    if (profile(e.terms[i], false) != profile(e.terms[0], false))
      bad.push_back("term " + std::to_string(i) +
                    " has a different annihilation-exponent profile than term 0");
  }
  return bad;
}

inline bool check_vacuum(const BosonExpr& e, const FockState& vac) {
  return apply_expr(e, unit_vector(vac)).is_zero();
}

/// Unnormalized tower psi~(0)..psi~(p_max) generated by repeatedly applying
/// the adjoint of A; stops early (shorter list) if the tower dies.
inline std::vector<FockVector> ladder_states(const BosonExpr& A, const FockState& vac,
                                             unsigned p_max) {
  if (!check_vacuum(A, vac))
    throw NotAVacuum("state " + vac.to_string() + " is not annihilated by the operator");
  BosonExpr raise = A.adjoint();
  std::vector<FockVector> tower;
  tower.push_back(unit_vector(vac));
  for (unsigned p = 1; p <= p_max; ++p) {
    FockVector next = apply_expr(raise, tower.back());
    if (next.is_zero()) break;
    tower.push_back(std::move(next));
  }
  return tower;
}

/// Products lambda_p * mu_p; entry p-1 holds the value for height p.
/// A zero entry at p means the tower terminates at height p-1.
struct LadderTable {
  std::vector<BigRat> products;

  unsigned max_p() const { return static_cast<unsigned>(products.size()); }

  BigRat product(unsigned p) const {  // 1-based
    if (p == 0 || p > products.size())
      throw ValidationError("ladder product index out of range");
    return products[p - 1];
  }

  /// First p with a zero product, if the table records one.
  std::optional<unsigned> tower_end() const {
    for (std::size_t i = 0; i < products.size(); ++i)
      if (products[i] == 0) return static_cast<unsigned>(i + 1);
    return std::nullopt;
  }
};

namespace detail {

/// Exact ratio c with w == v * c, for nonzero v; nullopt if not proportional.
inline std::optional<RatRadical> proportionality_ratio(const FockVector& w,
                                                       const FockVector& v) {
  if (v.is_zero()) return std::nullopt;
  if (w.is_zero()) return RatRadical();
  auto& [s0, a0] = *v.amps.begin();  // lexicographically least basis state of v
  auto it = w.amps.find(s0);
  if (it == w.amps.end()) return std::nullopt;
  RatRadical c = it->second / a0;
  if (v * c == w) return c;
  return std::nullopt;
}

}  // namespace detail

/// Extract lambda_p*mu_p for p = 1..p_max by raising each ladder state and
/// lowering it back, demanding an exact scalar multiple of where it started.
/// Stops after recording the zero that marks a finite tower's end.
inline LadderTable lambda_mu_table(const BosonExpr& A, const FockState& vac,
                                   unsigned p_max) {
  if (!check_vacuum(A, vac))
    throw NotAVacuum("state " + vac.to_string() + " is not annihilated by the operator");
  BosonExpr raise = A.adjoint();
  LadderTable table;
  FockVector cur = unit_vector(vac);
  for (unsigned p = 1; p <= p_max; ++p) {
    FockVector up = apply_expr(raise, cur);
    if (up.is_zero()) {
      table.products.push_back(BigRat(0));
      break;
    }
    FockVector down = apply_expr(A, up);
    auto ratio = detail::proportionality_ratio(down, cur);
    if (!ratio)
      throw NotProportional("lowering after raising is not a scalar on the ladder state at p=" +
                            std::to_string(p));
    if (!ratio->is_rational())
      throw NotProportional("ladder product at p=" + std::to_string(p) +
                            " is not rational: " + ratio->to_string());
    table.products.push_back(ratio->as_rational());
    cur = std::move(up);
  }
  return table;
}

/// Polynomial view of the ladder products, exact in the height index p.
struct LadderPolynomial {
  Poly poly;
  unsigned validated_up_to = 0;
};

/// Interpolate through (p, lambda_p*mu_p) for p = 1..d+1, then check the fit
/// against every remaining table entry.
inline LadderPolynomial lambda_mu_polynomial(const LadderTable& table, unsigned d) {
  if (table.max_p() < d + 1)
    throw InsufficientTower("need " + std::to_string(d + 1) + " ladder entries, have " +
                            std::to_string(table.max_p()));
  std::vector<std::pair<BigRat, BigRat>> pts;
  for (unsigned p = 1; p <= d + 1; ++p)
    pts.emplace_back(BigRat(static_cast<long>(p)), table.product(p));
  Poly poly = interpolate(pts);
  for (unsigned p = d + 2; p <= table.max_p(); ++p)
    if (poly.eval(BigRat(static_cast<long>(p))) != table.product(p))
      throw InterpolationMismatch("ladder entry at p=" + std::to_string(p) +
                                  " disagrees with the interpolated polynomial");
  return LadderPolynomial{std::move(poly), table.max_p()};
}

}  // namespace dyckhike
