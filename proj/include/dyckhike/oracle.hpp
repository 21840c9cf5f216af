#pragma once

#include <map>
#include <string>
#include <utility>

#include "boson.hpp"
#include "dyck.hpp"
#include "engine.hpp"

namespace dyckhike {

/// Guard rails for brute-force state growth. The oracle never truncates;
/// crossing a limit is an error so results stay exact by construction.
struct TruncationPolicy {
  unsigned long max_total_quanta = 1000;
  unsigned long max_per_mode = 1000;
};

namespace detail {

inline void enforce_policy(const FockVector& v, const TruncationPolicy& policy) {
  for (auto& [s, a] : v.amps) {
    if (s.total() > policy.max_total_quanta)
      throw TruncationBreach("state " + s.to_string() + " exceeds " +
                             std::to_string(policy.max_total_quanta) + " total quanta");
    for (auto& [mode, n] : s.occ)
      if (n > policy.max_per_mode)
        throw TruncationBreach("mode " + std::to_string(mode) + " of " + s.to_string() +
                               " exceeds " + std::to_string(policy.max_per_mode) + " quanta");
  }
}

}  // namespace detail

/// (A.adjoint() +/- A)^k on the vacuum by k literal applications.
inline FockVector oracle_power(const BosonExpr& A, const FockState& vac, long k,
                               SignMode sign, const TruncationPolicy& policy = {}) {
  if (k < 0) throw ValidationError("power exponent must be non-negative");
  if (!check_vacuum(A, vac))
    throw NotAVacuum("state " + vac.to_string() + " is not annihilated by the operator");
  BosonExpr raise = A.adjoint();
  FockVector v = unit_vector(vac);
  for (long i = 0; i < k; ++i) {
    FockVector next = apply_expr(raise, v);
    FockVector lower = apply_expr(A, v);
    if (sign == SignMode::minus)
      next -= lower;
    else
      next += lower;
    detail::enforce_policy(next, policy);
    v = std::move(next);
  }
  return v;
}

/// Independent route to one coefficient: enumerate the words of D(k,0,d2),
/// apply each as the corresponding operator string, and project the summed
/// vector onto the normalized ladder state at d2.
inline RatRadical oracle_word_expansion(const BosonExpr& A, const FockState& vac, long k,
                                        long delta2,
                                        const TruncationPolicy& policy = {}) {
  PathSpec spec{k, 0, delta2};
  spec.validate();
  if (count_paths(spec) == 0) throw EmptySpec("path spec admits no words");
  if (!check_vacuum(A, vac))
    throw NotAVacuum("state " + vac.to_string() + " is not annihilated by the operator");
  BosonExpr raise = A.adjoint();
  FockVector total;
  for_each_word(spec, [&](const DyckWord& w) {
    FockVector cur = unit_vector(vac);
    for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
      cur = apply_expr(*it == 'U' ? raise : A, cur);
      if (cur.is_zero()) break;
    }
    detail::enforce_policy(cur, policy);
    total += cur;
  });
  auto tower = ladder_states(A, vac, static_cast<unsigned>(delta2));
  if (static_cast<long>(tower.size()) <= delta2) return RatRadical();
  const FockVector& target = tower[delta2];
  RatRadical norm2 = target.inner(target);
  return target.inner(total) / sqrt_of(norm2.as_rational());
}

/// Expand v over the normalized ladder states up to p_max by exact inner
/// products. Anything left over means v is outside the tower span.
inline std::map<long, RatRadical> oracle_ladder_decomposition(const BosonExpr& A,
                                                              const FockState& vac,
                                                              const FockVector& v,
                                                              unsigned p_max) {
  auto tower = ladder_states(A, vac, p_max);
  std::map<long, RatRadical> coeffs;
  FockVector residual = v;
  for (std::size_t p = 0; p < tower.size(); ++p) {
    const FockVector& psi = tower[p];
    RatRadical norm2 = psi.inner(psi);
    RatRadical overlap = psi.inner(v);
    if (overlap.is_zero()) continue;
    coeffs[static_cast<long>(p)] = overlap / sqrt_of(norm2.as_rational());
    residual -= psi * (overlap / norm2);
  }
  if (!residual.is_zero())
    throw ResidualOutsideTower("component outside the ladder span, e.g. on " +
                               residual.amps.begin()->first.to_string());
  return coeffs;
}

}  // namespace dyckhike
