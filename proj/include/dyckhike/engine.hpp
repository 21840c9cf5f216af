#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "boson.hpp"
#include "dyck.hpp"
#include "polynomial.hpp"
#include "radical.hpp"

namespace dyckhike {

enum class SignMode { plus, minus };
enum class EvalMode { automatic, polynomial, table };

/// Stage functions F_j(M) of the nested summing recursion: F_j(M) is the
/// j-deep nested sum of ladder products over staircase indices, with every
/// upper bound tied to the one symbol M, so a single build serves every
/// target level at once. F_0 = 1 and
///   F_j(m) = sum over m' from j to m of lambda_mu(m'-(j-1)) * F_{j-1}(m').
/// Values are held on an integer grid filled by exact prefix sums (one cheap
/// addition per cell); the closed polynomial form of a stage, a polynomial of
/// degree j*(deg lambda_mu + 1), is interpolated from the grid on demand and
/// matches the direct definite-sum construction coefficient for coefficient.
struct NestedSumCache {
  Poly lambda_mu;
  std::vector<std::vector<BigRat>> values;  // values[j][m] = F_j(m)
  std::map<unsigned, Poly> stage_polys;
  unsigned long stage_builds = 0;

  NestedSumCache() : lambda_mu{{BigRat(1)}} { values.push_back({BigRat(1)}); }

  explicit NestedSumCache(Poly lm) : lambda_mu(std::move(lm)) {
    values.push_back({BigRat(1)});
  }

  unsigned depth() const { return static_cast<unsigned>(values.size()) - 1; }
  long grid_max() const { return static_cast<long>(values[0].size()) - 1; }

  void ensure(unsigned j_max, long m_max) {
    m_max = std::max(m_max, grid_max());
    while (static_cast<long>(lm_at_.size()) <= m_max)
      lm_at_.push_back(lambda_mu.eval(BigRat(static_cast<long>(lm_at_.size()))));
    for (unsigned j = 0; j < values.size(); ++j) extend_row(j, m_max);
    for (unsigned j = static_cast<unsigned>(values.size()); j <= j_max; ++j) {
      values.emplace_back();
      extend_row(j, m_max);
      ++stage_builds;
    }
  }

  const BigRat& value(unsigned j, long m) {
    ensure(j, m);
    return values[j][m];
  }

  /// Closed form of stage j, interpolated from grid values.
  const Poly& stage(unsigned j) {
    auto it = stage_polys.find(j);
    if (it != stage_polys.end()) return it->second;
    long deg = static_cast<long>(j) * (lambda_mu.degree() + 1);
    if (deg < 0) deg = 0;
    long base = j == 0 ? 0 : static_cast<long>(j) - 1;
    ensure(j, base + deg);
    std::vector<std::pair<BigRat, BigRat>> pts;
    for (long m = base; m <= base + deg; ++m)
      pts.emplace_back(BigRat(m), values[j][m]);
    return stage_polys.emplace(j, interpolate(pts)).first->second;
  }

 private:
  std::vector<BigRat> lm_at_;  // lambda_mu at integer arguments

  void extend_row(unsigned j, long m_max) {
    auto& row = values[j];
    while (static_cast<long>(row.size()) <= m_max) {
      long m = static_cast<long>(row.size());
      if (j == 0) {
        row.push_back(BigRat(1));
      } else if (m < static_cast<long>(j)) {
        row.push_back(BigRat(0));
      } else {
        row.push_back(row[m - 1] + lm_at_[m - j + 1] * values[j - 1][m]);
      }
    }
  }
};

inline NestedSumCache build_cache(const LadderPolynomial& lp, unsigned j_max) {
  if (j_max < 1) throw ValidationError("cache depth must be at least 1");
  NestedSumCache cache(lp.poly);
  cache.ensure(j_max, 2 * static_cast<long>(j_max));
  return cache;
}

/// Coefficients of (A.adjoint() +/- A)^k on the vacuum, per normalized ladder
/// level delta2. Levels with zero coefficient are omitted.
struct PowerResult {
  long k = 0;
  SignMode sign = SignMode::plus;
  std::map<long, RatRadical> coeffs;
};

namespace detail {

/// Largest admissible level with parity of k, at most cap; nullopt if none.
inline std::optional<long> max_level(long k, long cap) {
  long m = std::min(k, cap);
  if ((m & 1) != (k & 1)) --m;
  if (m < 0) return std::nullopt;
  return m;
}

}  // namespace detail

/// Polynomial-route power coefficients for an unbounded ladder: coefficient
/// at level delta2 is sqrt(prod of the first delta2 ladder products) times
/// F_j((k+delta2)/2) with j=(k-delta2)/2, and (-1)^j in minus mode.
inline PowerResult power_coefficients(const LadderPolynomial& lp, long k, SignMode sign,
                                      NestedSumCache* shared_cache = nullptr) {
  if (k < 0) throw ValidationError("power exponent must be non-negative");
  PowerResult result{k, sign, {}};
  if (k == 0) {
    result.coeffs[0] = RatRadical(1);
    return result;
  }
  std::optional<long> zero_at;
  for (long p = 1; p <= k; ++p)
    if (lp.poly.eval(BigRat(p)) == 0) {
      zero_at = p;
      break;
    }
  if (zero_at) {
    auto top = detail::max_level(k, *zero_at - 1);
    if (!top) return result;
    if ((k + *top) / 2 >= *zero_at)
      throw TowerExhausted("ladder ends at height " + std::to_string(*zero_at - 1) +
                           " but paths for k=" + std::to_string(k) + " climb past it");
  }
  NestedSumCache local(lp.poly);
  NestedSumCache& cache = shared_cache ? *shared_cache : local;
  cache.ensure(static_cast<unsigned>(k / 2), k);
  BigRat radicand(1);
  long next_height = 1;
  for (long d2 = k % 2; d2 <= k; d2 += 2) {
    while (next_height <= d2 && radicand != 0) radicand *= lp.poly.eval(BigRat(next_height++));
    if (radicand == 0) break;
    if (radicand < 0)
      throw ValidationError("ladder polynomial is negative below p=" + std::to_string(d2 + 1));
    long j = (k - d2) / 2;
    long m = (k + d2) / 2;
    BigRat f = cache.value(static_cast<unsigned>(j), m);
    if (f == 0) continue;
    RatRadical c = sqrt_of(radicand) * RatRadical(f);
    if (sign == SignMode::minus && (j & 1)) c = -c;
    result.coeffs[d2] = c;
  }
  return result;
}

/// Exponential-time reference: enumerate every admissible word, evaluate it
/// with the table (ascent into height i contributes sqrt of product i, and
/// likewise descent out of it), and sum. Supports delta1 > 0.
inline RatRadical enumeration_evaluate(const LadderTable& table, const PathSpec& spec,
                                       SignMode sign) {
  spec.validate();
  if (count_paths(spec) == 0) throw EmptySpec("path spec admits no words");
  auto death = table.tower_end();
  RatRadical total;
  for_each_word(spec, [&](const DyckWord& w) {
    RatRadical value(1);
    long h = w.start_height;
    for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
      long idx = (*it == 'U') ? h + 1 : h;
      if (idx > static_cast<long>(table.max_p())) {
        if (death) {
          value = RatRadical();
          break;
        }
        throw TowerExhausted("ladder table has " + std::to_string(table.max_p()) +
                             " entries but a word reaches height " + std::to_string(idx));
      }
      value = value * sqrt_of(table.product(static_cast<unsigned>(idx)));
      if (value.is_zero()) break;
      h += (*it == 'U') ? 1 : -1;
    }
    if (sign == SignMode::minus) {
      long downs = (spec.k + spec.delta1 - spec.delta2) / 2;
      if (downs & 1) value = -value;
    }
    total += value;
  });
  return total;
}

/// Evaluates powers of A.adjoint() +/- A on a fixed vacuum. Ladder data is
/// extracted lazily from the operator, the polynomial route is preferred, and
/// a rational dynamic program over the height staircase covers finite towers.
/// Results are memoized so repeated k queries are free.
class DyckSumEngine {
 public:
  struct Stats {
    unsigned long stage_builds = 0;
    unsigned long power_cache_hits = 0;
    unsigned long power_cache_misses = 0;
    unsigned long table_dp_runs = 0;
  };

  DyckSumEngine(BosonExpr A, FockState vac)
      : A_(std::move(A)), raise_(A_.adjoint()), vac_(std::move(vac)) {
    if (!check_vacuum(A_, vac_))
      throw NotAVacuum("state " + vac_.to_string() + " is not annihilated by the operator");
    ladder_.push_back(unit_vector(vac_));
  }

  const BosonExpr& expr() const { return A_; }
  const FockState& vacuum() const { return vac_; }
  const LadderTable& table() const { return table_; }

  NestedSumCache& cache() {
    if (!cache_) {
      ensure_polynomial();
      if (!poly_) rethrow_poly_failure();
      cache_.emplace(poly_->poly);
    }
    return *cache_;
  }

  Stats stats() const {
    Stats s = stats_;
    s.stage_builds = cache_ ? cache_->stage_builds : 0;
    return s;
  }

  /// Validated polynomial view of the ladder products, if one exists.
  const std::optional<LadderPolynomial>& ladder_polynomial() {
    ensure_polynomial();
    return poly_;
  }

  PowerResult power_coefficients(long k, SignMode sign,
                                 EvalMode mode = EvalMode::automatic) {
    if (k < 0) throw ValidationError("power exponent must be non-negative");
    if (mode == EvalMode::automatic) {
      auto it = memo_.find({k, sign});
      if (it != memo_.end()) {
        ++stats_.power_cache_hits;
        return it->second;
      }
      ++stats_.power_cache_misses;
    }
    PowerResult result{k, sign, {}};
    if (k == 0) {
      result.coeffs[0] = RatRadical(1);
    } else {
      ensure_polynomial();
      auto death = scan_tower_end(k);
      bool heights_pass_death = false;
      if (death) {
        auto top = detail::max_level(k, *death - 1);
        heights_pass_death = top && (k + *top) / 2 >= *death;
        if (!top) {
          if (mode == EvalMode::automatic) memo_.emplace(std::make_pair(k, sign), result);
          return result;
        }
      }
      bool use_table = mode == EvalMode::table ||
                       (mode == EvalMode::automatic && (!poly_ || heights_pass_death));
      if (mode == EvalMode::polynomial) {
        if (heights_pass_death)
          throw TowerExhausted("ladder ends at height " + std::to_string(*death - 1) +
                               " but paths for k=" + std::to_string(k) +
                               " climb past it; use table mode");
        if (!poly_) rethrow_poly_failure();
      }
      if (use_table)
        table_route(result, death);
      else
        polynomial_route(result);
    }
    if (mode == EvalMode::automatic) memo_.emplace(std::make_pair(k, sign), result);
    return result;
  }

  /// Word-by-word reference evaluation; the only route that supports
  /// delta1 > 0 starts.
  RatRadical enumeration_evaluate(const PathSpec& spec, SignMode sign) {
    spec.validate();
    long peak = (spec.k + spec.delta1 + spec.delta2) / 2;
    extend_table(peak);
    return dyckhike::enumeration_evaluate(table_, spec, sign);
  }

 private:
  BosonExpr A_;
  BosonExpr raise_;
  FockState vac_;
  std::vector<FockVector> ladder_;  // psi~(0) .. psi~(built)
  bool tower_dead_ = false;
  LadderTable table_;
  bool poly_attempted_ = false;
  std::optional<LadderPolynomial> poly_;
  bool poly_failed_short_ = false;
  std::optional<NestedSumCache> cache_;
  std::map<std::pair<long, SignMode>, PowerResult> memo_;
  Stats stats_;

  /// Grow the ladder product table to p entries unless the tower ends first.
  void extend_table(long p) {
    while (static_cast<long>(table_.products.size()) < p && !tower_dead_) {
      FockVector up = apply_expr(raise_, ladder_.back());
      if (up.is_zero()) {
        table_.products.push_back(BigRat(0));
        tower_dead_ = true;
        break;
      }
      FockVector down = apply_expr(A_, up);
      auto ratio = detail::proportionality_ratio(down, ladder_.back());
      if (!ratio || !ratio->is_rational())
        throw NotProportional("raising then lowering is not a scalar at p=" +
                              std::to_string(table_.products.size() + 1));
      table_.products.push_back(ratio->as_rational());
      ladder_.push_back(std::move(up));
    }
  }

  void ensure_polynomial() {
    if (poly_attempted_) return;
    poly_attempted_ = true;
    unsigned d = A_.degree();
    extend_table(static_cast<long>(d) + 4);
    try {
      poly_ = lambda_mu_polynomial(table_, d);
    } catch (const InsufficientTower&) {
      poly_failed_short_ = true;
    } catch (const InterpolationMismatch&) {
      poly_failed_short_ = false;
    }
  }

  [[noreturn]] void rethrow_poly_failure() const {
    if (poly_failed_short_)
      throw InsufficientTower("tower ends before a ladder polynomial can be fitted");
    throw InterpolationMismatch("ladder products do not fit a polynomial of the operator degree");
  }

  /// First ladder height whose product vanishes, looking at real table
  /// entries first and then at integer evaluations of the fitted polynomial.
  std::optional<long> scan_tower_end(long k) {
    if (auto z = table_.tower_end()) return static_cast<long>(*z);
    if (!poly_) {
      extend_table(k);
      if (auto z = table_.tower_end()) return static_cast<long>(*z);
      return std::nullopt;
    }
    for (long p = static_cast<long>(table_.max_p()) + 1; p <= k; ++p)
      if (poly_->poly.eval(BigRat(p)) == 0) {
        extend_table(p);  // record the real products up to the death point
        if (auto z = table_.tower_end()) return static_cast<long>(*z);
        return p;
      }
    return std::nullopt;
  }

  BigRat product_at(long p) {
    if (p <= static_cast<long>(table_.max_p())) return table_.product(static_cast<unsigned>(p));
    return poly_->poly.eval(BigRat(p));
  }

  void polynomial_route(PowerResult& result) {
    long k = result.k;
    if (!cache_) cache_.emplace(poly_->poly);
    cache_->ensure(static_cast<unsigned>(k / 2), k);
    BigRat radicand(1);
    long next_height = 1;
    for (long d2 = k % 2; d2 <= k; d2 += 2) {
      while (next_height <= d2 && radicand != 0) radicand *= product_at(next_height++);
      if (radicand == 0) break;
      long j = (k - d2) / 2;
      BigRat f = cache_->value(static_cast<unsigned>(j), (k + d2) / 2);
      if (f == 0) continue;
      RatRadical c = sqrt_of(radicand) * RatRadical(f);
      if (result.sign == SignMode::minus && (j & 1)) c = -c;
      result.coeffs[d2] = c;
    }
  }

  /// Exact dynamic program over heights: ascents carry weight 1, a descent
  /// out of height h carries the h-th ladder product. Paths that would touch
  /// a vanished height are dropped; they contribute nothing to live levels.
  void table_route(PowerResult& result, std::optional<long> death) {
    long k = result.k;
    ++stats_.table_dp_runs;
    long cap = death ? *death - 1 : k;
    extend_table(std::min(k, death ? *death : k));
    std::vector<BigRat> dp(static_cast<std::size_t>(cap) + 1, BigRat(0));
    dp[0] = 1;
    for (long t = 1; t <= k; ++t) {
      std::vector<BigRat> next(dp.size(), BigRat(0));
      long top = std::min<long>(t, cap);
      for (long h = 0; h <= top; ++h) {
        if (h > 0 && dp[h - 1] != 0) next[h] += dp[h - 1];
        if (h + 1 <= cap && dp[h + 1] != 0)
          next[h] += dp[h + 1] * table_.product(static_cast<unsigned>(h + 1));
      }
      dp = std::move(next);
    }
    BigRat radicand(1);
    long next_height = 1;
    for (long d2 = k % 2; d2 <= cap; d2 += 2) {
      while (next_height <= d2 && radicand != 0)
        radicand *= table_.product(static_cast<unsigned>(next_height++));
      if (radicand == 0) break;
      if (dp[d2] == 0) continue;
      RatRadical c = sqrt_of(radicand) * RatRadical(dp[d2]);
      long j = (k - d2) / 2;
      if (result.sign == SignMode::minus && (j & 1)) c = -c;
      result.coeffs[d2] = c;
    }
  }
};

}  // namespace dyckhike
