#pragma once

#include <functional>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace dyckhike {

/// Lattice paths with steps U=(1,1), D=(1,-1), k steps from height delta1
/// to height delta2, never dropping below the x axis.
struct PathSpec {
  long k = 0;
  long delta1 = 0;
  long delta2 = 0;

  void validate() const {
    if (k < 0 || delta1 < 0 || delta2 < 0)
      throw ValidationError("path spec fields must be non-negative");
  }

  bool parity_ok() const { return ((k + delta1 + delta2) & 1) == 0; }
};

/// Step string in display order; the rightmost character is the first step
/// taken (words are read right-to-left).
struct DyckWord {
  std::string steps;
  long start_height = 0;

  long length() const { return static_cast<long>(steps.size()); }

  /// Heights after each applied step, in application order.
  std::vector<long> heights() const {
    std::vector<long> h;
    h.reserve(steps.size());
    long cur = start_height;
    for (std::size_t i = steps.size(); i-- > 0;) {
      cur += steps[i] == 'U' ? 1 : -1;
      h.push_back(cur);
    }
    return h;
  }

  long end_height() const {
    long cur = start_height;
    for (char c : steps) cur += c == 'U' ? 1 : -1;
    return cur;
  }

  /// True iff the running height never drops below zero.
  bool is_valid() const {
    long cur = start_height;
    for (std::size_t i = steps.size(); i-- > 0;) {
      cur += steps[i] == 'U' ? 1 : -1;
      if (cur < 0) return false;
    }
    return true;
  }

  bool operator==(const DyckWord& o) const = default;
};

inline bool is_valid(const DyckWord& w) { return w.is_valid(); }

/// Ballot-problem count of D(k, delta1, delta2); zero for parity-violating
/// or unreachable specs.
inline BigInt count_paths(const PathSpec& spec) {
  spec.validate();
  if (!spec.parity_ok()) return 0;
  long a = (spec.k + spec.delta2 - spec.delta1) / 2;
  long b = (spec.k - spec.delta2 - spec.delta1 - 2) / 2;
  return binomial(spec.k, a) - binomial(spec.k, b);
}

inline BigInt catalan(unsigned long m) {
  return binomial(static_cast<long>(2 * m), static_cast<long>(m)) / BigInt(m + 1);
}

/// The pointwise-highest path: all U steps first (rightmost in the word).
inline DyckWord highest_word(const PathSpec& spec) {
  spec.validate();
  if (count_paths(spec) == 0) throw EmptySpec("path spec admits no words");
  long d = (spec.k + spec.delta1 - spec.delta2) / 2;
  long u = (spec.k - spec.delta1 + spec.delta2) / 2;
  return DyckWord{std::string(d, 'D') + std::string(u, 'U'), spec.delta1};
}

/// The pointwise-lowest path: descend as early as possible, hug the axis,
/// ascend as late as possible.
inline DyckWord lowest_word(const PathSpec& spec) {
  spec.validate();
  if (count_paths(spec) == 0) throw EmptySpec("path spec admits no words");
  if (spec.k >= spec.delta1 + spec.delta2) {
    long pairs = (spec.k - spec.delta1 - spec.delta2) / 2;
    std::string w = std::string(spec.delta2, 'U');
    for (long i = 0; i < pairs; ++i) w += "DU";
    w += std::string(spec.delta1, 'D');
    return DyckWord{std::move(w), spec.delta1};
  }
  // too high to reach the axis: descend, turn, ascend
  long d = (spec.k + spec.delta1 - spec.delta2) / 2;
  long u = (spec.k - spec.delta1 + spec.delta2) / 2;
  return DyckWord{std::string(u, 'U') + std::string(d, 'D'), spec.delta1};
}

/// Backtracking enumeration over valid prefixes, in application order;
/// deterministic (D is explored before U at every branch).
inline void for_each_word(const PathSpec& spec,
                          const std::function<void(const DyckWord&)>& fn) {
  spec.validate();
  if (!spec.parity_ok()) return;
  std::string app;  // steps in application order
  app.reserve(spec.k);
  auto feasible = [&](long h, long remaining) {
    if (h < 0) return false;
    long gap = spec.delta2 - h;
    if (gap < 0) gap = -gap;
    return gap <= remaining && (((remaining - gap) & 1) == 0);
  };
  std::function<void(long, long)> rec = [&](long h, long remaining) {
    if (remaining == 0) {
      DyckWord w;
      w.start_height = spec.delta1;
      w.steps.assign(app.rbegin(), app.rend());
      fn(w);
      return;
    }
    if (feasible(h - 1, remaining - 1)) {
      app.push_back('D');
      rec(h - 1, remaining - 1);
      app.pop_back();
    }
    if (feasible(h + 1, remaining - 1)) {
      app.push_back('U');
      rec(h + 1, remaining - 1);
      app.pop_back();
    }
  };
  if (feasible(spec.delta1, spec.k)) rec(spec.delta1, spec.k);
}

inline std::vector<DyckWord> enumerate_words(const PathSpec& spec) {
  std::vector<DyckWord> out;
  for_each_word(spec, [&](const DyckWord& w) { out.push_back(w); });
  return out;
}

}  // namespace dyckhike
