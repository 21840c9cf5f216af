#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "dyckhike/dyck.hpp"
#include "dyckhike/errors.hpp"

using namespace dyckhike;

TEST_CASE("pinned path counts", "[dyck]") {
  CHECK(count_paths({6, 0, 2}) == 9);
  CHECK(count_paths({8, 0, 0}) == 14);
  CHECK(count_paths({8, 8, 8}) == 70);
  CHECK(count_paths({4, 0, 2}) == 3);
  CHECK(count_paths({0, 0, 0}) == 1);
  CHECK(count_paths({5, 0, 0}) == 0);   // parity
  CHECK(count_paths({2, 0, 4}) == 0);   // unreachable
  CHECK(count_paths({3, 1, 0}) == 2);
}

TEST_CASE("axis-to-axis counts are Catalan numbers", "[dyck]") {
  // independent route: the convolution recurrence C_{m+1} = sum C_i C_{m-i}
  std::vector<BigInt> c{1};
  for (unsigned long m = 0; m < 200; ++m) {
    BigInt next(0);
    for (unsigned long i = 0; i <= m; ++i) next += c[i] * c[m - i];
    c.push_back(next);
  }
  CHECK(catalan(200) == c[200]);
  CHECK(count_paths({400, 0, 0}) == c[200]);
  for (unsigned long m = 0; m <= 12; ++m)
    CHECK(count_paths({static_cast<long>(2 * m), 0, 0}) == c[m]);
}

TEST_CASE("row sums and closed forms", "[dyck]") {
  for (long k = 0; k <= 30; ++k) {
    BigInt total(0);
    for (long d2 = 0; d2 <= k; ++d2) total += count_paths({k, 0, d2});
    CHECK(total == binomial(k, k / 2));
  }
  // starting high enough that the axis is never a constraint
  for (long k = 1; k <= 12; ++k)
    for (long d2 = 0; d2 <= k; ++d2)
      CHECK(count_paths({k, k - d2, d2}) == binomial(k, d2));
}

TEST_CASE("validation errors", "[dyck]") {
  CHECK_THROWS_AS(count_paths({-1, 0, 0}), ValidationError);
  CHECK_THROWS_AS(count_paths({4, -2, 0}), ValidationError);
  CHECK_THROWS_AS(highest_word({3, 0, 0}), EmptySpec);
  CHECK_THROWS_AS(lowest_word({2, 0, 4}), EmptySpec);
}

TEST_CASE("word mechanics", "[dyck]") {
  DyckWord w{"UUDU", 0};
  CHECK(w.heights() == std::vector<long>{1, 0, 1, 2});
  CHECK(w.end_height() == 2);
  CHECK(w.is_valid());
  CHECK_FALSE(DyckWord{"UDDU", 0}.is_valid());
  CHECK(DyckWord{"UDDU", 1}.is_valid());
}

TEST_CASE("extreme words", "[dyck]") {
  CHECK(highest_word({14, 0, 0}).steps == "DDDDDDDUUUUUUU");
  CHECK(lowest_word({4, 0, 2}).steps == "UUDU");
  DyckWord low = lowest_word({3, 1, 0});
  CHECK(low.steps == "DUD");
  auto h = low.heights();
  CHECK(*std::min_element(h.begin(), h.end()) == 0);
  // too high to touch the axis: single turn
  CHECK(lowest_word({2, 3, 5}).steps == "UU");
  CHECK(lowest_word({2, 3, 5}).end_height() == 5);
  // every enumerated word lies between the extremes pointwise
  PathSpec spec{8, 0, 2};
  auto top = highest_word(spec).heights();
  auto bot = lowest_word(spec).heights();
  for (auto& w2 : enumerate_words(spec)) {
    auto mid = w2.heights();
    for (std::size_t i = 0; i < mid.size(); ++i) {
      CHECK(mid[i] <= top[i]);
      CHECK(mid[i] >= bot[i]);
    }
  }
}

TEST_CASE("enumeration matches counts and is well formed", "[dyck]") {
  for (long k = 0; k <= 10; ++k)
    for (long d1 = 0; d1 <= 3; ++d1)
      for (long d2 = 0; d2 <= k + d1; ++d2) {
        PathSpec spec{k, d1, d2};
        auto words = enumerate_words(spec);
        CHECK(BigInt(static_cast<long>(words.size())) == count_paths(spec));
        std::set<std::string> seen;
        for (auto& w : words) {
          CHECK(w.length() == k);
          CHECK(w.start_height == d1);
          CHECK(w.end_height() == d2);
          CHECK(w.is_valid());
          seen.insert(w.steps);
        }
        CHECK(seen.size() == words.size());
      }
}

TEST_CASE("peak-to-valley swaps stay inside the set", "[dyck]") {
  PathSpec spec{8, 0, 2};
  auto words = enumerate_words(spec);
  std::set<std::string> all;
  for (auto& w : words) all.insert(w.steps);
  for (auto& w : words) {
    // application order is right to left
    std::string app(w.steps.rbegin(), w.steps.rend());
    long h = 0;
    for (std::size_t i = 0; i + 1 < app.size(); ++i) {
      if (app[i] == 'U' && app[i + 1] == 'D' && h >= 1) {
        std::string flipped = app;
        flipped[i] = 'D';
        flipped[i + 1] = 'U';
        std::string display(flipped.rbegin(), flipped.rend());
        CHECK(all.count(display) == 1);
      }
      h += app[i] == 'U' ? 1 : -1;
    }
  }
}
