#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "dyckhike/evolution.hpp"
#include "dyckhike/oracle.hpp"
#include "dyckhike/parser.hpp"

using namespace dyckhike;

TEST_CASE("pair-mode series through second order", "[evolution]") {
  SeriesResult s = build_series(parse_expr("a[0]*a[1]"), parse_vacuum("|0,0>"), 2,
                                SignMode::minus);
  REQUIRE(s.assembled.count(0) == 1);
  REQUIRE(s.assembled.count(1) == 1);
  REQUIRE(s.assembled.count(2) == 1);
  CHECK(s.assembled.at(0) ==
        std::vector<RatRadical>{RatRadical(1), RatRadical(), RatRadical(make_rat(-1, 2))});
  CHECK(s.assembled.at(1) ==
        std::vector<RatRadical>{RatRadical(), RatRadical(1), RatRadical()});
  CHECK(s.assembled.at(2) ==
        std::vector<RatRadical>{RatRadical(), RatRadical(), RatRadical(1)});
}

TEST_CASE("order zero is the identity", "[evolution]") {
  SeriesResult s = build_series(parse_expr("a[0]^3"), parse_vacuum("|0>"), 0,
                                SignMode::minus);
  NumericAmplitudes n = evaluate_at(s, 0.7);
  CHECK(n.amplitudes.size() == 1);
  CHECK(n.amplitudes.at(0) == 1.0);
  CHECK(n.vev == 1.0);
}

TEST_CASE("evaluation at zero coupling", "[evolution]") {
  SeriesResult s = build_series(parse_expr("a[0]^3"), parse_vacuum("|0>"), 8,
                                SignMode::minus);
  NumericAmplitudes n = evaluate_at(s, 0.0);
  CHECK(n.vev == 1.0);
  for (auto& [d2, a] : n.amplitudes)
    if (d2 != 0) CHECK(a == 0.0);
}

TEST_CASE("powers are reused across truncation orders", "[evolution]") {
  DyckSumEngine e(parse_expr("a[0]^3"), parse_vacuum("|0>"));
  build_series(e, 10, SignMode::minus);
  auto before = e.stats();
  build_series(e, 12, SignMode::minus);
  auto after = e.stats();
  CHECK(after.power_cache_hits >= before.power_cache_hits + 11);
  CHECK(after.power_cache_misses == before.power_cache_misses + 2);
}

TEST_CASE("vacuum series alternates and matches brute force", "[evolution]") {
  BosonExpr A = parse_expr("a[0]^3");
  FockState vac = parse_vacuum("|0>");
  SeriesResult s = build_series(A, vac, 8, SignMode::minus);
  const auto& vac_series = s.assembled.at(0);
  FockVector ground = unit_vector(vac);
  for (long k = 0; k <= 8; ++k) {
    RatRadical direct = ground.inner(oracle_power(A, vac, k, SignMode::minus)) *
                        RatRadical(make_rat(BigInt(1), factorial(static_cast<unsigned long>(k))));
    CHECK(vac_series[k] == direct);
  }
  CHECK(vac_series[2] == RatRadical(BigRat(-3)));
  CHECK(vac_series[4].as_rational() > 0);
  CHECK(vac_series[6].as_rational() < 0);
}

TEST_CASE("vacuum even coefficients are the frozen series start", "[evolution]") {
  SeriesResult s = build_series(parse_expr("a[0]^3"), parse_vacuum("|0>"), 8,
                                SignMode::minus);
  std::vector<BigRat> x = vacuum_even_coefficients(s);
  REQUIRE(x.size() == 5);
  CHECK(x[0] == BigRat(1));
  CHECK(x[1] == BigRat(-3));
  CHECK(x[2] == make_rat(63, 2));
  CHECK(x[3] == make_rat(-6363, 10));
}

TEST_CASE("pair-mode amplitudes track the closed form", "[evolution]") {
  SeriesResult s = build_series(parse_expr("a[0]*a[1]"), parse_vacuum("|0,0>"), 80,
                                SignMode::minus);
  NumericAmplitudes n = evaluate_at(s, 0.5, 128);
  for (long level = 0; level <= 10; ++level) {
    double ref = squeeze_reference(level, 0.5);
    CHECK(std::abs(n.amplitudes.at(level) - ref) <= 1e-10 * std::abs(ref));
  }
}

TEST_CASE("unitary evolution preserves the norm", "[evolution]") {
  SeriesResult s = build_series(parse_expr("a[0]*a[1]"), parse_vacuum("|0,0>"), 60,
                                SignMode::minus);
  NumericAmplitudes n = evaluate_at(s, 0.5, 128);
  double norm2 = 0;
  for (auto& [d2, a] : n.amplitudes) norm2 += a * a;
  CHECK(std::abs(norm2 - 1.0) < 1e-8);
}

TEST_CASE("partial sums report the last three orders", "[evolution]") {
  SeriesResult s = build_series(parse_expr("a[0]"), parse_vacuum("|0>"), 12,
                                SignMode::minus);
  NumericAmplitudes n = evaluate_at(s, 0.3);
  REQUIRE(n.vev_partials.size() == 3);
  CHECK(n.vev_partials[0].first == 10);
  CHECK(n.vev_partials[2].first == 12);
  CHECK(std::abs(n.vev_partials[2].second - n.vev) < 1e-15);
  CHECK(std::abs(n.vev - std::exp(-0.09 / 2)) < 1e-9);
}

TEST_CASE("even extraction guards its assumptions", "[evolution]") {
  // parity clears every odd vacuum order, whatever the sign
  SeriesResult s = build_series(parse_expr("a[0]"), parse_vacuum("|0>"), 5,
                                SignMode::plus);
  CHECK(vacuum_even_coefficients(s).size() == 3);
  SeriesResult forged;
  forged.K = 2;
  forged.assembled[0] = {RatRadical(1), RatRadical(1), RatRadical(make_rat(-1, 2))};
  CHECK_THROWS_AS(vacuum_even_coefficients(forged), ValidationError);
  CHECK_THROWS_AS(vacuum_even_coefficients(SeriesResult{}), ValidationError);
}
