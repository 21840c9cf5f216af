// Command-line front end: parses boson expressions, dispatches to the
// library, and serializes results as json, csv, or plain text.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dyckhike/dyckhike.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace dyckhike;

namespace {

json radical_json(const RatRadical& v) {
  return json{{"rational", to_string(v.q)},
              {"radicand", to_string(v.n)},
              {"float", v.to_double()}};
}

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string csv_radical(const RatRadical& v) {
  return to_string(v.q) + "," + to_string(v.n) + "," + fmt_double(v.to_double());
}

SignMode sign_from(const std::string& s) {
  return s == "minus" ? SignMode::minus : SignMode::plus;
}

struct Config {
  std::string format = "plain";
  std::string expr_text;
  std::string vac_text;
  std::string sign = "plus";
  std::string method = "auto";
  long k = 0;
  long K = 0;
  long d1 = 0;
  long d2 = -1;
  long p_max = 10;
  bool want_poly = false;
  long L = 0;
  long M = -1;
  double r = -1;
  int precision = 256;
  bool plot_data = false;
  double r_min = 0;
  double r_max = 1;
  long steps = 50;
  bool coeffs = false;
  bool verify = false;
  unsigned long max_total = 1000;
  unsigned long max_per_mode = 1000;

  bool is_json() const { return format == "json"; }
  bool is_csv() const { return format == "csv"; }

  void check_precision() const {
    if (precision < 53) throw ValidationError("precision must be at least 53 bits");
  }

  BosonExpr expr() const {
    BosonExpr e = parse_expr(expr_text);
    for (auto& warning : validate_disjoint(e))
      std::cerr << "warning: " << warning << "\n";
    return e;
  }

  FockState vacuum() const { return parse_vacuum(vac_text); }

  json base(const std::string& command) const {
    return json{{"schema_version", 1}, {"command", command}};
  }

  void emit(const json& j) const { std::cout << j.dump(2) << "\n"; }
};

void cmd_count_paths(const Config& cfg) {
  PathSpec spec{cfg.k, cfg.d1, std::max<long>(cfg.d2, 0)};
  BigInt count = count_paths(spec);
  if (cfg.is_json()) {
    json j = cfg.base("count-paths");
    j["k"] = spec.k;
    j["delta1"] = spec.delta1;
    j["delta2"] = spec.delta2;
    j["count"] = to_string(count);
    cfg.emit(j);
  } else if (cfg.is_csv()) {
    std::cout << "k,delta1,delta2,count\n"
              << spec.k << "," << spec.delta1 << "," << spec.delta2 << "," << to_string(count)
              << "\n";
  } else {
    std::cout << to_string(count) << "\n";
  }
}

void cmd_enumerate_paths(const Config& cfg) {
  PathSpec spec{cfg.k, cfg.d1, std::max<long>(cfg.d2, 0)};
  auto words = enumerate_words(spec);
  if (cfg.is_json()) {
    json j = cfg.base("enumerate-paths");
    j["k"] = spec.k;
    j["delta1"] = spec.delta1;
    j["delta2"] = spec.delta2;
    j["count"] = to_string(count_paths(spec));
    j["highest"] = highest_word(spec).steps;
    j["lowest"] = lowest_word(spec).steps;
    json arr = json::array();
    for (auto& w : words) arr.push_back(w.steps);
    j["words"] = arr;
    cfg.emit(j);
  } else if (cfg.is_csv()) {
    std::cout << "word\n";
    for (auto& w : words) std::cout << w.steps << "\n";
  } else {
    for (auto& w : words) std::cout << w.steps << "\n";
  }
}

void cmd_lambda_mu(const Config& cfg) {
  if (cfg.p_max < 1) throw ValidationError("p-max must be at least 1");
  BosonExpr A = cfg.expr();
  FockState vac = cfg.vacuum();
  LadderTable table = lambda_mu_table(A, vac, static_cast<unsigned>(cfg.p_max));
  std::optional<LadderPolynomial> lp;
  if (cfg.want_poly) lp = lambda_mu_polynomial(table, A.degree());
  if (cfg.is_json()) {
    json j = cfg.base("lambda-mu");
    j["expr"] = to_text(A);
    j["vacuum"] = vac.to_string();
    j["p_max"] = cfg.p_max;
    json prods = json::array();
    for (auto& q : table.products) prods.push_back(to_string(q));
    j["products"] = prods;
    auto end = table.tower_end();
    j["tower_end"] = end ? json(*end) : json(nullptr);
    if (lp) {
      json coeffs = json::array();
      for (auto& c : lp->poly.coeffs) coeffs.push_back(to_string(c));
      j["polynomial"] = json{{"coefficients", coeffs},
                             {"validated_up_to", lp->validated_up_to}};
    }
    cfg.emit(j);
  } else if (cfg.is_csv()) {
    std::cout << "p,product\n";
    for (unsigned p = 1; p <= table.max_p(); ++p)
      std::cout << p << "," << to_string(table.product(p)) << "\n";
  } else {
    for (unsigned p = 1; p <= table.max_p(); ++p)
      std::cout << p << " " << to_string(table.product(p)) << "\n";
  }
}

void cmd_power(const Config& cfg) {
  if (cfg.k < 0) throw ValidationError("k must be non-negative");
  if (cfg.d1 < 0) throw ValidationError("d1 must be non-negative");
  if (cfg.d1 > 0 && cfg.method != "enumeration")
    throw ValidationError("d1 > 0 is supported by the enumeration method only");
  BosonExpr A = cfg.expr();
  FockState vac = cfg.vacuum();
  DyckSumEngine engine(A, vac);
  SignMode sign = sign_from(cfg.sign);

  std::map<long, RatRadical> coeffs;
  if (cfg.method == "enumeration") {
    long lo = (cfg.k + cfg.d1) % 2;
    long hi = cfg.k + cfg.d1;
    for (long d2 = lo; d2 <= hi; d2 += 2) {
      if (cfg.d2 >= 0 && d2 != cfg.d2) continue;
      PathSpec spec{cfg.k, cfg.d1, d2};
      if (count_paths(spec) == 0) continue;
      RatRadical v = engine.enumeration_evaluate(spec, sign);
      if (!v.is_zero()) coeffs[d2] = v;
    }
  } else {
    EvalMode mode = cfg.method == "recursive" ? EvalMode::polynomial : EvalMode::automatic;
    PowerResult result = engine.power_coefficients(cfg.k, sign, mode);
    if (cfg.d2 >= 0) {
      auto it = result.coeffs.find(cfg.d2);
      if (it != result.coeffs.end()) coeffs[it->first] = it->second;
    } else {
      coeffs = std::move(result.coeffs);
    }
  }

  if (cfg.is_json()) {
    json j = cfg.base("power");
    j["expr"] = to_text(A);
    j["vacuum"] = vac.to_string();
    j["k"] = cfg.k;
    if (cfg.d1 > 0) j["delta1"] = cfg.d1;
    j["sign"] = cfg.sign;
    j["method"] = cfg.method;
    json arr = json::array();
    for (auto& [d2, v] : coeffs) {
      json e = radical_json(v);
      e["delta2"] = d2;
      arr.push_back(e);
    }
    j["coefficients"] = arr;
    cfg.emit(j);
  } else if (cfg.is_csv()) {
    std::cout << "delta2,rational,radicand,float\n";
    for (auto& [d2, v] : coeffs) std::cout << d2 << "," << csv_radical(v) << "\n";
  } else {
    for (auto& [d2, v] : coeffs)
      std::cout << "delta2=" << d2 << ": " << v.to_string() << "\n";
  }
}

void cmd_evolve(const Config& cfg) {
  if (cfg.K < 0) throw ValidationError("K must be non-negative");
  if (cfg.r < 0) throw ValidationError("r must be non-negative");
  cfg.check_precision();
  BosonExpr A = cfg.expr();
  FockState vac = cfg.vacuum();
  SeriesResult series = build_series(A, vac, cfg.K, sign_from(cfg.sign));
  NumericAmplitudes num = evaluate_at(series, cfg.r, cfg.precision);
  if (cfg.is_json()) {
    json j = cfg.base("evolve");
    j["expr"] = to_text(A);
    j["vacuum"] = vac.to_string();
    j["K"] = cfg.K;
    j["r"] = cfg.r;
    j["sign"] = cfg.sign;
    j["precision_bits"] = num.precision_bits;
    json arr = json::array();
    for (auto& [d2, a] : num.amplitudes) {
      if (cfg.d2 >= 0 && d2 != cfg.d2) continue;
      arr.push_back(json{{"delta2", d2}, {"amplitude", a}});
    }
    j["amplitudes"] = arr;
    j["vev"] = num.vev;
    json partials = json::array();
    for (auto& [order, v] : num.vev_partials)
      partials.push_back(json{{"order", order}, {"value", v}});
    j["vev_partials"] = partials;
    cfg.emit(j);
  } else if (cfg.is_csv()) {
    std::cout << "delta2,amplitude\n";
    for (auto& [d2, a] : num.amplitudes) {
      if (cfg.d2 >= 0 && d2 != cfg.d2) continue;
      std::cout << d2 << "," << a << "\n";
    }
  } else {
    for (auto& [d2, a] : num.amplitudes) {
      if (cfg.d2 >= 0 && d2 != cfg.d2) continue;
      std::cout << "delta2=" << d2 << ": " << a << "\n";
    }
  }
}

void cmd_vev(const Config& cfg) {
  if (cfg.K < 0) throw ValidationError("K must be non-negative");
  cfg.check_precision();
  BosonExpr A = cfg.expr();
  FockState vac = cfg.vacuum();
  SeriesResult series = build_series(A, vac, cfg.K, sign_from(cfg.sign));
  if (cfg.plot_data) {
    if (cfg.steps < 1) throw ValidationError("steps must be at least 1");
    if (cfg.r_max < cfg.r_min) throw ValidationError("r-max must be at least r-min");
    std::vector<std::pair<double, double>> points;
    for (long i = 0; i <= cfg.steps; ++i) {
      double r = cfg.r_min + (cfg.r_max - cfg.r_min) * static_cast<double>(i) /
                                 static_cast<double>(cfg.steps);
      points.emplace_back(r, evaluate_at(series, r, cfg.precision).vev);
    }
    if (cfg.is_json()) {
      json j = cfg.base("vev");
      j["expr"] = to_text(A);
      j["vacuum"] = vac.to_string();
      j["K"] = cfg.K;
      j["sign"] = cfg.sign;
      json arr = json::array();
      for (auto& [r, v] : points) arr.push_back(json{{"r", r}, {"value", v}});
      j["points"] = arr;
      cfg.emit(j);
    } else {
      if (cfg.is_csv()) std::cout << "r,value\n";
      for (auto& [r, v] : points)
        std::cout << r << (cfg.is_csv() ? "," : " ") << v << "\n";
    }
    return;
  }
  if (cfg.r < 0) throw ValidationError("r must be non-negative");
  NumericAmplitudes num = evaluate_at(series, cfg.r, cfg.precision);
  if (cfg.is_json()) {
    json j = cfg.base("vev");
    j["expr"] = to_text(A);
    j["vacuum"] = vac.to_string();
    j["K"] = cfg.K;
    j["r"] = cfg.r;
    j["sign"] = cfg.sign;
    j["vev"] = num.vev;
    json partials = json::array();
    for (auto& [order, v] : num.vev_partials)
      partials.push_back(json{{"order", order}, {"value", v}});
    j["partials"] = partials;
    cfg.emit(j);
  } else if (cfg.is_csv()) {
    std::cout << "r,vev\n" << cfg.r << "," << num.vev << "\n";
  } else {
    std::cout << num.vev << "\n";
  }
}

void cmd_pade(const Config& cfg) {
  if (cfg.L < 0) throw ValidationError("L must be non-negative");
  cfg.check_precision();
  long M = cfg.M < 0 ? cfg.L : cfg.M;
  BosonExpr A = cfg.expr();
  FockState vac = cfg.vacuum();
  // The vacuum series is even in r, so the approximant lives in x = r^2;
  // L+M+1 even-order coefficients call for truncation order 2(L+M).
  long K = 2 * (cfg.L + M);
  SeriesResult series = build_series(A, vac, K, sign_from(cfg.sign));
  std::vector<BigRat> xcoeffs = vacuum_even_coefficients(series);
  PadeApproximant p = build_pade(xcoeffs, cfg.L, M);

  json j = cfg.base("pade");
  j["expr"] = to_text(A);
  j["vacuum"] = vac.to_string();
  j["L"] = cfg.L;
  j["M"] = M;
  j["K"] = K;
  j["variable"] = "x=r^2";
  if (cfg.verify) j["order_condition"] = order_condition_holds(p, xcoeffs) ? "exact" : "violated";
  if (cfg.coeffs) {
    json num = json::array(), den = json::array();
    for (auto& c : p.numerator.coeffs) num.push_back(to_string(c));
    for (auto& c : p.denominator.coeffs) den.push_back(to_string(c));
    j["numerator"] = num;
    j["denominator"] = den;
  }

  std::vector<std::pair<double, double>> points;
  if (cfg.plot_data) {
    if (cfg.steps < 1) throw ValidationError("steps must be at least 1");
    if (cfg.r_max < cfg.r_min) throw ValidationError("r-max must be at least r-min");
    for (long i = 0; i <= cfg.steps; ++i) {
      double r = cfg.r_min + (cfg.r_max - cfg.r_min) * static_cast<double>(i) /
                                 static_cast<double>(cfg.steps);
      points.emplace_back(r, eval_pade(p, r * r, cfg.precision));
    }
    json arr = json::array();
    for (auto& [r, v] : points) arr.push_back(json{{"r", r}, {"value", v}});
    j["points"] = arr;
  } else if (cfg.r >= 0) {
    j["r"] = cfg.r;
    j["value"] = eval_pade(p, cfg.r * cfg.r, cfg.precision);
  }

  if (cfg.is_json()) {
    cfg.emit(j);
  } else if (cfg.is_csv()) {
    std::cout << "r,value\n";
    if (cfg.plot_data)
      for (auto& [r, v] : points) std::cout << r << "," << v << "\n";
    else if (cfg.r >= 0)
      std::cout << cfg.r << "," << j["value"].get<double>() << "\n";
  } else {
    if (cfg.verify) std::cout << "order_condition: " << j["order_condition"].get<std::string>() << "\n";
    if (cfg.plot_data)
      for (auto& [r, v] : points) std::cout << r << " " << v << "\n";
    else if (cfg.r >= 0)
      std::cout << j["value"].get<double>() << "\n";
  }
}

void cmd_oracle_check(const Config& cfg) {
  if (cfg.k < 0) throw ValidationError("k must be non-negative");
  BosonExpr A = cfg.expr();
  FockState vac = cfg.vacuum();
  SignMode sign = sign_from(cfg.sign);
  TruncationPolicy policy{cfg.max_total, cfg.max_per_mode};
  DyckSumEngine engine(A, vac);
  PowerResult fast = engine.power_coefficients(cfg.k, sign);
  FockVector direct = oracle_power(A, vac, cfg.k, sign, policy);
  auto slow = oracle_ladder_decomposition(A, vac, direct, static_cast<unsigned>(cfg.k));
  bool match = fast.coeffs.size() == slow.size();
  for (auto& [d2, v] : fast.coeffs) {
    auto it = slow.find(d2);
    if (it == slow.end() || !(it->second == v)) match = false;
  }
  if (cfg.is_json()) {
    json j = cfg.base("oracle-check");
    j["expr"] = to_text(A);
    j["vacuum"] = vac.to_string();
    j["k"] = cfg.k;
    j["sign"] = cfg.sign;
    j["match"] = match;
    json arr = json::array();
    for (auto& [d2, v] : fast.coeffs) {
      json e{{"delta2", d2}, {"engine", radical_json(v)}};
      auto it = slow.find(d2);
      if (it != slow.end()) e["oracle"] = radical_json(it->second);
      arr.push_back(e);
    }
    j["levels"] = arr;
    cfg.emit(j);
  } else if (cfg.is_csv()) {
    std::cout << "delta2,engine,oracle\n";
    for (auto& [d2, v] : fast.coeffs) {
      auto it = slow.find(d2);
      std::cout << d2 << "," << v.to_string() << ","
                << (it != slow.end() ? it->second.to_string() : "-") << "\n";
    }
  } else {
    std::cout << (match ? "match" : "MISMATCH") << "\n";
  }
  if (!match) throw MathError("engine and oracle disagree at k=" + std::to_string(cfg.k));
}

}  // namespace

int main(int argc, char** argv) {
  std::cout << std::setprecision(15);
  Config cfg;
  CLI::App app{"dyckhike: exact ladder-operator powers and evolution series via Dyck-path sums"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->envname("DYCKHIKE_FORMAT");

  auto add_expr_vac = [&](CLI::App* sub) {
    sub->add_option("--expr", cfg.expr_text, "boson expression, e.g. \"a[0]^3\"")->required();
    sub->add_option("--vac", cfg.vac_text, "vacuum state, e.g. \"|0>\"")->required();
  };
  auto add_sign = [&](CLI::App* sub, std::string def) {
    sub->add_option("--sign", cfg.sign, "plus|minus")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->envname("DYCKHIKE_SIGN");
    sub->preparse_callback([&cfg, def](std::size_t) { cfg.sign = def; });
  };
  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "working precision in bits (>= 53)")
        ->envname("DYCKHIKE_PRECISION");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_flag("--plot-data", cfg.plot_data, "emit (r, value) pairs over a grid");
    sub->add_option("--r-min", cfg.r_min, "grid start");
    sub->add_option("--r-max", cfg.r_max, "grid end");
    sub->add_option("--steps", cfg.steps, "grid step count");
  };

  auto* count = app.add_subcommand("count-paths", "count lattice words for (k, d1, d2)");
  count->fallthrough();
  count->add_option("--k", cfg.k, "step count")->required();
  count->add_option("--d1", cfg.d1, "start height");
  count->add_option("--d2", cfg.d2, "end height");
  count->callback([&] { cmd_count_paths(cfg); });

  auto* enumerate = app.add_subcommand("enumerate-paths", "list every word for (k, d1, d2)");
  enumerate->fallthrough();
  enumerate->add_option("--k", cfg.k, "step count")->required();
  enumerate->add_option("--d1", cfg.d1, "start height");
  enumerate->add_option("--d2", cfg.d2, "end height");
  enumerate->callback([&] { cmd_enumerate_paths(cfg); });

  auto* lm = app.add_subcommand("lambda-mu", "ladder products of an operator/vacuum pair");
  lm->fallthrough();
  add_expr_vac(lm);
  lm->add_option("--p-max", cfg.p_max, "how many ladder heights to extract");
  lm->add_flag("--poly", cfg.want_poly, "also fit and validate the product polynomial");
  lm->callback([&] { cmd_lambda_mu(cfg); });

  auto* power = app.add_subcommand("power", "coefficients of (adjoint(A) +/- A)^k on the vacuum");
  power->fallthrough();
  add_expr_vac(power);
  power->add_option("--k", cfg.k, "power")->required();
  add_sign(power, "plus");
  power->add_option("--method", cfg.method, "auto|recursive|enumeration")
      ->check(CLI::IsMember({"auto", "recursive", "enumeration"}));
  power->add_option("--d1", cfg.d1, "start height (enumeration method only)");
  power->add_option("--d2", cfg.d2, "restrict output to one end height");
  power->callback([&] { cmd_power(cfg); });

  auto* evolve = app.add_subcommand("evolve", "amplitudes of exp[r(adjoint(A)-A)] on the vacuum");
  evolve->fallthrough();
  add_expr_vac(evolve);
  evolve->add_option("--K", cfg.K, "truncation order")->required();
  evolve->add_option("--r", cfg.r, "coupling value")->required();
  add_sign(evolve, "minus");
  add_precision(evolve);
  evolve->add_option("--d2", cfg.d2, "restrict output to one level");
  evolve->callback([&] { cmd_evolve(cfg); });

  auto* vev = app.add_subcommand("vev", "vacuum expectation value of the evolution operator");
  vev->fallthrough();
  add_expr_vac(vev);
  vev->add_option("--K", cfg.K, "truncation order")->required();
  vev->add_option("--r", cfg.r, "coupling value");
  add_sign(vev, "minus");
  add_precision(vev);
  add_grid(vev);
  vev->callback([&] { cmd_vev(cfg); });

  auto* pade = app.add_subcommand("pade", "diagonal rational continuation of the vacuum series");
  pade->fallthrough();
  add_expr_vac(pade);
  pade->add_option("--L", cfg.L, "numerator degree (in x = r^2)")->required();
  pade->add_option("--M", cfg.M, "denominator degree (default: L)");
  pade->add_option("--r", cfg.r, "evaluate at this coupling");
  add_sign(pade, "minus");
  add_precision(pade);
  add_grid(pade);
  pade->add_flag("--coeffs", cfg.coeffs, "include approximant coefficients");
  pade->add_flag("--verify", cfg.verify, "re-expand and check the order condition");
  pade->callback([&] { cmd_pade(cfg); });

  auto* oracle = app.add_subcommand("oracle-check", "compare engine output with brute force");
  oracle->fallthrough();
  add_expr_vac(oracle);
  oracle->add_option("--k", cfg.k, "power")->required();
  add_sign(oracle, "plus");
  oracle->add_option("--max-total-quanta", cfg.max_total, "oracle guard")
      ->envname("DYCKHIKE_MAX_TOTAL_QUANTA");
  oracle->add_option("--max-per-mode", cfg.max_per_mode, "oracle guard")
      ->envname("DYCKHIKE_MAX_PER_MODE");
  oracle->callback([&] { cmd_oracle_check(cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dyckhike::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
