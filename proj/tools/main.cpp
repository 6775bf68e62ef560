// cpdetect: high-dimensional changepoint detection tests, detection-boundary
// calculators, and a Monte Carlo phase-transition harness.
//
// Exit codes: 0 success, 2 input error, 3 internal numeric failure.

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpdetect/berk_jones.hpp"
#include "cpdetect/boundary.hpp"
#include "cpdetect/io.hpp"
#include "cpdetect/likelihood.hpp"
#include "cpdetect/monte_carlo.hpp"
#include "cpdetect/sweep.hpp"

using json = nlohmann::ordered_json;
namespace cpd = cpdetect;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;
constexpr const char* kVersion = "0.1.0";

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

cpd::Side parse_side(const std::string& s) {
  if (s == "one") return cpd::Side::one_sided;
  if (s == "two") return cpd::Side::two_sided;
  throw std::invalid_argument("side must be 'one' or 'two'");
}

std::optional<double> parse_delta(const std::string& s) {
  if (s == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("delta must be 'auto' or a number");
}

cpd::TestKind parse_test(const std::string& s) {
  if (s == "pbj") return cpd::TestKind::pbj;
  if (s == "max") return cpd::TestKind::max_stat;
  if (s == "combined") return cpd::TestKind::combined;
  if (s == "lrt") return cpd::TestKind::lrt;
  throw std::invalid_argument("test must be one of pbj|max|combined|lrt");
}

cpd::Regime parse_regime(const std::string& s) {
  if (s == "three_log") return cpd::Regime::three_log;
  if (s == "two_log") return cpd::Regime::two_log;
  throw std::invalid_argument("regime must be 'three_log' or 'two_log'");
}

// ---------------------------------------------------------------------------
// detect

int cmd_detect(const std::string& input, const std::string& side_str, double gamma,
               const std::string& delta_str, const std::string& out_path) {
  const cpd::Side side = parse_side(side_str);
  const std::optional<double> delta = parse_delta(delta_str);

  cpd::ObservationMatrix x;
  try {
    x = cpd::read_matrix_csv_file(input);
  } catch (const cpd::CsvParseError& e) {
    std::cerr << "parse error at line " << e.line << ", field " << e.column << ": "
              << e.what() << "\n";
    return kExitInput;
  }

  cpd::Grid grid;
  if (x.n >= 4) {
    grid = cpd::build_upper_grid(x.n, delta);
  } else {
    // too short for a geometric grid: scan every candidate column
    for (std::int64_t t = 1; t < x.n; ++t) grid.points.push_back(t);
    grid.n = x.n;
    grid.param = delta.value_or(0.0);
  }
  const cpd::CombinedDecision d = cpd::combined_test(x, grid, side, gamma);
  const cpd::BjScanResult scan = cpd::pbj_statistic(x, grid, side);

  json report;
  report["schema_version"] = 1;
  report["command"] = "detect";
  report["p"] = x.p;
  report["n"] = x.n;
  report["grid_size"] = grid.size();
  report["delta"] = grid.param;
  report["side"] = side_str;
  report["gamma"] = gamma;
  report["pbj"] = {
      {"statistic", scan.statistic},
      {"penalized", scan.penalized},
      {"threshold", d.pbj.threshold},
      {"reject", d.pbj.reject},
      {"argmax_t", grid.points[static_cast<std::size_t>(scan.argmax_grid_index)]},
      {"argmax_j", scan.argmax_order_index},
      {"degenerate_threshold", d.pbj.degenerate_threshold},
  };
  report["max"] = {
      {"statistic", d.max.statistic},
      {"threshold", d.max.threshold},
      {"reject", d.max.reject},
      {"degenerate_threshold", d.max.degenerate_threshold},
  };
  report["combined_reject"] = d.reject;
  emit(report.dump(2), out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// boundary

int cmd_boundary(double a, double beta, double p, const std::string& side_str,
                 bool regime2, bool idj, bool rates, bool calibrate, long long n,
                 long long s, const std::string& regime_str, const std::string& out_path) {
  json report;
  report["schema_version"] = 1;
  report["command"] = "boundary";

  if (rates) {
    const cpd::ReferenceRates r =
        cpd::reference_rates(static_cast<std::int64_t>(p), n, s);
    report["p"] = static_cast<std::int64_t>(p);
    report["n"] = n;
    report["s"] = s;
    report["collier_rate"] = r.collier;
    report["liu_rate"] = r.liu;
    report["note"] = "rates up to constants";
  } else if (calibrate) {
    const cpd::Calibration cal = cpd::calibration_from_dims(
        static_cast<std::int64_t>(p), n, s, parse_regime(regime_str));
    report["p"] = static_cast<std::int64_t>(p);
    report["n"] = n;
    report["s"] = s;
    report["regime"] = regime_str;
    report["a"] = cal.a;
    report["beta"] = cal.beta;
  } else if (idj) {
    const double mu2 = cpd::idj_mu_star(beta, p);
    report["beta"] = beta;
    report["p"] = p;
    report["mu_star_squared"] = mu2;
    report["mu_star"] = std::sqrt(mu2);
  } else if (regime2) {
    const cpd::Regime2Value r2 = cpd::r2_star(a, beta);
    report["a"] = a;
    report["beta"] = beta;
    report["p"] = p;
    report["r"] = r2.r;
    report["rho_squared"] = 2.0 * r2.r * std::log(p);
    report["rho"] = std::sqrt(2.0 * r2.r * std::log(p));
    report["case_label"] = cpd::to_string(r2.case_label);
  } else {
    const cpd::Side side = parse_side(side_str);
    const cpd::BoundaryValue b = side == cpd::Side::one_sided
                                     ? cpd::boundary_one_sided(a, beta, p)
                                     : cpd::boundary_two_sided(a, beta, p);
    report["a"] = a;
    report["beta"] = beta;
    report["p"] = p;
    report["side"] = side_str;
    report["rho_squared"] = b.rho_squared;
    report["rho"] = std::sqrt(b.rho_squared);
    report["case_label"] = cpd::to_string(b.case_label);
  }
  emit(report.dump(2), out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// config-driven simulate / sweep

struct SchemaCheck {
  std::vector<std::string> issues;
  const json* root;

  bool require(const char* key, json::value_t kind, const json& node,
               const std::string& where) {
    if (!node.contains(key)) {
      issues.push_back(where + "missing key '" + key + "'");
      return false;
    }
    const auto& v = node.at(key);
    const bool numeric_ok =
        (kind == json::value_t::number_float && v.is_number()) ||
        (kind == json::value_t::number_integer && v.is_number_integer()) ||
        (kind == json::value_t::number_unsigned && v.is_number() && v.is_number_unsigned());
    if (!numeric_ok && v.type() != kind) {
      issues.push_back(where + "key '" + key + "' has wrong type");
      return false;
    }
    return true;
  }
};

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config '" + path + "'");
  json cfg;
  try {
    in >> cfg;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  return cfg;
}

void check_schema_version(const json& cfg, std::vector<std::string>& issues) {
  if (!cfg.contains("schema_version"))
    issues.push_back("missing key 'schema_version'");
  else if (!cfg["schema_version"].is_number_integer() ||
           cfg["schema_version"].get<int>() != 1)
    issues.push_back("key 'schema_version' must be the integer 1");
}

cpd::H1Generator parse_alternative(const json& alt, std::int64_t p, std::int64_t n,
                                   cpd::Side side, std::vector<std::string>& issues) {
  const std::string kind = alt.value("kind", "");
  const auto grid_of = [&](const json& node) {
    std::optional<double> base;
    if (node.contains("grid_base") && node["grid_base"].is_number())
      base = node["grid_base"].get<double>();
    return cpd::build_lower_grid(n, base);
  };

  if (kind == "fixed") {
    cpd::AlternativeSpec spec;
    spec.p = p;
    spec.n = n;
    spec.side = side;
    spec.t_star = alt.value("t_star", n / 2);
    const std::int64_t s = alt.value("s", std::int64_t{1});
    double rho = alt.value("rho", -1.0);
    if (rho < 0.0 && alt.contains("rho_multiplier")) {
      const cpd::Calibration cal =
          cpd::calibration_from_dims(p, n, std::max<std::int64_t>(s, 1),
                                     cpd::Regime::three_log);
      const double b2 = cpd::cell_boundary_rho_squared(cpd::Regime::three_log, side,
                                                       cal.a, cal.beta,
                                                       static_cast<double>(p));
      rho = alt["rho_multiplier"].get<double>() * std::sqrt(b2);
    }
    if (rho < 0.0) {
      issues.push_back("alternative: need 'rho' or 'rho_multiplier'");
      rho = 0.0;
    }
    spec.rho = rho;
    for (std::int64_t j = 0; j < s; ++j) {
      spec.support.push_back(j);
      if (side == cpd::Side::two_sided) spec.sign_pattern.push_back(j % 2 == 0 ? 1 : -1);
    }
    return spec;
  }
  if (kind == "sparse_mixture") {
    cpd::SparseMixture m;
    m.beta_bar = alt.value("beta_bar", 0.5);
    m.epsilon = alt.contains("epsilon") ? alt["epsilon"].get<double>()
                                        : std::pow(static_cast<double>(p), -m.beta_bar);
    m.rho = alt.value("rho", 1.0);
    m.side = side;
    m.grid = grid_of(alt);
    return m;
  }
  if (kind == "single_row") {
    cpd::SingleRow sr;
    sr.rho = alt.value("rho", 1.0);
    sr.grid = grid_of(alt);
    return sr;
  }
  if (kind == "even_spread") {
    cpd::EvenSpread es;
    es.s = alt.value("s", std::int64_t{1});
    es.rho = alt.value("rho", 1.0);
    es.grid = grid_of(alt);
    return es;
  }
  issues.push_back("alternative: unknown kind '" + kind +
                   "' (expected fixed|sparse_mixture|single_row|even_spread)");
  return cpd::AlternativeSpec{};
}

json simulate_preset(const std::string& name) {
  if (name == "typeI-audit") {
    return json{{"schema_version", 1},
                {"p", 200},
                {"n", 2000},
                {"trials", 200},
                {"seed", 20240601},
                {"test", "combined"},
                {"side", "one"},
                {"gamma", 2.0},
                {"delta", "auto"},
                {"alternative",
                 json{{"kind", "fixed"}, {"s", 1}, {"t_star", 700}, {"rho", 0.0}}}};
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

json sweep_preset(const std::string& name) {
  if (name == "phase-demo") {
    return json{{"schema_version", 1},
                {"p", 500},
                {"n_values", {500, 2000, 8000}},
                {"beta_values", {0.35, 0.5, 0.65}},
                {"multipliers", {0.5, 1.0, 2.0, 4.0}},
                {"side", "one"},
                {"regime", "three_log"},
                {"test", "combined"},
                {"gamma", 2.0},
                {"trials", 100},
                {"seed", 20240002},
                {"t_star_frac", 0.35}};
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

int cmd_simulate(const json& cfg, const std::string& out_path, const std::string& format) {
  std::vector<std::string> issues;
  SchemaCheck check{{}, &cfg};
  check_schema_version(cfg, issues);
  for (const char* key : {"p", "n", "trials", "seed"})
    check.require(key, json::value_t::number_integer, cfg, "");
  check.require("test", json::value_t::string, cfg, "");
  check.require("side", json::value_t::string, cfg, "");
  check.require("gamma", json::value_t::number_float, cfg, "");
  check.require("alternative", json::value_t::object, cfg, "");
  issues.insert(issues.end(), check.issues.begin(), check.issues.end());
  if (!issues.empty()) {
    for (const auto& m : issues) std::cerr << "config: " << m << "\n";
    return kExitInput;
  }

  cpd::ErrorEstimateConfig ec;
  ec.p = cfg["p"].get<std::int64_t>();
  ec.n = cfg["n"].get<std::int64_t>();
  ec.trials = cfg["trials"].get<std::int64_t>();
  ec.seed = cfg["seed"].get<std::uint64_t>();
  ec.test = parse_test(cfg["test"].get<std::string>());
  ec.side = parse_side(cfg["side"].get<std::string>());
  ec.gamma = cfg["gamma"].get<double>();
  if (cfg.contains("delta")) {
    if (cfg["delta"].is_number())
      ec.delta = cfg["delta"].get<double>();
    else if (cfg["delta"].is_string() && cfg["delta"].get<std::string>() != "auto")
      issues.push_back("key 'delta' must be a number or \"auto\"");
  }
  if (cfg.contains("base_means") && cfg["base_means"].is_number())
    ec.base_means.assign(static_cast<std::size_t>(ec.p), cfg["base_means"].get<double>());

  ec.h1 = parse_alternative(cfg["alternative"], ec.p, ec.n, ec.side, issues);
  if (!issues.empty()) {
    for (const auto& m : issues) std::cerr << "config: " << m << "\n";
    return kExitInput;
  }

  const auto sim_start = std::chrono::steady_clock::now();
  const cpd::McErrorReport r = cpd::estimate_errors(ec);
  std::cerr << "simulate: " << r.trials << " trials in "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - sim_start)
                   .count()
            << " s\n";

  if (format == "csv") {
    std::ostringstream os;
    os << "trials,type1,type1_lo,type1_hi,type2,type2_lo,type2_hi,risk,seed\n";
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%lld,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%llu\n",
                  static_cast<long long>(r.trials), r.type1_hat, r.type1_ci.lo,
                  r.type1_ci.hi, r.type2_hat, r.type2_ci.lo, r.type2_ci.hi,
                  r.type1_hat + r.type2_hat, static_cast<unsigned long long>(r.seed));
    os << buf;
    emit(os.str(), out_path);
    return kExitOk;
  }

  json report;
  report["schema_version"] = 1;
  report["command"] = "simulate";
  report["version"] = kVersion;
  report["config"] = cfg;
  report["trials"] = r.trials;
  report["seed"] = r.seed;
  report["type1_hat"] = r.type1_hat;
  report["type1_lo"] = r.type1_ci.lo;
  report["type1_hi"] = r.type1_ci.hi;
  report["type2_hat"] = r.type2_hat;
  report["type2_lo"] = r.type2_ci.lo;
  report["type2_hi"] = r.type2_ci.hi;
  report["risk"] = r.type1_hat + r.type2_hat;
  report["h0_rejections"] = r.h0_rejections;
  report["h1_acceptances"] = r.h1_acceptances;
  report["config_echo"] = r.config_echo;
  report["timestamp"] = iso_timestamp();
  emit(report.dump(2), out_path);
  return kExitOk;
}

int cmd_sweep(const json& cfg, const std::string& out_path, const std::string& format) {
  std::vector<std::string> issues;
  check_schema_version(cfg, issues);
  if (!cfg.contains("p") || !cfg["p"].is_number_integer())
    issues.push_back("missing or non-integer key 'p'");
  if (!cfg.contains("n_values") && !cfg.contains("a_values"))
    issues.push_back("need key 'n_values' or 'a_values'");
  if (!cfg.contains("s_values") && !cfg.contains("beta_values"))
    issues.push_back("need key 's_values' or 'beta_values'");
  if (!cfg.contains("multipliers") || !cfg["multipliers"].is_array())
    issues.push_back("missing or non-array key 'multipliers'");
  for (const char* key : {"trials", "seed"})
    if (!cfg.contains(key) || !cfg[key].is_number_integer())
      issues.push_back(std::string("missing or non-integer key '") + key + "'");
  if (!issues.empty()) {
    for (const auto& m : issues) std::cerr << "config: " << m << "\n";
    return kExitInput;
  }

  cpd::SweepPlan plan;
  plan.p = cfg["p"].get<std::int64_t>();
  if (cfg.contains("n_values"))
    plan.n_values = cfg["n_values"].get<std::vector<std::int64_t>>();
  if (cfg.contains("a_values")) plan.a_values = cfg["a_values"].get<std::vector<double>>();
  if (cfg.contains("s_values"))
    plan.s_values = cfg["s_values"].get<std::vector<std::int64_t>>();
  if (cfg.contains("beta_values"))
    plan.beta_values = cfg["beta_values"].get<std::vector<double>>();
  plan.multipliers = cfg["multipliers"].get<std::vector<double>>();
  plan.side = parse_side(cfg.value("side", "one"));
  plan.regime = parse_regime(cfg.value("regime", "three_log"));
  plan.test = parse_test(cfg.value("test", "combined"));
  plan.gamma = cfg.value("gamma", 2.0);
  plan.trials = cfg["trials"].get<std::int64_t>();
  plan.seed = cfg["seed"].get<std::uint64_t>();
  plan.t_star_frac = cfg.value("t_star_frac", 0.35);
  plan.max_run_n = cfg.value("max_run_n", std::int64_t{65536});
  if (cfg.contains("delta") && cfg["delta"].is_number())
    plan.delta = cfg["delta"].get<double>();

  const auto sweep_start = std::chrono::steady_clock::now();
  const std::vector<cpd::PhasePoint> points = cpd::phase_sweep(plan);
  std::cerr << "sweep: " << points.size() << " rows in "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - sweep_start)
                   .count()
            << " s\n";

  if (format == "json") {
    json rows = json::array();
    for (const auto& pt : points) {
      rows.push_back(json{{"a", pt.a},
                          {"beta", pt.beta},
                          {"multiplier", pt.multiplier},
                          {"p", pt.p},
                          {"n", pt.n},
                          {"s", pt.s},
                          {"rho", pt.rho},
                          {"type1", pt.type1},
                          {"type1_lo", pt.type1_lo},
                          {"type1_hi", pt.type1_hi},
                          {"type2", pt.type2},
                          {"type2_lo", pt.type2_lo},
                          {"type2_hi", pt.type2_hi},
                          {"risk", pt.risk},
                          {"saturated_flag", pt.saturated}});
    }
    json report;
    report["schema_version"] = 1;
    report["command"] = "sweep";
    report["version"] = kVersion;
    report["config"] = cfg;
    report["points"] = rows;
    report["timestamp"] = iso_timestamp();
    emit(report.dump(2), out_path);
    return kExitOk;
  }

  std::ostringstream os;
  cpd::write_phase_csv(os, points);
  emit(os.str(), out_path);
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"high-dimensional changepoint detection tests and simulations"};
  app.require_subcommand(1);

  // detect
  std::string detect_input, detect_side = "two", detect_delta = "auto", detect_out;
  double detect_gamma = 2.0;
  CLI::App* detect = app.add_subcommand("detect", "run the combined test on a CSV matrix");
  detect->add_option("--input", detect_input, "p x n CSV matrix, no header")->required();
  detect->add_option("--side", detect_side, "one|two")->default_val("two");
  detect->add_option("--gamma", detect_gamma, "threshold exponent, > 0")->default_val(2.0);
  detect->add_option("--delta", detect_delta, "grid ratio minus 1, or 'auto'")
      ->default_val("auto");
  detect->add_option("--out", detect_out, "write report here instead of stdout");

  // boundary
  double b_a = 0.0, b_beta = 0.0, b_p = 0.0;
  std::string b_side = "one", b_regime = "three_log", b_out;
  long long b_n = 0, b_s = 0;
  bool b_regime2 = false, b_idj = false, b_rates = false, b_calibrate = false;
  CLI::App* boundary = app.add_subcommand("boundary", "closed-form boundary calculators");
  boundary->add_option("--a", b_a, "calibration exponent a");
  boundary->add_option("--beta", b_beta, "sparsity exponent beta");
  boundary->add_option("--p", b_p, "row count (real-valued accepted)");
  boundary->add_option("--side", b_side, "one|two")->default_val("one");
  boundary->add_flag("--regime2", b_regime2, "second-regime boundary r2*");
  boundary->add_flag("--idj", b_idj, "Ingster-Donoho-Jin reference boundary");
  boundary->add_flag("--rates", b_rates, "order-level reference rates (needs --n, --s)");
  boundary->add_flag("--calibrate", b_calibrate, "effective (a, beta) of (p, n, s)");
  boundary->add_option("--n", b_n, "sequence length for --rates/--calibrate");
  boundary->add_option("--s", b_s, "sparsity for --rates/--calibrate");
  boundary->add_option("--regime", b_regime, "three_log|two_log for --calibrate");
  boundary->add_option("--out", b_out, "write report here instead of stdout");

  // simulate
  std::string sim_config, sim_preset, sim_out, sim_format = "json";
  std::optional<std::uint64_t> sim_seed;
  std::optional<std::int64_t> sim_trials;
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo error estimation");
  simulate->add_option("--config", sim_config, "JSON config file");
  simulate->add_option("--preset", sim_preset, "built-in config (typeI-audit)");
  simulate->add_option("--seed", sim_seed, "override config seed");
  simulate->add_option("--trials", sim_trials, "override config trials");
  simulate->add_option("--out", sim_out, "output path (default stdout)");
  simulate->add_option("--format", sim_format, "csv|json")->default_val("json");

  // sweep
  std::string sweep_config, sweep_preset_name, sweep_out, sweep_format = "csv";
  std::optional<std::uint64_t> sweep_seed;
  std::optional<std::int64_t> sweep_trials;
  CLI::App* sweep = app.add_subcommand("sweep", "phase-plane risk sweep");
  sweep->add_option("--config", sweep_config, "JSON config file");
  sweep->add_option("--preset", sweep_preset_name, "built-in config (phase-demo)");
  sweep->add_option("--seed", sweep_seed, "override config seed");
  sweep->add_option("--trials", sweep_trials, "override config trials");
  sweep->add_option("--out", sweep_out, "output path (default stdout)");
  sweep->add_option("--format", sweep_format, "csv|json")->default_val("csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (detect->parsed())
      return cmd_detect(detect_input, detect_side, detect_gamma, detect_delta, detect_out);

    if (boundary->parsed())
      return cmd_boundary(b_a, b_beta, b_p, b_side, b_regime2, b_idj, b_rates, b_calibrate,
                          b_n, b_s, b_regime, b_out);

    if (simulate->parsed()) {
      if (sim_config.empty() && sim_preset.empty())
        throw std::invalid_argument("simulate needs --config or --preset");
      json cfg = sim_config.empty() ? simulate_preset(sim_preset) : load_config(sim_config);
      if (sim_seed) cfg["seed"] = *sim_seed;
      if (sim_trials) cfg["trials"] = *sim_trials;
      return cmd_simulate(cfg, sim_out, sim_format);
    }

    if (sweep->parsed()) {
      if (sweep_config.empty() && sweep_preset_name.empty())
        throw std::invalid_argument("sweep needs --config or --preset");
      json cfg = sweep_config.empty() ? sweep_preset(sweep_preset_name)
                                      : load_config(sweep_config);
      if (sweep_seed) cfg["seed"] = *sweep_seed;
      if (sweep_trials) cfg["trials"] = *sweep_trials;
      return cmd_sweep(cfg, sweep_out, sweep_format);
    }
  } catch (const cpd::numeric_error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const cpd::CsvParseError& e) {
    std::cerr << "parse error at line " << e.line << ", field " << e.column << ": "
              << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}
