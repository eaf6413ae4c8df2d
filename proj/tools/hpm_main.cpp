// Command-line front end: reproduction tables for the Blasius and coupled
// Burgers series solutions, as CSV or JSON.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "hpm/blasius.hpp"
#include "hpm/burgers.hpp"
#include "hpm/report.hpp"
#include "hpm/shooting.hpp"
#include "hpm/version.hpp"

using json = nlohmann::json;

namespace {

// Fixed 9-significant-digit scientific formatting keeps CSV output
// byte-stable across runs and platforms.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

struct RunConfig {
  int order = 3;
  std::string alpha_mode = "paper";
  double eta_max = 4.0;
  double eta_step = 0.5;
  int x_steps = 65;
  double t_max = 1.0;
  int t_steps = 21;
  std::string problem;  // convergence only
  std::string format = "csv";
  std::string output;
  std::string config_path;
};

// Flat "key = value" (or "key=value") config file with the same keys as
// the flags; values given on the command line win.
void apply_config(const CLI::App* sub, RunConfig& cfg) {
  std::ifstream in(cfg.config_path);
  if (!in) throw std::invalid_argument("cannot open config file: " + cfg.config_path);
  auto trim = [](std::string s) {
    const auto from = s.find_first_not_of(" \t");
    const auto to = s.find_last_not_of(" \t");
    return from == std::string::npos ? std::string{} : s.substr(from, to - from + 1);
  };
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key = value, got: " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) throw std::invalid_argument("config: unknown key: " + key);
    if (opt->count() > 0) continue;  // flag overrides the file
    try {
      if (key == "order")
        cfg.order = std::stoi(value);
      else if (key == "alpha")
        cfg.alpha_mode = value;
      else if (key == "eta-max")
        cfg.eta_max = std::stod(value);
      else if (key == "eta-step")
        cfg.eta_step = std::stod(value);
      else if (key == "x-steps")
        cfg.x_steps = std::stoi(value);
      else if (key == "t-max")
        cfg.t_max = std::stod(value);
      else if (key == "t-steps")
        cfg.t_steps = std::stoi(value);
      else if (key == "problem")
        cfg.problem = value;
      else if (key == "format")
        cfg.format = value;
      else if (key == "output")
        cfg.output = value;
      else
        throw std::invalid_argument("config: unsupported key: " + key);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("config: bad value for " + key + ": " + value);
    }
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.order < 0 || cfg.order > hpm::blasius::kMaxOrder)
    throw std::invalid_argument("order must be in [0, 12]");
  if (cfg.alpha_mode != "paper" && cfg.alpha_mode != "shoot")
    throw std::invalid_argument("alpha must be 'paper' or 'shoot'");
  if (cfg.format != "csv" && cfg.format != "json")
    throw std::invalid_argument("format must be 'csv' or 'json'");
  if (!(cfg.eta_max > 0.0) || !(cfg.eta_step > 0.0))
    throw std::invalid_argument("eta-max and eta-step must be positive");
  if (cfg.x_steps < 1 || cfg.t_steps < 1)
    throw std::invalid_argument("x-steps and t-steps must be at least 1");
  if (!(cfg.t_max >= 0.0)) throw std::invalid_argument("t-max must be non-negative");
}

void write_out(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + cfg.output);
  out << text;
}

std::vector<double> eta_grid(const RunConfig& cfg) {
  const int count = static_cast<int>(std::floor(cfg.eta_max / cfg.eta_step + 1e-9)) + 1;
  std::vector<double> etas;
  etas.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) etas.push_back(static_cast<double>(i) * cfg.eta_step);
  return etas;
}

double resolve_alpha(const RunConfig& cfg) {
  if (cfg.alpha_mode == "paper") return hpm::blasius::kReferenceAlpha;
  return hpm::oracles::blasius_find_alpha(1e-10).alpha;
}

int cmd_blasius(const RunConfig& cfg) {
  if (cfg.eta_max > 4.0)
    std::cerr << "warning: the truncated series loses accuracy beyond eta = 4\n";

  const double alpha = resolve_alpha(cfg);
  const auto series = hpm::blasius::series(alpha, cfg.order);
  const auto etas = eta_grid(cfg);
  const auto reference =
      hpm::oracles::blasius_shoot(alpha, std::max(10.0, cfg.eta_max), 1e-3);

  json meta{{"tool", "hpm"},
            {"version", hpm::kVersion},
            {"problem", "blasius"},
            {"order", cfg.order},
            {"alpha_mode", cfg.alpha_mode},
            {"alpha", alpha}};
  json coefficients = json::array();
  for (int n = 0; n <= series.order(); ++n) {
    const auto& term = series.terms[static_cast<std::size_t>(n)];
    coefficients.push_back(
        {{"n", n}, {"degree", term.degree()}, {"value", term.coeff(term.degree())}});
  }
  json rows = json::array();
  double max_err = 0.0;
  double sq_sum = 0.0;
  for (double eta : etas) {
    const auto point = hpm::blasius::eval(series, eta);
    const double f_ref = hpm::oracles::trajectory_f(reference.trajectory, eta);
    const double abs_err = std::abs(point.f - f_ref);
    max_err = std::max(max_err, abs_err);
    sq_sum += abs_err * abs_err;
    rows.push_back({{"eta", eta},
                    {"f_hpm", point.f},
                    {"fp_hpm", point.fp},
                    {"fpp_hpm", point.fpp},
                    {"f_ref", f_ref},
                    {"abs_err", abs_err}});
  }
  json summary{{"max_err", max_err},
               {"rms_err", etas.empty() ? 0.0 : std::sqrt(sq_sum / etas.size())}};

  if (cfg.format == "json") {
    json doc{{"meta", meta},
             {"coefficients", coefficients},
             {"rows", rows},
             {"summary", summary}};
    write_out(cfg, doc.dump(2) + "\n");
    return 0;
  }

  std::string text;
  text += "# tool = hpm " + std::string(hpm::kVersion) + "\n";
  text += "# problem = blasius\n";
  text += "# order = " + std::to_string(cfg.order) + "\n";
  text += "# alpha_mode = " + cfg.alpha_mode + "\n";
  text += "# alpha = " + fmt(alpha) + "\n";
  for (const auto& c : coefficients)
    text += "# coefficient n=" + std::to_string(c["n"].get<int>()) +
            " degree=" + std::to_string(c["degree"].get<int>()) +
            " value=" + fmt(c["value"].get<double>()) + "\n";
  text += "eta,f_hpm,fp_hpm,fpp_hpm,f_ref,abs_err\n";
  for (const auto& r : rows)
    text += fmt(r["eta"].get<double>()) + "," + fmt(r["f_hpm"].get<double>()) + "," +
            fmt(r["fp_hpm"].get<double>()) + "," + fmt(r["fpp_hpm"].get<double>()) + "," +
            fmt(r["f_ref"].get<double>()) + "," + fmt(r["abs_err"].get<double>()) + "\n";
  text += "# max_err = " + fmt(summary["max_err"].get<double>()) + "\n";
  text += "# rms_err = " + fmt(summary["rms_err"].get<double>()) + "\n";
  write_out(cfg, text);
  return 0;
}

int cmd_burgers(const RunConfig& cfg) {
  const auto series = hpm::burgers::series(cfg.order);
  const auto xs = hpm::oracles::linspace(0.0, 2.0 * std::numbers::pi, cfg.x_steps);
  const auto ts = hpm::oracles::linspace(0.0, cfg.t_max, cfg.t_steps);
  const auto report = hpm::oracles::burgers_compare(series, xs, ts);
  const auto [res_u, res_v] = hpm::oracles::pde_residual(series, xs, ts);
  const double residual_max = std::max(res_u, res_v);

  json meta{{"tool", "hpm"},
            {"version", hpm::kVersion},
            {"problem", "burgers"},
            {"order", cfg.order}};
  json rows = json::array();
  for (const auto& row : report.rows)
    rows.push_back({{"x", row.x},
                    {"t", row.t},
                    {"u_hpm", row.approx},
                    {"u_exact", row.reference},
                    {"abs_err", row.abs_err}});
  json summary{{"max_err", report.max_err},
               {"rms_err", report.rms_err},
               {"residual_max", residual_max}};

  if (cfg.format == "json") {
    json doc{{"meta", meta}, {"rows", rows}, {"summary", summary}};
    write_out(cfg, doc.dump(2) + "\n");
    return 0;
  }

  std::string text;
  text += "# tool = hpm " + std::string(hpm::kVersion) + "\n";
  text += "# problem = burgers\n";
  text += "# order = " + std::to_string(cfg.order) + "\n";
  text += "x,t,u_hpm,u_exact,abs_err\n";
  for (const auto& row : report.rows)
    text += fmt(row.x) + "," + fmt(row.t) + "," + fmt(row.approx) + "," +
            fmt(row.reference) + "," + fmt(row.abs_err) + "\n";
  text += "# max_err = " + fmt(report.max_err) + "\n";
  text += "# rms_err = " + fmt(report.rms_err) + "\n";
  text += "# residual_max = " + fmt(residual_max) + "\n";
  write_out(cfg, text);
  return 0;
}

int cmd_convergence(const RunConfig& cfg) {
  json meta{{"tool", "hpm"},
            {"version", hpm::kVersion},
            {"problem", cfg.problem},
            {"order", cfg.order}};
  json rows = json::array();

  if (cfg.problem == "blasius") {
    const double alpha = resolve_alpha(cfg);
    meta["alpha_mode"] = cfg.alpha_mode;
    meta["alpha"] = alpha;
    const auto etas = eta_grid(cfg);
    const auto reference =
        hpm::oracles::blasius_shoot(alpha, std::max(10.0, cfg.eta_max), 1e-3);
    hpm::oracles::ShootingResult oracle;
    oracle.alpha = alpha;
    oracle.eta_max = std::max(10.0, cfg.eta_max);
    oracle.trajectory = reference.trajectory;
    for (int order = 0; order <= cfg.order; ++order) {
      const auto series = hpm::blasius::series(alpha, order);
      const auto report = hpm::oracles::blasius_compare(series, oracle, etas);
      const double residual = std::abs(hpm::blasius::residual(series).eval(0.5));
      rows.push_back({{"order", order},
                      {"max_err", report.max_err},
                      {"rms_err", report.rms_err},
                      {"residual_max", residual}});
    }
  } else {
    const auto xs = hpm::oracles::linspace(0.0, 2.0 * std::numbers::pi, cfg.x_steps);
    const auto ts = hpm::oracles::linspace(0.0, cfg.t_max, cfg.t_steps);
    // Residuals are scanned over t <= 1/2 where the decay is monotone.
    const auto ts_res = hpm::oracles::linspace(0.0, 0.5, 21);
    for (int order = 0; order <= cfg.order; ++order) {
      const auto series = hpm::burgers::series(order);
      const auto report = hpm::oracles::burgers_compare(series, xs, ts);
      const auto [res_u, res_v] = hpm::oracles::pde_residual(series, xs, ts_res);
      rows.push_back({{"order", order},
                      {"max_err", report.max_err},
                      {"rms_err", report.rms_err},
                      {"residual_max", std::max(res_u, res_v)}});
    }
  }

  if (cfg.format == "json") {
    json doc{{"meta", meta}, {"rows", rows}, {"summary", json::object()}};
    write_out(cfg, doc.dump(2) + "\n");
    return 0;
  }

  std::string text;
  text += "# tool = hpm " + std::string(hpm::kVersion) + "\n";
  text += "# problem = " + cfg.problem + "\n";
  text += "# order = " + std::to_string(cfg.order) + "\n";
  if (meta.contains("alpha")) text += "# alpha = " + fmt(meta["alpha"].get<double>()) + "\n";
  text += "order,max_err,rms_err,residual_max\n";
  for (const auto& r : rows)
    text += std::to_string(r["order"].get<int>()) + "," + fmt(r["max_err"].get<double>()) +
            "," + fmt(r["rms_err"].get<double>()) + "," +
            fmt(r["residual_max"].get<double>()) + "\n";
  write_out(cfg, text);
  return 0;
}

// Regenerates the committed oracle constants (flat key = value lines).
int cmd_oracle(const RunConfig& cfg) {
  const auto result = hpm::oracles::blasius_find_alpha(1e-10);
  const auto at_one = hpm::oracles::blasius_shoot(1.0, 10.0, 1e-3);
  char buf[64];
  std::string text;
  auto emit = [&](const char* key, double value) {
    std::snprintf(buf, sizeof buf, "%s = %.12e\n", key, value);
    text += buf;
  };
  emit("blasius_alpha", result.alpha);
  emit("blasius_fprime_eta10_alpha1", at_one.fp_end);
  emit("blasius_f_eta05", hpm::oracles::trajectory_f(result.trajectory, 0.5));
  emit("blasius_f_eta1", hpm::oracles::trajectory_f(result.trajectory, 1.0));
  emit("blasius_f_eta15", hpm::oracles::trajectory_f(result.trajectory, 1.5));
  emit("blasius_f_eta2", hpm::oracles::trajectory_f(result.trajectory, 2.0));
  write_out(cfg, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Series solutions for the Blasius boundary layer and the coupled "
               "Burgers system, with numerical reference tables"};
  app.require_subcommand(1);

  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--order", cfg.order, "Truncation order")
        ->check(CLI::Range(0, hpm::blasius::kMaxOrder));
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", cfg.output, "Output path (default: stdout)");
    sub->add_option("--config", cfg.config_path,
                    "Flat key = value config file; flags override");
  };
  auto add_blasius_flags = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha_mode,
                    "Initial curvature source: the reference constant or the "
                    "shooting solver")
        ->check(CLI::IsMember({"paper", "shoot"}));
    sub->add_option("--eta-max", cfg.eta_max, "Largest eta in the table")
        ->check(CLI::PositiveNumber);
    sub->add_option("--eta-step", cfg.eta_step, "Eta grid spacing")
        ->check(CLI::PositiveNumber);
  };
  auto add_burgers_flags = [&](CLI::App* sub) {
    sub->add_option("--x-steps", cfg.x_steps, "Grid points on x in [0, 2pi]")
        ->check(CLI::Range(1, 100000));
    sub->add_option("--t-max", cfg.t_max, "Largest t in the table")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--t-steps", cfg.t_steps, "Grid points on t in [0, t-max]")
        ->check(CLI::Range(1, 100000));
  };

  CLI::App* blasius_cmd =
      app.add_subcommand("blasius", "Blasius series table against the shooting solver");
  add_common(blasius_cmd);
  add_blasius_flags(blasius_cmd);

  CLI::App* burgers_cmd =
      app.add_subcommand("burgers", "Coupled Burgers table against the closed form");
  add_common(burgers_cmd);
  add_burgers_flags(burgers_cmd);

  CLI::App* conv_cmd = app.add_subcommand("convergence", "Error sweep over orders 0..N");
  add_common(conv_cmd);
  add_blasius_flags(conv_cmd);
  add_burgers_flags(conv_cmd);
  conv_cmd->add_option("--problem", cfg.problem, "Which problem to sweep")
      ->required()
      ->check(CLI::IsMember({"blasius", "burgers"}));

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "Regenerate the shooting oracle constants");
  oracle_cmd->add_option("--output", cfg.output, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // Convergence defaults differ: the series-oracle sweep is meaningful on
  // the near field, and order 6 shows the trend.
  if (conv_cmd->parsed()) {
    if (conv_cmd->count("--eta-max") == 0) cfg.eta_max = 1.5;
    if (conv_cmd->count("--eta-step") == 0) cfg.eta_step = 0.25;
    if (conv_cmd->count("--order") == 0) cfg.order = 6;
  }

  try {
    CLI::App* active = blasius_cmd->parsed()   ? blasius_cmd
                       : burgers_cmd->parsed() ? burgers_cmd
                                               : conv_cmd;
    if (!cfg.config_path.empty()) apply_config(active, cfg);
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (blasius_cmd->parsed()) return cmd_blasius(cfg);
    if (burgers_cmd->parsed()) return cmd_burgers(cfg);
    if (conv_cmd->parsed()) return cmd_convergence(cfg);
    if (oracle_cmd->parsed()) return cmd_oracle(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
