// Command-line front-end: tau/beta parameter sweeps of the two-spin MQ NMR
// pipeline, emitted as CSV. Exit codes: 0 success, 2 configuration error,
// 3 numeric-residue error.

#include <CLI11.hpp>
#include <mqnmr/mqnmr.hpp>

#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

mqnmr::SweepMode parse_mode(const std::string& text) {
  if (text == "sweep-tau") return mqnmr::SweepMode::sweep_tau;
  if (text == "sweep-beta") return mqnmr::SweepMode::sweep_beta;
  if (text == "single") return mqnmr::SweepMode::single;
  throw mqnmr::config_error("mode",
                            "expected sweep-tau, sweep-beta, or single");
}

void apply_tolerance_env() {
  const char* env = std::getenv("MQNMR_TOLERANCE");
  if (!env) return;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol > 0.0))
    throw mqnmr::config_error("MQNMR_TOLERANCE",
                              "must be a positive number");
  mqnmr::set_matrix_tolerance(tol);
}

int run(int argc, char** argv) {
  CLI::App app{
      "Two-spin multiple-quantum NMR preparation dynamics: coherence "
      "intensities, Wootters concurrence, and the entanglement witness"};

  std::string mode_text;
  std::optional<double> beta, omega0_hz, temperature_k, coupling_rad_s,
      coupling_hz;
  double tau_max_s = 0.002, beta_min = 0.0, beta_max = 0.0;
  std::size_t steps = 401;
  std::string out;

  app.add_option("--mode", mode_text,
                 "sweep-tau | sweep-beta | single (single evaluates at "
                 "--tau-max-s)")
      ->required();
  app.add_option("--beta", beta, "dimensionless inverse temperature");
  app.add_option("--omega0-hz", omega0_hz,
                 "Larmor frequency in Hz (omega0 = 2 pi f)");
  app.add_option("--temperature-k", temperature_k, "temperature in kelvin");
  auto* rad = app.add_option("--coupling-rad-s", coupling_rad_s,
                             "coupling constant b in rad/s");
  auto* hz = app.add_option("--coupling-hz", coupling_hz,
                            "coupling constant in Hz (b = 2 pi f)");
  rad->excludes(hz);
  hz->excludes(rad);
  app.add_option("--tau-max-s", tau_max_s,
                 "preparation-time upper bound in seconds")
      ->capture_default_str();
  app.add_option("--beta-min", beta_min, "sweep-beta lower bound");
  app.add_option("--beta-max", beta_max, "sweep-beta upper bound");
  app.add_option("--steps", steps, "grid points")->capture_default_str();
  app.add_option("--out", out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  apply_tolerance_env();

  mqnmr::SweepConfig cfg;
  cfg.mode = parse_mode(mode_text);
  cfg.beta = beta;
  if (omega0_hz) cfg.omega0 = 2.0 * std::numbers::pi * *omega0_hz;
  cfg.temperature = temperature_k;
  if (!coupling_rad_s && !coupling_hz)
    throw mqnmr::config_error("coupling-rad-s",
                              "one of --coupling-rad-s or --coupling-hz is "
                              "required");
  cfg.coupling = coupling_rad_s
                     ? *coupling_rad_s
                     : 2.0 * std::numbers::pi * *coupling_hz;
  cfg.tau_max = tau_max_s;
  cfg.beta_min = beta_min;
  cfg.beta_max = beta_max;
  cfg.steps = steps;
  cfg.out = out;

  std::vector<mqnmr::SweepRow> rows;
  switch (cfg.mode) {
    case mqnmr::SweepMode::sweep_tau:
      rows = mqnmr::run_sweep_tau(cfg);
      break;
    case mqnmr::SweepMode::sweep_beta:
      rows = mqnmr::run_sweep_beta(cfg);
      break;
    case mqnmr::SweepMode::single:
      rows = mqnmr::run_single(cfg);
      break;
  }
  mqnmr::emit_csv(rows, cfg.mode, cfg.out);
  std::cout << "wrote " << rows.size() << " rows to " << cfg.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mqnmr::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const mqnmr::numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
