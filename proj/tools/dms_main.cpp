// Command-line front end: sample realizations, estimate correlations and
// diffraction, emit reports, and run the verification suite.

#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "dms/commands.hpp"

namespace {

using dms::cli::RunConfig;

void add_common_options(CLI::App* cmd, RunConfig& cfg, std::string& model_name,
                        std::string& h_plus, std::string& h_minus, std::string& config_path) {
  cmd->add_option("--model", model_name, "toy | dms | factory | tmcover")
      ->default_val("dms");
  cmd->add_option("--radius", cfg.radius, "window radius N (positions -N..N)")
      ->default_val(10000);
  cmd->add_option("--seed", cfg.seed, "64-bit sampler seed")->default_val(1);
  cmd->add_option("--hplus", h_plus, "weight of +1 spins, decimal or p/q, optional +bi part")
      ->default_val("1");
  cmd->add_option("--hminus", h_minus, "weight of -1 spins")->default_val("-1");
  cmd->add_option("--trials", cfg.trials, "independent realizations to average")->default_val(1);
  cmd->add_option("--grid", cfg.grid_size, "wavenumber grid size over [0,1)")->default_val(512);
  cmd->add_option("--nmax", cfg.n_max, "correlation lag cutoff")->default_val(64);
  cmd->add_option("--qmax", cfg.q_max, "Bragg scan denominator bound")->default_val(4);
  cmd->add_option("--out", cfg.out_dir, "output directory")->default_val("out");
  cmd->add_flag("--svg", cfg.emit_svg, "also emit SVG plots");
  cmd->add_flag("!--no-csv", cfg.emit_csv, "skip CSV outputs");
  cmd->add_flag("!--no-json", cfg.emit_json, "skip JSON outputs");
  cmd->add_option("--config", config_path,
                  "plain key=value config file; explicit flags take precedence");
}

// Applies the CLI strings and then the config file, file entries losing to
// flags that were given explicitly. Returns the keys the file applied.
std::set<std::string> finalize(CLI::App* cmd, RunConfig& cfg, const std::string& model_name,
                               const std::string& h_plus, const std::string& h_minus,
                               const std::string& config_path) {
  cfg.model = dms::parse_model(model_name);
  cfg.weights.h_plus = dms::parse_rational_complex(h_plus);
  cfg.weights.h_minus = dms::parse_rational_complex(h_minus);
  if (config_path.empty()) return {};

  std::set<std::string> given;
  const std::pair<const char*, const char*> flags[] = {
      {"--model", "model"},   {"--radius", "radius"}, {"--seed", "seed"},
      {"--hplus", "hplus"},   {"--hminus", "hminus"}, {"--trials", "trials"},
      {"--grid", "grid"},     {"--nmax", "nmax"},     {"--qmax", "qmax"},
      {"--out", "out"},       {"--svg", "svg"},       {"--no-csv", "csv"},
      {"--no-json", "json"}};
  for (const auto& [flag, key] : flags)
    if (cmd->count(flag) > 0) given.insert(key);
  return dms::cli::apply_config_file(cfg, config_path, given);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"close-packed dimer sequences: sampling, autocorrelation, and diffraction"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string model_name = "dms", h_plus = "1", h_minus = "-1", config_path;

  auto* sample = app.add_subcommand("sample", "emit one realization and its weighted comb");
  auto* autocorr = app.add_subcommand("autocorr", "estimate pair correlations");
  auto* diffract = app.add_subcommand("diffract", "periodogram, Bragg scan, smoothed density");
  auto* dynamics = app.add_subcommand("dynamics", "eigenfunction and spectral-density report");
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  auto* compare = app.add_subcommand("compare", "check an emitted estimate against an exact measure");

  for (auto* cmd : {sample, autocorr, diffract, dynamics, verify})
    add_common_options(cmd, cfg, model_name, h_plus, h_minus, config_path);

  double tolerance_scale = 1.0;
  verify->add_option("--tolerance-scale", tolerance_scale,
                     "multiplies every statistical tolerance (exact checks unaffected)")
      ->default_val(1.0);

  std::string grid_csv, measure_json;
  double compare_tolerance = 0.05;
  compare->add_option("csv", grid_csv, "density/periodogram CSV")->required();
  compare->add_option("json", measure_json, "exact measure JSON")->required();
  compare->add_option("--tolerance", compare_tolerance, "max-abs acceptance bound")
      ->default_val(0.05);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compare->parsed())
      return dms::cli::cmd_compare(grid_csv, measure_json, compare_tolerance);

    CLI::App* active = nullptr;
    for (auto* cmd : {sample, autocorr, diffract, dynamics, verify})
      if (cmd->parsed()) active = cmd;
    const auto from_file = finalize(active, cfg, model_name, h_plus, h_minus, config_path);

    if (sample->parsed()) return dms::cli::cmd_sample(cfg);
    if (autocorr->parsed()) return dms::cli::cmd_autocorr(cfg);
    if (diffract->parsed()) return dms::cli::cmd_diffract(cfg);
    if (dynamics->parsed()) return dms::cli::cmd_dynamics(cfg);
    if (verify->parsed()) {
      cfg.tolerance_scale = tolerance_scale;
      cfg.model_filter = verify->count("--model") > 0 || from_file.count("model") > 0;
      return dms::cli::cmd_verify(cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
