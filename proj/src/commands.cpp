#include "dms/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "dms/dynamics.hpp"
#include "dms/realize.hpp"
#include "dms/verify.hpp"

namespace dms::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string prepare_out_dir(const RunConfig& cfg) {
  fs::create_directories(cfg.out_dir);
  return cfg.out_dir;
}

std::string join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

std::vector<double> as_doubles(const ensembles::SpinSequence& w) {
  return std::vector<double>(w.values().begin(), w.values().end());
}

}  // namespace

int cmd_sample(const RunConfig& cfg) {
  validate(cfg);
  const auto meta = make_metadata(cfg);
  const auto dir = prepare_out_dir(cfg);

  if (cfg.model == Model::TMCover) {
    const auto v = ensembles::tm_cover_sample({cfg.model, cfg.radius, cfg.seed});
    if (cfg.emit_csv) io::write_real_sequence_csv(join(dir, "sequence.csv"), v, meta);
    if (cfg.emit_json) io::write_sequence_json(join(dir, "sequence.json"), v.radius(), v.values(), meta);
    if (cfg.emit_csv)
      io::write_comb_csv(join(dir, "comb.csv"), correlation::lift_real(v), meta);
    return 0;
  }

  ensembles::SpinSequence w = [&] {
    switch (cfg.model) {
      case Model::Toy: return ensembles::toy_sequences(cfg.radius).first;
      case Model::DMS: return ensembles::sample_dms({cfg.model, cfg.radius, cfg.seed});
      default: return ensembles::sample_factor_y({cfg.model, cfg.radius, cfg.seed});
    }
  }();
  if (cfg.emit_csv) io::write_spin_sequence_csv(join(dir, "sequence.csv"), w, meta);
  if (cfg.emit_json) io::write_sequence_json(join(dir, "sequence.json"), w.radius(), as_doubles(w), meta);
  if (cfg.emit_csv)
    io::write_comb_csv(join(dir, "comb.csv"), correlation::apply_weights(w, cfg.weights), meta);
  return 0;
}

int cmd_autocorr(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.n_max > 2 * cfg.radius)
    throw std::invalid_argument("autocorr: n_max must be at most 2N");
  const auto meta = make_metadata(cfg);
  const auto dir = prepare_out_dir(cfg);

  const auto comb = realize_comb(cfg.model, cfg.radius, cfg.seed, cfg.weights);
  const auto eta = correlation::empirical_autocorr(comb, cfg.n_max);
  if (cfg.emit_csv) io::write_autocorr_csv(join(dir, "autocorr.csv"), eta, meta);
  if (cfg.emit_json) io::write_autocorr_json(join(dir, "autocorr.json"), eta, meta);
  return 0;
}

int cmd_diffract(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.n_max > 2 * cfg.radius)
    throw std::invalid_argument("diffract: n_max must be at most 2N");
  const auto meta = make_metadata(cfg);
  const auto dir = prepare_out_dir(cfg);

  const auto averaged = trial_averaged_periodogram(cfg.model, cfg.weights, cfg.radius, cfg.seed,
                                                   cfg.trials, cfg.grid_size);

  // Bragg scan and correlation averaging over the same derived trial seeds.
  std::vector<spectra::BraggPeak> peaks;
  correlation::AutocorrSeq eta;
  for (int t = 0; t < cfg.trials; ++t) {
    const auto comb =
        realize_comb(cfg.model, cfg.radius, ensembles::trial_seed(cfg.seed, t), cfg.weights);
    const auto trial_peaks = spectra::detect_bragg(comb, cfg.q_max, cfg.grid_size);
    const auto trial_eta = correlation::empirical_autocorr(comb, cfg.n_max);
    if (t == 0) {
      peaks = trial_peaks;
      eta = trial_eta;
      continue;
    }
    for (std::size_t i = 0; i < peaks.size(); ++i) {
      peaks[i].intensity += trial_peaks[i].intensity;
      peaks[i].is_peak = peaks[i].is_peak && trial_peaks[i].is_peak;
    }
    for (auto n = 0; n <= cfg.n_max; ++n)
      eta.coefficients[static_cast<std::size_t>(n)] +=
          trial_eta.coefficients[static_cast<std::size_t>(n)];
  }
  for (auto& peak : peaks) peak.intensity /= cfg.trials;
  for (auto& c : eta.coefficients) c /= static_cast<double>(cfg.trials);

  const auto detected = spectra::peaks_to_point_part(peaks);
  const auto density = spectra::fejer_density(eta, cfg.grid_size, detected);
  const auto exact = spectra::closed_diffraction(cfg.model, cfg.weights);

  if (cfg.emit_csv) {
    io::write_grid_csv(join(dir, "periodogram.csv"), averaged.grid_size, averaged.values, meta);
    io::write_grid_csv(join(dir, "density.csv"), density.grid_size, density.values, meta);
    io::write_bragg_csv(join(dir, "bragg.csv"), peaks, meta);
  }
  if (cfg.emit_json) io::write_measure_json(join(dir, "closed.json"), exact, meta);
  if (cfg.emit_svg)
    io::svg_density_plot(join(dir, "diffract.svg"), density, exact, peaks,
                         "diffraction: " + to_string(cfg.model) + " (N=" +
                             std::to_string(cfg.radius) + ", trials=" +
                             std::to_string(cfg.trials) + ")");
  return 0;
}

int cmd_dynamics(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.model != Model::DMS && cfg.model != Model::Toy)
    throw std::invalid_argument("dynamics: only the dimer and toy models carry this report");
  const auto meta = make_metadata(cfg);
  const auto dir = prepare_out_dir(cfg);

  const auto w = cfg.model == Model::DMS
                     ? ensembles::sample_dms({cfg.model, cfg.radius, cfg.seed})
                     : ensembles::toy_sequences(cfg.radius).first;

  const double psi = dynamics::psi_estimate(w);
  const double residual = dynamics::eigen_relation_check(w);
  const auto density = dynamics::sigma_density_empirical(w, cfg.n_max, cfg.grid_size);
  const auto exact = dynamics::sigma_spectral_density();
  double worst = 0.0;
  for (int g = 0; g < density.grid_size; ++g)
    worst = std::max(worst,
                     std::abs(density.values[static_cast<std::size_t>(g)] - exact.value(density.k(g))));

  json j;
  j["meta"] = json::parse(meta.json_object());
  j["class"] = to_string(ensembles::classify(w));
  j["psi_hat"] = psi;
  j["eigen_residual"] = residual;
  j["sigma_density_error"] = worst;
  std::ofstream out(join(dir, "dynamics.json"), std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + join(dir, "dynamics.json"));
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  validate(cfg);
  const auto dir = prepare_out_dir(cfg);

  std::optional<Model> only;
  if (cfg.model_filter) only = cfg.model;
  const auto report = verify::run_acceptance(cfg.tolerance_scale, only);
  verify::print_report(report, std::cout);

  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"criterion", c.criterion},
                      {"name", c.name},
                      {"provenance", c.provenance},
                      {"expected", c.expected},
                      {"observed", c.observed},
                      {"tolerance", c.tolerance},
                      {"statistical", c.statistical},
                      {"pass", c.pass}});
  json timings = json::array();
  for (const auto& t : report.timings)
    timings.push_back({{"criterion", t.criterion},
                       {"seconds", t.seconds},
                       {"budget_seconds", t.budget_seconds},
                       {"pass", t.pass}});
  json j;
  j["meta"] = json::parse(make_metadata(cfg).json_object());
  j["tolerance_scale"] = cfg.tolerance_scale;
  j["checks"] = checks;
  j["timings"] = timings;
  j["all_pass"] = report.all_pass();
  std::ofstream out(join(dir, "verify.json"), std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + join(dir, "verify.json"));
  out << j.dump(2) << "\n";

  return report.all_pass() ? 0 : 1;
}

int cmd_compare(const std::string& grid_csv, const std::string& measure_json, double tolerance) {
  const auto meta_csv = io::read_metadata_csv(grid_csv);
  const auto meta_json = io::read_metadata_json(measure_json);
  if (!io::metadata_compatible(meta_csv, meta_json)) {
    std::cerr << "refusing to compare artifacts with mismatched metadata:\n"
              << grid_csv << ": " << meta_csv.csv_block() << measure_json << ": "
              << meta_json.csv_block();
    return 2;
  }

  const auto rows = io::read_grid_csv(grid_csv);
  const auto measure = io::read_measure_json(measure_json);
  double worst = 0.0;
  for (const auto& [k, value] : rows)
    worst = std::max(worst, std::abs(value - measure.ac.value(k)));
  const bool ok = worst <= tolerance;
  std::cout << (ok ? "PASS" : "FAIL") << " max |estimate - exact density| = "
            << io::format_double(worst) << " (tolerance " << io::format_double(tolerance)
            << ")\n";
  return ok ? 0 : 1;
}

}  // namespace dms::cli
