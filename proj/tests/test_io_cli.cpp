#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dms/commands.hpp"
#include "dms/io.hpp"
#include "dms/realize.hpp"
#include "dms/sampler.hpp"
#include "dms/verify.hpp"

using namespace dms;
using namespace dms::io;
using dms::cli::RunConfig;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path temp_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "dms_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Metadata sample_meta() {
  Metadata m;
  m.model = "dms";
  m.weights = "1,-1";
  m.radius = 100;
  m.seed = 7;
  m.trials = 1;
  m.grid_size = 512;
  m.n_max = 64;
  m.rng = "mt19937_64";
  return m;
}

int count_data_rows(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  int rows = 0;
  bool header_seen = false;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    ++rows;
  }
  return rows;
}

}  // namespace

TEST_CASE("double formatting round trip") {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, 123456.789, -0.25}) {
    CHECK(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("real sequence CSV round trip is bit exact") {
  const auto dir = temp_dir("roundtrip");
  const auto v = ensembles::tm_cover_sample({Model::TMCover, 100, 3});
  const auto path = (dir / "seq.csv").string();
  write_real_sequence_csv(path, v, sample_meta());
  const auto back = read_real_sequence_csv(path);
  CHECK(back.radius() == v.radius());
  CHECK(back.values() == v.values());
}

TEST_CASE("metadata blocks") {
  const auto dir = temp_dir("meta");
  const auto meta = sample_meta();

  const auto w = ensembles::sample_dms({Model::DMS, 5, 1});
  const auto path = (dir / "w.csv").string();
  write_spin_sequence_csv(path, w, meta);
  const auto parsed = read_metadata_csv(path);
  CHECK(parsed.model == "dms");
  CHECK(parsed.weights == "1,-1");
  CHECK(parsed.radius == 100);
  CHECK(parsed.seed == 7);
  CHECK(metadata_compatible(parsed, meta));

  Metadata other = meta;
  other.seed = 8;
  CHECK(!metadata_compatible(parsed, other));
  Metadata version_only = meta;
  version_only.tool_version = "dms 9.9.9";
  CHECK(metadata_compatible(parsed, version_only));
}

TEST_CASE("measure JSON round trip keeps exact values") {
  const auto dir = temp_dir("measure");
  correlation::WeightMap h;
  h.h_plus = parse_rational_complex("1");
  h.h_minus = parse_rational_complex("1/3");
  const auto m = spectra::closed_diffraction(Model::FactorY, h);
  const auto path = (dir / "measure.json").string();
  write_measure_json(path, m, sample_meta());
  const auto back = read_measure_json(path);
  CHECK(back.point == m.point);
  CHECK(back.ac.coefficients == m.ac.coefficients);
  CHECK(back.period_mass() == m.period_mass());
}

TEST_CASE("grid CSV writer and reader") {
  const auto dir = temp_dir("grid");
  const auto path = (dir / "grid.csv").string();
  write_grid_csv(path, 4, {1.0, 0.5, 0.25, 0.125}, sample_meta());
  const auto rows = read_grid_csv(path);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1].first == 0.25);
  CHECK(rows[3].second == 0.125);
}

TEST_CASE("svg report contents") {
  const auto dir = temp_dir("svg");
  spectra::GridDensity d;
  d.grid_size = 64;
  d.values.assign(64, 0.5);
  const auto exact = spectra::closed_diffraction(Model::FactorY, correlation::WeightMap{});
  std::vector<spectra::BraggPeak> peaks(1);
  peaks[0].k = Rational(1, 2);
  peaks[0].intensity = 0.25;
  peaks[0].is_peak = true;
  const auto path = (dir / "plot.svg").string();
  svg_density_plot(path, d, exact, peaks, "factor diffraction");
  const auto text = slurp(path);
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text.find("polyline") != std::string::npos);
  CHECK(text.find("circle") != std::string::npos);
  CHECK(text.find("factor diffraction") != std::string::npos);
}

TEST_CASE("config validation") {
  RunConfig cfg;
  cfg.out_dir = temp_dir("cfg").string();
  CHECK_NOTHROW(cli::validate(cfg));
  RunConfig bad = cfg;
  bad.radius = 0;
  CHECK_THROWS_AS(cli::validate(bad), std::invalid_argument);
  bad = cfg;
  bad.grid_size = 1;
  CHECK_THROWS_AS(cli::validate(bad), std::invalid_argument);
  bad = cfg;
  bad.out_dir = "";
  CHECK_THROWS_AS(cli::validate(bad), std::invalid_argument);

  const auto meta = cli::make_metadata(cfg);
  CHECK(meta.model == "dms");
  CHECK(meta.rng == std::string(ensembles::kRngAlgorithm));
  CHECK(meta.weights == "1,-1");
}

TEST_CASE("config file application and precedence") {
  const auto dir = temp_dir("config_file");
  const auto path = (dir / "run.cfg").string();
  {
    std::ofstream out(path);
    out << "# demo run\n"
        << "model = factory\n"
        << "radius=2048\n"
        << "seed=5\n"
        << "hplus=1/2+1/2i\n"
        << "svg=1\n";
  }
  RunConfig cfg;
  const auto applied = cli::apply_config_file(cfg, path, {"seed"});
  CHECK(cfg.model == Model::FactorY);
  CHECK(cfg.radius == 2048);
  CHECK(cfg.seed == 1);  // command line had already fixed it
  CHECK(cfg.weights.h_plus == RationalComplex(Rational(1, 2), Rational(1, 2)));
  CHECK(cfg.emit_svg);
  CHECK(applied.count("model") == 1);
  CHECK(applied.count("seed") == 0);

  {
    std::ofstream out(path);
    out << "bogus=1\n";
  }
  RunConfig other;
  CHECK_THROWS_AS(cli::apply_config_file(other, path, {}), std::invalid_argument);
  CHECK_THROWS_AS(cli::apply_config_file(other, (dir / "missing.cfg").string(), {}),
                  std::runtime_error);
}

TEST_CASE("sample command emits the window and comb") {
  RunConfig cfg;
  cfg.radius = 1000;
  cfg.seed = 7;
  cfg.out_dir = temp_dir("sample").string();
  CHECK(cli::cmd_sample(cfg) == 0);

  const auto csv = slurp(fs::path(cfg.out_dir) / "sequence.csv");
  CHECK(count_data_rows(csv) == 2001);
  CHECK(csv.find("# model=dms") != std::string::npos);
  CHECK(csv.find("# seed=7") != std::string::npos);

  // Reruns are byte-identical.
  const auto again = temp_dir("sample_again");
  RunConfig cfg2 = cfg;
  cfg2.out_dir = again.string();
  CHECK(cli::cmd_sample(cfg2) == 0);
  CHECK(slurp(fs::path(cfg.out_dir) / "sequence.csv") == slurp(again / "sequence.csv"));
  CHECK(slurp(fs::path(cfg.out_dir) / "sequence.json") == slurp(again / "sequence.json"));

  // Cover samples hold the four admissible values.
  RunConfig cover = cfg;
  cover.model = Model::TMCover;
  cover.radius = 8192;
  cover.seed = 1;
  cover.out_dir = temp_dir("sample_cover").string();
  CHECK(cli::cmd_sample(cover) == 0);
  const auto v = read_real_sequence_csv((fs::path(cover.out_dir) / "sequence.csv").string());
  std::set<double> magnitudes;
  for (double x : v.values()) magnitudes.insert(std::abs(x));
  CHECK(magnitudes == std::set<double>{0.2, 1.4});
}

TEST_CASE("autocorr command") {
  RunConfig cfg;
  cfg.radius = 2000;
  cfg.n_max = 16;
  cfg.out_dir = temp_dir("autocorr").string();
  CHECK(cli::cmd_autocorr(cfg) == 0);
  const auto csv = slurp(fs::path(cfg.out_dir) / "autocorr.csv");
  CHECK(count_data_rows(csv) == 17);
  const auto j = json::parse(slurp(fs::path(cfg.out_dir) / "autocorr.json"));
  CHECK(j.at("normalization").get<std::string>() ==
        std::string(correlation::kPerLagTermCount));
  CHECK(j.at("re").size() == 17);
}

TEST_CASE("diffract command and artifact comparison") {
  RunConfig cfg;
  cfg.model = Model::FactorY;
  cfg.radius = 4096;
  cfg.seed = 11;
  cfg.trials = 4;
  cfg.n_max = 48;
  cfg.emit_svg = true;
  cfg.out_dir = temp_dir("diffract").string();
  CHECK(cli::cmd_diffract(cfg) == 0);

  const fs::path dir(cfg.out_dir);
  for (const char* name : {"periodogram.csv", "density.csv", "bragg.csv", "closed.json",
                           "diffract.svg"})
    CHECK(fs::exists(dir / name));

  // The Bragg table flags the two factor point masses.
  const auto bragg = slurp(dir / "bragg.csv");
  std::istringstream lines(bragg);
  std::string line;
  int flagged = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("p,", 0) == 0) continue;
    if (line.back() == '1') ++flagged;
  }
  CHECK(flagged == 2);

  // Density vs exact measure through the comparison path.
  CHECK(cli::cmd_compare((dir / "density.csv").string(), (dir / "closed.json").string(), 0.1) ==
        0);

  // A run with a different seed refuses to compare.
  RunConfig other = cfg;
  other.seed = 12;
  other.out_dir = temp_dir("diffract_other").string();
  CHECK(cli::cmd_diffract(other) == 0);
  CHECK(cli::cmd_compare((dir / "density.csv").string(),
                         (fs::path(other.out_dir) / "closed.json").string(), 0.1) == 2);
}

TEST_CASE("dynamics command report") {
  RunConfig cfg;
  cfg.radius = 10000;
  cfg.seed = 13;
  cfg.n_max = 32;
  cfg.grid_size = 128;
  cfg.out_dir = temp_dir("dynamics").string();
  CHECK(cli::cmd_dynamics(cfg) == 0);
  const auto j = json::parse(slurp(fs::path(cfg.out_dir) / "dynamics.json"));
  const auto cls = j.at("class").get<std::string>();
  CHECK((cls == "even" || cls == "odd"));
  const double psi = j.at("psi_hat").get<double>();
  CHECK(std::abs(std::abs(psi) - 1.0) <= 0.05);
  CHECK(j.at("eigen_residual").get<double>() <= 0.05);
  CHECK(j.at("sigma_density_error").get<double>() <= 0.2);

  RunConfig bad = cfg;
  bad.model = Model::TMCover;
  CHECK_THROWS_AS(cli::cmd_dynamics(bad), std::invalid_argument);
}

TEST_CASE("verify command with zero tolerance fails statistically") {
  RunConfig cfg;
  cfg.model = Model::TMCover;
  cfg.model_filter = true;  // cover criteria only, to keep this test quick
  cfg.tolerance_scale = 0.0;
  cfg.out_dir = temp_dir("verify_zero").string();
  CHECK(cli::cmd_verify(cfg) == 1);

  const auto j = json::parse(slurp(fs::path(cfg.out_dir) / "verify.json"));
  CHECK(j.at("all_pass").get<bool>() == false);
  bool statistical_failure = false;
  bool provenance_present = true;
  for (const auto& check : j.at("checks")) {
    if (check.at("statistical").get<bool>() && !check.at("pass").get<bool>())
      statistical_failure = true;
    provenance_present =
        provenance_present && !check.at("provenance").get<std::string>().empty();
  }
  CHECK(statistical_failure);
  CHECK(provenance_present);

  // Exact checks are untouched by the scale.
  for (const auto& check : j.at("checks"))
    if (!check.at("statistical").get<bool>()) CHECK(check.at("pass").get<bool>());
}

TEST_CASE("verify report structure at normal tolerances") {
  const auto report = verify::run_acceptance(1.0, Model::TMCover);
  CHECK(report.all_pass());
  std::set<int> criteria;
  for (const auto& c : report.checks) criteria.insert(c.criterion);
  CHECK(criteria == std::set<int>{1, 6});
  std::ostringstream out;
  verify::print_report(report, out);
  CHECK(out.str().find("PASS criterion 1") != std::string::npos);
  CHECK(out.str().find("PASS criterion 6") != std::string::npos);
  CHECK(out.str().find("ALL CRITERIA PASS") != std::string::npos);
}
