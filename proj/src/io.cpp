#include "dms/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dms::io {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

json meta_to_json(const Metadata& m) {
  return json{{"model", m.model},     {"weights", m.weights}, {"radius", m.radius},
              {"seed", m.seed},       {"trials", m.trials},   {"grid_size", m.grid_size},
              {"n_max", m.n_max},     {"rng", m.rng},         {"tool_version", m.tool_version}};
}

Metadata meta_from_json(const json& j) {
  Metadata m;
  m.model = j.at("model").get<std::string>();
  m.weights = j.at("weights").get<std::string>();
  m.radius = j.at("radius").get<int>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.trials = j.at("trials").get<int>();
  m.grid_size = j.at("grid_size").get<int>();
  m.n_max = j.at("n_max").get<int>();
  m.rng = j.value("rng", "");
  m.tool_version = j.value("tool_version", "");
  return m;
}

void write_json_file(const std::string& path, const json& j) {
  auto out = open_out(path);
  out << j.dump(2) << "\n";
}

json load_json_file(const std::string& path) {
  auto in = open_in(path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string Metadata::csv_block() const {
  std::ostringstream out;
  out << "# model=" << model << "\n";
  out << "# weights=" << weights << "\n";
  out << "# radius=" << radius << "\n";
  out << "# seed=" << seed << "\n";
  out << "# trials=" << trials << "\n";
  out << "# grid_size=" << grid_size << "\n";
  out << "# n_max=" << n_max << "\n";
  out << "# rng=" << rng << "\n";
  out << "# tool_version=" << tool_version << "\n";
  return out.str();
}

std::string Metadata::json_object() const { return meta_to_json(*this).dump(2); }

bool metadata_compatible(const Metadata& a, const Metadata& b) {
  return a.model == b.model && a.weights == b.weights && a.radius == b.radius &&
         a.seed == b.seed && a.trials == b.trials && a.grid_size == b.grid_size &&
         a.n_max == b.n_max;
}

void write_spin_sequence_csv(const std::string& path, const ensembles::SpinSequence& w,
                             const Metadata& meta) {
  auto out = open_out(path);
  out << meta.csv_block() << "position,value\n";
  for (int n = -w.radius(); n <= w.radius(); ++n)
    out << n << "," << static_cast<int>(w.at(n)) << "\n";
}

void write_real_sequence_csv(const std::string& path, const ensembles::RealSequence& v,
                             const Metadata& meta) {
  auto out = open_out(path);
  out << meta.csv_block() << "position,value\n";
  for (int n = -v.radius(); n <= v.radius(); ++n)
    out << n << "," << format_double(v.at(n)) << "\n";
}

void write_comb_csv(const std::string& path, const correlation::WeightedComb& c,
                    const Metadata& meta) {
  auto out = open_out(path);
  out << meta.csv_block() << "position,re,im\n";
  for (int n = -c.radius(); n <= c.radius(); ++n)
    out << n << "," << format_double(c.at(n).real()) << "," << format_double(c.at(n).imag())
        << "\n";
}

void write_sequence_json(const std::string& path, int radius, const std::vector<double>& values,
                         const Metadata& meta) {
  json j;
  j["meta"] = meta_to_json(meta);
  j["radius"] = radius;
  j["origin_index"] = radius;
  j["values"] = values;
  write_json_file(path, j);
}

void write_autocorr_csv(const std::string& path, const correlation::AutocorrSeq& a,
                        const Metadata& meta) {
  auto out = open_out(path);
  out << meta.csv_block() << "lag,re,im\n";
  for (int n = 0; n <= a.max_lag; ++n)
    out << n << "," << format_double(a.at(n).real()) << "," << format_double(a.at(n).imag())
        << "\n";
}

void write_autocorr_json(const std::string& path, const correlation::AutocorrSeq& a,
                         const Metadata& meta) {
  json j;
  j["meta"] = meta_to_json(meta);
  j["max_lag"] = a.max_lag;
  j["normalization"] = a.normalization;
  json re = json::array(), im = json::array();
  for (int n = 0; n <= a.max_lag; ++n) {
    re.push_back(a.at(n).real());
    im.push_back(a.at(n).imag());
  }
  j["re"] = re;
  j["im"] = im;
  write_json_file(path, j);
}

void write_grid_csv(const std::string& path, int grid_size, const std::vector<double>& values,
                    const Metadata& meta) {
  auto out = open_out(path);
  out << meta.csv_block() << "k,value\n";
  for (int g = 0; g < grid_size; ++g)
    out << format_double(static_cast<double>(g) / grid_size) << ","
        << format_double(values[static_cast<std::size_t>(g)]) << "\n";
}

void write_measure_json(const std::string& path, const spectra::MixedMeasure& m,
                        const Metadata& meta) {
  json j;
  j["meta"] = meta_to_json(meta);
  json intensities = json::array(), exact = json::array();
  for (const auto& v : m.point.intensities) {
    intensities.push_back(v.to_double());
    exact.push_back(v.str());
  }
  j["point"] = {{"q", m.point.denominator}, {"intensities", intensities},
                {"intensities_exact", exact}};
  json coeffs = json::array(), coeffs_exact = json::array();
  for (const auto& a : m.ac.coefficients) {
    coeffs.push_back(a.to_double());
    coeffs_exact.push_back(a.str());
  }
  j["ac"] = {{"coeffs", coeffs}, {"coeffs_exact", coeffs_exact}};
  write_json_file(path, j);
}

void write_bragg_csv(const std::string& path, const std::vector<spectra::BraggPeak>& peaks,
                     const Metadata& meta) {
  auto out = open_out(path);
  out << meta.csv_block() << "p,q,k,intensity,is_peak\n";
  for (const auto& peak : peaks)
    out << peak.k.num() << "," << peak.k.den() << "," << format_double(peak.k.to_double()) << ","
        << format_double(peak.intensity) << "," << (peak.is_peak ? 1 : 0) << "\n";
}

Metadata read_metadata_csv(const std::string& path) {
  auto in = open_in(path);
  Metadata m;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] != '#') break;
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(2, eq - 2);
    std::string value = line.substr(eq + 1);
    if (key == "model") m.model = value;
    else if (key == "weights") m.weights = value;
    else if (key == "radius") m.radius = std::stoi(value);
    else if (key == "seed") m.seed = std::stoull(value);
    else if (key == "trials") m.trials = std::stoi(value);
    else if (key == "grid_size") m.grid_size = std::stoi(value);
    else if (key == "n_max") m.n_max = std::stoi(value);
    else if (key == "rng") m.rng = value;
    else if (key == "tool_version") m.tool_version = value;
  }
  return m;
}

Metadata read_metadata_json(const std::string& path) {
  return meta_from_json(load_json_file(path).at("meta"));
}

std::vector<std::pair<double, double>> read_grid_csv(const std::string& path) {
  auto in = open_in(path);
  std::vector<std::pair<double, double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("k,", 0) == 0) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("malformed CSV row in " + path);
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return rows;
}

spectra::MixedMeasure read_measure_json(const std::string& path) {
  const json j = load_json_file(path);
  spectra::MixedMeasure m;
  m.point.denominator = j.at("point").at("q").get<int>();
  for (const auto& s : j.at("point").at("intensities_exact"))
    m.point.intensities.push_back(parse_rational(s.get<std::string>()));
  for (const auto& s : j.at("ac").at("coeffs_exact"))
    m.ac.coefficients.push_back(parse_rational(s.get<std::string>()));
  m.point.validate();
  return m;
}

ensembles::RealSequence read_real_sequence_csv(const std::string& path) {
  auto in = open_in(path);
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("position,", 0) == 0) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("malformed CSV row in " + path);
    values.push_back(std::stod(line.substr(comma + 1)));
  }
  if (values.empty() || values.size() % 2 == 0)
    throw std::runtime_error("sequence CSV must hold an odd number of rows: " + path);
  const int radius = static_cast<int>(values.size() / 2);
  return ensembles::RealSequence(radius, std::move(values));
}

void svg_density_plot(const std::string& path, const spectra::GridDensity& empirical,
                      const spectra::MixedMeasure& exact,
                      const std::vector<spectra::BraggPeak>& peaks, const std::string& title) {
  const double width = 900, height = 480;
  const double ml = 60, mr = 20, mt = 40, mb = 50;
  const double pw = width - ml - mr, ph = height - mt - mb;

  double y_max = 1.0;
  for (double v : empirical.values) y_max = std::max(y_max, v);
  for (int g = 0; g < empirical.grid_size; ++g)
    y_max = std::max(y_max, exact.ac.value(static_cast<double>(g) / empirical.grid_size));
  for (const auto& peak : peaks)
    if (peak.is_peak) y_max = std::max(y_max, peak.intensity);
  y_max *= 1.1;

  auto x_of = [&](double k) { return ml + k * pw; };
  auto y_of = [&](double v) { return mt + ph - std::clamp(v, 0.0, y_max) / y_max * ph; };

  auto polyline = [&](const std::vector<double>& values, const char* style) {
    std::ostringstream s;
    s << "  <polyline fill=\"none\" " << style << " points=\"";
    for (std::size_t g = 0; g < values.size(); ++g) {
      const double k = static_cast<double>(g) / static_cast<double>(values.size());
      s << x_of(k) << "," << y_of(values[g]) << " ";
    }
    s << "\"/>\n";
    return s.str();
  };

  auto out = open_out(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
      << title << "</text>\n";

  // axes and ticks
  out << "  <line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
      << mt + ph << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
      << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double k = t / 4.0;
    out << "  <line x1=\"" << x_of(k) << "\" y1=\"" << mt + ph << "\" x2=\"" << x_of(k)
        << "\" y2=\"" << mt + ph + 5 << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << x_of(k) << "\" y=\"" << mt + ph + 20
        << "\" text-anchor=\"middle\" font-size=\"12\">" << k << "</text>\n";
  }
  for (int t = 0; t <= 4; ++t) {
    const double v = y_max * t / 4.0;
    out << "  <line x1=\"" << ml - 5 << "\" y1=\"" << y_of(v) << "\" x2=\"" << ml << "\" y2=\""
        << y_of(v) << "\" stroke=\"black\"/>\n";
    char label[32];
    std::snprintf(label, sizeof(label), "%.3g", v);
    out << "  <text x=\"" << ml - 8 << "\" y=\"" << y_of(v) + 4
        << "\" text-anchor=\"end\" font-size=\"12\">" << label << "</text>\n";
  }
  out << "  <text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-size=\"13\">k</text>\n";

  // exact density overlay
  std::vector<double> exact_curve(static_cast<std::size_t>(empirical.grid_size));
  for (int g = 0; g < empirical.grid_size; ++g)
    exact_curve[static_cast<std::size_t>(g)] =
        exact.ac.value(static_cast<double>(g) / empirical.grid_size);
  out << polyline(empirical.values, "stroke=\"steelblue\" stroke-width=\"1.5\"");
  out << polyline(exact_curve, "stroke=\"crimson\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"");

  // point-mass markers
  for (const auto& peak : peaks) {
    if (!peak.is_peak) continue;
    const double x = x_of(peak.k.to_double());
    out << "  <line x1=\"" << x << "\" y1=\"" << mt + ph << "\" x2=\"" << x << "\" y2=\""
        << y_of(peak.intensity) << "\" stroke=\"darkgreen\" stroke-width=\"2\"/>\n";
    out << "  <circle cx=\"" << x << "\" cy=\"" << y_of(peak.intensity)
        << "\" r=\"4\" fill=\"darkgreen\"/>\n";
  }

  out << "  <text x=\"" << ml + 10 << "\" y=\"" << mt + 16
      << "\" font-size=\"12\" fill=\"steelblue\">estimate</text>\n";
  out << "  <text x=\"" << ml + 10 << "\" y=\"" << mt + 32
      << "\" font-size=\"12\" fill=\"crimson\">exact density</text>\n";
  out << "  <text x=\"" << ml + 10 << "\" y=\"" << mt + 48
      << "\" font-size=\"12\" fill=\"darkgreen\">point masses</text>\n";
  out << "</svg>\n";
}

}  // namespace dms::io
