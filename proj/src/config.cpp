#include "dms/config.hpp"

#include <fstream>
#include <stdexcept>

namespace dms::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

bool parse_bool(const std::string& value, const std::string& key) {
  if (value == "1" || value == "true" || value == "on") return true;
  if (value == "0" || value == "false" || value == "off") return false;
  throw std::invalid_argument("config: bad boolean for " + key + ": " + value);
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.radius < 1) throw std::invalid_argument("config: radius must be >= 1");
  if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (cfg.grid_size < 2) throw std::invalid_argument("config: grid size must be >= 2");
  if (cfg.n_max < 0) throw std::invalid_argument("config: n_max must be >= 0");
  if (cfg.q_max < 1) throw std::invalid_argument("config: q_max must be >= 1");
  if (cfg.tolerance_scale < 0) throw std::invalid_argument("config: tolerance scale must be >= 0");
  if (cfg.out_dir.empty()) throw std::invalid_argument("config: output directory required");
}

std::set<std::string> apply_config_file(RunConfig& cfg, const std::string& path,
                                        const std::set<std::string>& given) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);

  std::set<std::string> applied;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key=value at " + path + ":" +
                                  std::to_string(line_no));
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (given.count(key)) continue;  // command line wins
    applied.insert(key);

    if (key == "model") cfg.model = parse_model(value);
    else if (key == "radius") cfg.radius = std::stoi(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "hplus") cfg.weights.h_plus = parse_rational_complex(value);
    else if (key == "hminus") cfg.weights.h_minus = parse_rational_complex(value);
    else if (key == "trials") cfg.trials = std::stoi(value);
    else if (key == "grid") cfg.grid_size = std::stoi(value);
    else if (key == "nmax") cfg.n_max = std::stoi(value);
    else if (key == "qmax") cfg.q_max = std::stoi(value);
    else if (key == "out") cfg.out_dir = value;
    else if (key == "svg") cfg.emit_svg = parse_bool(value, key);
    else if (key == "csv") cfg.emit_csv = parse_bool(value, key);
    else if (key == "json") cfg.emit_json = parse_bool(value, key);
    else
      throw std::invalid_argument("config: unknown key '" + key + "' at " + path + ":" +
                                  std::to_string(line_no));
  }
  return applied;
}

io::Metadata make_metadata(const RunConfig& cfg) {
  io::Metadata m;
  m.model = to_string(cfg.model);
  m.weights = cfg.weights.str();
  m.radius = cfg.radius;
  m.seed = cfg.seed;
  m.trials = cfg.trials;
  m.grid_size = cfg.grid_size;
  m.n_max = cfg.n_max;
  m.rng = ensembles::kRngAlgorithm;
  return m;
}

}  // namespace dms::cli
