#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "dms/comb.hpp"
#include "dms/io.hpp"
#include "dms/model.hpp"
#include "dms/sampler.hpp"

namespace dms::cli {

// One run description shared by every subcommand; serialized verbatim into
// the metadata block of each emitted file.
struct RunConfig {
  Model model = Model::DMS;
  correlation::WeightMap weights;  // default balanced (1, -1)
  int radius = 10000;
  std::uint64_t seed = 1;
  int trials = 1;
  int grid_size = 512;
  int n_max = 64;
  int q_max = 4;
  std::string out_dir = "out";
  bool emit_csv = true;
  bool emit_json = true;
  bool emit_svg = false;

  // verify-only knobs
  double tolerance_scale = 1.0;
  bool model_filter = false;  // restrict the acceptance suite to `model`
};

// Rejects non-positive sizes before anything is written.
void validate(const RunConfig& cfg);

io::Metadata make_metadata(const RunConfig& cfg);

// Plain key=value run description ('#' comments and blank lines allowed).
// Keys mirror the CLI flags: model, radius, seed, hplus, hminus, trials,
// grid, nmax, qmax, out, svg, csv, json. Unknown keys are rejected.
// `given` lists the keys already fixed on the command line; those win over
// the file. Returns the keys the file actually applied.
std::set<std::string> apply_config_file(RunConfig& cfg, const std::string& path,
                                        const std::set<std::string>& given);

}  // namespace dms::cli
