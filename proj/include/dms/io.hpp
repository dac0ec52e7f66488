#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dms/autocorr.hpp"
#include "dms/comb.hpp"
#include "dms/fejer.hpp"
#include "dms/measure.hpp"
#include "dms/periodogram.hpp"
#include "dms/sequence.hpp"

namespace dms::io {

inline constexpr const char* kToolVersion = "dms 1.0.0";

// Run description stamped into every emitted file. CSV carries it as leading
// "# key=value" lines, JSON as a "meta" object.
struct Metadata {
  std::string model;
  std::string weights;  // exact "h+,h-" string
  int radius = 0;
  std::uint64_t seed = 0;
  int trials = 1;
  int grid_size = 0;
  int n_max = 0;
  std::string rng;
  std::string tool_version = kToolVersion;

  std::string csv_block() const;
  std::string json_object() const;
};

// True when two artifacts describe the same run (tool version aside).
bool metadata_compatible(const Metadata& a, const Metadata& b);

// Lossless double formatting (17 significant digits), used by every writer
// so data payloads round-trip bit-exactly.
std::string format_double(double x);

void write_spin_sequence_csv(const std::string& path, const ensembles::SpinSequence& w,
                             const Metadata& meta);
void write_real_sequence_csv(const std::string& path, const ensembles::RealSequence& v,
                             const Metadata& meta);
void write_comb_csv(const std::string& path, const correlation::WeightedComb& c,
                    const Metadata& meta);
void write_sequence_json(const std::string& path, int radius,
                         const std::vector<double>& values, const Metadata& meta);
void write_autocorr_csv(const std::string& path, const correlation::AutocorrSeq& a,
                        const Metadata& meta);
void write_autocorr_json(const std::string& path, const correlation::AutocorrSeq& a,
                         const Metadata& meta);

// k,value rows for periodograms and density estimates.
void write_grid_csv(const std::string& path, int grid_size, const std::vector<double>& values,
                    const Metadata& meta);

void write_measure_json(const std::string& path, const spectra::MixedMeasure& m,
                        const Metadata& meta);
void write_bragg_csv(const std::string& path, const std::vector<spectra::BraggPeak>& peaks,
                     const Metadata& meta);

// Readers for the verify/compare path. They parse the metadata block and the
// payload; malformed files throw std::runtime_error with the path.
Metadata read_metadata_csv(const std::string& path);
Metadata read_metadata_json(const std::string& path);
std::vector<std::pair<double, double>> read_grid_csv(const std::string& path);
spectra::MixedMeasure read_measure_json(const std::string& path);

// Static report plot: empirical curve, exact density overlay, point-mass
// markers, axes with ticks.
void svg_density_plot(const std::string& path, const spectra::GridDensity& empirical,
                      const spectra::MixedMeasure& exact,
                      const std::vector<spectra::BraggPeak>& peaks, const std::string& title);

ensembles::RealSequence read_real_sequence_csv(const std::string& path);

}  // namespace dms::io
