#pragma once

#include <vector>

#include "dms/comb.hpp"
#include "dms/measure.hpp"
#include "dms/rational.hpp"

namespace dms::spectra {

// Finite-volume diffraction estimate I_N(k) = |sum_n w_n e^{-2 pi i k n}|^2
// / (2N+1) on the uniform grid k = g/G over [0, 1).
struct Periodogram {
  int grid_size = 0;
  int radius = 0;
  int trials = 1;
  std::vector<double> values;

  double k(int g) const { return static_cast<double>(g) / grid_size; }
};

// Grid periodogram via the folded transform: weights are binned by n mod G,
// then one G-point DFT (radix-2 FFT when G is a power of two) gives every
// grid value. O(N + G log G) and exactly the same sum as the direct path up
// to floating-point reordering.
Periodogram periodogram(const correlation::WeightedComb& c, int grid_size);

// Direct evaluation, one phase sum per grid point; parallel over the grid.
Periodogram periodogram_direct(const correlation::WeightedComb& c, int grid_size);

// Single-thread direct reference with per-term std::polar phases; the oracle
// the other paths are tested against.
Periodogram periodogram_direct_serial(const correlation::WeightedComb& c, int grid_size);

// Point-mass extraction at an exact rational k: I_N(k) / (2N+1). Grows to the
// Bragg intensity at genuine peaks and decays like 1/N elsewhere.
double bragg_estimate(const correlation::WeightedComb& c, const Rational& k);

// One candidate point mass at k = p/q.
struct BraggPeak {
  Rational k;
  double intensity = 0.0;   // I_N(k) / (2N+1)
  bool is_peak = false;     // passed the scaling test
};

// Scans every reduced p/q with q <= q_max. A point mass is declared when
// I_N(k) exceeds 10x the average of I_N over the neighboring grid points
// k +/- g/G, g <= 3, and also clears the sqrt(2N+1) scaling floor (delta
// peaks scale like N, the ac background like 1).
std::vector<BraggPeak> detect_bragg(const correlation::WeightedComb& c, int q_max, int grid_size);

// Detected peaks as an exact point part (dyadic intensities) on the common
// denominator, ready for subtraction before density smoothing.
PointPart peaks_to_point_part(const std::vector<BraggPeak>& peaks);

}  // namespace dms::spectra
