#pragma once

#include <vector>

#include "dms/autocorr.hpp"
#include "dms/measure.hpp"

namespace dms::spectra {

// Density estimate sampled on the uniform grid k = g/G over [0, 1).
struct GridDensity {
  int grid_size = 0;
  std::vector<double> values;

  double k(int g) const { return static_cast<double>(g) / grid_size; }
};

// Cesaro-smoothed density estimate: the known point part's q-periodic
// autocorrelation pattern is subtracted from the estimated coefficients,
// then d(k) = sum_{|n| <= n_max} (1 - |n|/(n_max+1)) eta(n) e^{-2 pi i k n}
// (real part). Triangular weights keep the estimate of a true density
// nonnegative up to the subtraction error.
GridDensity fejer_density(const correlation::AutocorrSeq& a, int grid_size,
                          const PointPart& peaks);

// Single-thread reference for the grid evaluation; kept for testing.
GridDensity fejer_density_serial(const correlation::AutocorrSeq& a, int grid_size,
                                 const PointPart& peaks);

}  // namespace dms::spectra
