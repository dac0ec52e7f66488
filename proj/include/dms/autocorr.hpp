#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dms/comb.hpp"
#include "dms/sequence.hpp"

namespace dms::correlation {

// Estimated pair-correlation coefficients on lags 0..max_lag. Negative lags
// follow from Hermitian symmetry and are not stored. `normalization` records
// the denominator convention used by the estimator.
struct AutocorrSeq {
  int max_lag = 0;
  std::vector<std::complex<double>> coefficients;
  std::string normalization;

  std::complex<double> at(int lag) const {
    if (lag >= 0) return coefficients[static_cast<std::size_t>(lag)];
    return std::conj(coefficients[static_cast<std::size_t>(-lag)]);
  }
};

inline constexpr const char* kPerLagTermCount = "mean over the 2N+1-n in-window pairs per lag";
inline constexpr const char* kSigmaTermCount = "mean over the 2N-n in-window pair sums per lag";

// Pair-correlation estimate: coefficient(n) is the mean of conj(w_m)*w_{m+n}
// over every m with both indices in the window (2N+1-n terms). Requires
// 0 <= n_max <= 2N.
AutocorrSeq empirical_autocorr(const WeightedComb& c, int n_max);

// Single-thread reference for the kernel above; kept for testing.
AutocorrSeq empirical_autocorr_serial(const WeightedComb& c, int n_max);

// Correlation of the neighbor sums s_m = w_m + w_{m+1}: coefficient(n) is the
// mean of s_m * s_{m+n} over the 2N-n available m. Requires N >= n_max + 1.
AutocorrSeq sigma_correlation_empirical(const ensembles::SpinSequence& w, int n_max);

}  // namespace dms::correlation
