#include "dms/autocorr.hpp"

#include <stdexcept>

namespace dms::correlation {

namespace {

std::complex<double> lag_sum(const std::vector<std::complex<double>>& w, int lag) {
  const std::size_t count = w.size() - static_cast<std::size_t>(lag);
  std::complex<double> sum = 0.0;
  for (std::size_t m = 0; m < count; ++m) sum += std::conj(w[m]) * w[m + lag];
  return sum / static_cast<double>(count);
}

}  // namespace

AutocorrSeq empirical_autocorr(const WeightedComb& c, int n_max) {
  if (n_max < 0 || n_max > 2 * c.radius())
    throw std::invalid_argument("empirical_autocorr: n_max must be in [0, 2N]");
  AutocorrSeq out;
  out.max_lag = n_max;
  out.normalization = kPerLagTermCount;
  out.coefficients.resize(static_cast<std::size_t>(n_max) + 1);
  const auto& w = c.weights();
#pragma omp parallel for schedule(static)
  for (int n = 0; n <= n_max; ++n) out.coefficients[n] = lag_sum(w, n);
  return out;
}

AutocorrSeq empirical_autocorr_serial(const WeightedComb& c, int n_max) {
  if (n_max < 0 || n_max > 2 * c.radius())
    throw std::invalid_argument("empirical_autocorr: n_max must be in [0, 2N]");
  AutocorrSeq out;
  out.max_lag = n_max;
  out.normalization = kPerLagTermCount;
  out.coefficients.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.coefficients[n] = lag_sum(c.weights(), n);
  return out;
}

AutocorrSeq sigma_correlation_empirical(const ensembles::SpinSequence& w, int n_max) {
  if (n_max < 0 || w.radius() < n_max + 1)
    throw std::invalid_argument("sigma_correlation_empirical: requires N >= n_max + 1");
  const int N = w.radius();
  AutocorrSeq out;
  out.max_lag = n_max;
  out.normalization = kSigmaTermCount;
  out.coefficients.resize(static_cast<std::size_t>(n_max) + 1);
#pragma omp parallel for schedule(static)
  for (int n = 0; n <= n_max; ++n) {
    double sum = 0.0;
    for (int m = -N; m + n + 1 <= N; ++m) {
      const double s0 = w.at(m) + w.at(m + 1);
      const double s1 = w.at(m + n) + w.at(m + n + 1);
      sum += s0 * s1;
    }
    out.coefficients[n] = sum / static_cast<double>(2 * N - n);
  }
  return out;
}

}  // namespace dms::correlation
