#include "dms/fejer.hpp"

#include <cmath>
#include <numbers>

namespace dms::spectra {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Peak-subtracted, triangularly weighted coefficients for lags 0..n_max.
std::vector<std::complex<double>> weighted_residual(const correlation::AutocorrSeq& a,
                                                    const PointPart& peaks) {
  const int n_max = a.max_lag;
  const auto pattern = peaks.autocorr_pattern(n_max);
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double triangle = 1.0 - static_cast<double>(n) / (n_max + 1);
    out[static_cast<std::size_t>(n)] =
        triangle * (a.at(n) - pattern[static_cast<std::size_t>(n)]);
  }
  return out;
}

double eval_point(const std::vector<std::complex<double>>& coeff, double k) {
  double d = coeff[0].real();
  for (std::size_t n = 1; n < coeff.size(); ++n) {
    const double angle = -kTwoPi * k * static_cast<double>(n);
    d += 2.0 * (coeff[n] * std::complex<double>(std::cos(angle), std::sin(angle))).real();
  }
  return d;
}

}  // namespace

GridDensity fejer_density(const correlation::AutocorrSeq& a, int grid_size,
                          const PointPart& peaks) {
  const auto coeff = weighted_residual(a, peaks);
  GridDensity out;
  out.grid_size = grid_size;
  out.values.resize(static_cast<std::size_t>(grid_size));
#pragma omp parallel for schedule(static)
  for (int g = 0; g < grid_size; ++g)
    out.values[static_cast<std::size_t>(g)] = eval_point(coeff, static_cast<double>(g) / grid_size);
  return out;
}

GridDensity fejer_density_serial(const correlation::AutocorrSeq& a, int grid_size,
                                 const PointPart& peaks) {
  const auto coeff = weighted_residual(a, peaks);
  GridDensity out;
  out.grid_size = grid_size;
  out.values.resize(static_cast<std::size_t>(grid_size));
  for (int g = 0; g < grid_size; ++g)
    out.values[static_cast<std::size_t>(g)] = eval_point(coeff, static_cast<double>(g) / grid_size);
  return out;
}

}  // namespace dms::spectra
