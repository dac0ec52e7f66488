#include "dms/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dms/autocorr.hpp"

namespace dms::dynamics {

std::vector<Rational> PointSpectrum::cosets() const {
  std::vector<Rational> out{Rational(0)};
  for (int q : generator_denominators)
    for (int r = 1; r < q; ++r) {
      const Rational k(r, q);
      if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool PointSpectrum::contains(const Rational& k) const {
  std::int64_t p = k.num() % k.den();
  if (p < 0) p += k.den();
  const Rational reduced(p, k.den());
  const auto all = cosets();
  return std::find(all.begin(), all.end(), reduced) != all.end();
}

double psi_estimate(const ensembles::SpinSequence& w) {
  if (w.radius() < 1) throw std::invalid_argument("psi_estimate: radius must be >= 1");
  const int N = w.radius();
  long sum = 0;
  for (int n = -N; n < N; ++n) {
    const int sign = (n & 1) ? -1 : 1;
    sum += sign * w.at(n) * w.at(n + 1);
  }
  return 2.0 * static_cast<double>(sum) / (2.0 * N);
}

double eigen_relation_check(const ensembles::SpinSequence& w) {
  if (w.radius() < 2) throw std::invalid_argument("eigen_relation_check: radius must be >= 2");
  return std::abs(psi_estimate(ensembles::shift(w, 1)) + psi_estimate(w));
}

spectra::TrigDensity sigma_spectral_density() {
  return spectra::TrigDensity{{Rational(1), Rational(0), Rational(-1)}};
}

spectra::GridDensity sigma_density_empirical(const ensembles::SpinSequence& w, int n_max,
                                             int grid_size) {
  const auto sigma_corr = correlation::sigma_correlation_empirical(w, n_max);
  return spectra::fejer_density(sigma_corr, grid_size, spectra::PointPart::zero());
}

PointSpectrum dynamical_point_spectrum(Model model) {
  switch (model) {
    case Model::Toy:
    case Model::DMS:
    case Model::FactorY:
      return PointSpectrum{{2}};
    case Model::TMCover:
      throw std::invalid_argument("dynamical_point_spectrum: cover spectrum is not characterized");
  }
  throw std::logic_error("unreachable");
}

}  // namespace dms::dynamics
