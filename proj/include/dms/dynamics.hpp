#pragma once

#include <set>
#include <vector>

#include "dms/fejer.hpp"
#include "dms/measure.hpp"
#include "dms/model.hpp"
#include "dms/rational.hpp"
#include "dms/sequence.hpp"

namespace dms::dynamics {

// Pure point part of the dynamical spectrum under the translation action,
// written as the group generated by the lattices (1/q)Z for the recorded
// denominators. q = 1 (the trivial eigenvalue) is always implied.
struct PointSpectrum {
  std::set<int> generator_denominators;

  // Residue classes r/q in [0, 1) of the generated group.
  std::vector<Rational> cosets() const;
  bool contains(const Rational& k) const;
};

// Alternating neighbor-product average (2/#pairs) sum (-1)^n w_n w_{n+1}
// over the 2N in-window pairs. Converges to +1 on even windows, -1 on odd
// ones and 0 on the 2-periodic pair; the finite-window value is not clamped.
double psi_estimate(const ensembles::SpinSequence& w);

// Residual |psi(Sw) + psi(w)| of the eigenvalue -1 relation.
double eigen_relation_check(const ensembles::SpinSequence& w);

// Exact spectral density of the neighbor-sum observables: 1 - cos(4 pi k),
// independent of the site.
spectra::TrigDensity sigma_spectral_density();

// Cesaro-smoothed density of the estimated neighbor-sum correlation; the
// spectral measure has no point part, so nothing is subtracted.
spectra::GridDensity sigma_density_empirical(const ensembles::SpinSequence& w, int n_max,
                                             int grid_size);

// Z/2 for the periodic pair, the dimer ensemble, and its factor. The cover
// is out of scope and rejected.
PointSpectrum dynamical_point_spectrum(Model model);

}  // namespace dms::dynamics
