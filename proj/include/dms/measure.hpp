#pragma once

#include <vector>

#include "dms/closed_autocorr.hpp"
#include "dms/comb.hpp"
#include "dms/model.hpp"
#include "dms/rational.hpp"

namespace dms::spectra {

// Absolutely continuous density as a cosine polynomial on the fundamental
// domain [0, 1): value(k) = coeff[0] + sum_j coeff[j] cos(2 pi j k).
struct TrigDensity {
  std::vector<Rational> coefficients;

  double value(double k) const;
  bool is_zero() const;

  // Exact Fourier coefficient of the density: a_0 at lag 0, a_|n| / 2
  // otherwise (zero beyond the stored degree).
  Rational fourier_coefficient(int lag) const;

  // Nonnegativity probe on a uniform grid; construction sites of exact
  // measures call this.
  void check_nonnegative(int grid_size = 2048) const;
};

// Pure-point part supported on (1/q)Z, one intensity per residue class
// r/q + Z. Diffraction of an integer-supported comb is 1-periodic, so one
// period describes the whole measure. Intensities must be nonnegative.
struct PointPart {
  int denominator = 1;
  std::vector<Rational> intensities;  // size == denominator

  static PointPart zero() { return PointPart{1, {Rational(0)}}; }

  void validate() const;

  // Exact intensity of the point at rational k (reduced mod 1); zero when k
  // is not on the support lattice.
  Rational intensity_at(const Rational& k) const;

  // Residue classes r/q (reduced) carrying nonzero intensity.
  std::vector<Rational> support_cosets() const;

  // Autocorrelation contribution of this point part: the q-periodic sequence
  // eta(n) = sum_r intensity[r] e^{2 pi i r n / q}, evaluated in doubles.
  // Used to remove known peaks before density smoothing.
  std::vector<double> autocorr_pattern(int n_max) const;

  friend bool operator==(const PointPart& a, const PointPart& b) {
    return a.denominator == b.denominator && a.intensities == b.intensities;
  }
};

// Exact diffraction of mixed type: Bragg part plus cosine-polynomial density.
// No in-scope model carries a singular continuous component.
struct MixedMeasure {
  PointPart point;
  TrigDensity ac;

  // Total mass over one period: point intensities plus the density mean
  // (cosine terms integrate to zero). Conserves the lag-0 autocorrelation.
  Rational period_mass() const;

  // (exact point intensity at k, density value at k).
  std::pair<Rational, double> eval(const Rational& k) const;
};

// Exact transform of a q-periodic autocorrelation pattern: intensities are
// the (1/q)-scaled DFT of one period. Exact for q in {1, 2, 4}; other q fall
// back to double DFT with dyadic-exact storage. Rejects q <= 0 and patterns
// whose transform is not a nonnegative point measure.
PointPart poisson_lattice_transform(int q, const std::vector<Rational>& period_coefficients);

// Density with Fourier coefficients equal to a finitely supported symmetric
// lag sequence f (f[j] = value at lags +/-j): a_0 = f[0], a_j = 2 f[j].
TrigDensity density_from_finite_lags(const std::vector<Rational>& f);

// Exact diffraction per model. Writing L = |h+ + h-|^2/4 and S = |h+ - h-|^2/4:
//   toy      L on the integer coset, S on the half-integer coset, no density;
//   dms      L on the integers, density S (1 - cos 2 pi k);
//   factory  L' + S/4 on integers and S/4 on half-integers with
//            L' = (|h+ + h-|^2 + |h+|^2 - |h-|^2)/4, density S/2;
//   tmcover  flat density 1, no points (weights intrinsic, h ignored).
MixedMeasure closed_diffraction(Model model, const correlation::WeightMap& h);

}  // namespace dms::spectra
