#pragma once

#include <complex>
#include <vector>

#include "dms/rational.hpp"
#include "dms/sequence.hpp"

namespace dms::correlation {

// Scattering weights h(+1) = h_plus, h(-1) = h_minus. Components are exact
// rationals so the closed-form layer can run in exact arithmetic; the
// empirical layer uses the double projections.
struct WeightMap {
  RationalComplex h_plus{Rational(1)};
  RationalComplex h_minus{Rational(-1)};

  bool balanced() const { return h_plus == RationalComplex{} - h_minus; }

  std::complex<double> plus() const { return {h_plus.re.to_double(), h_plus.im.to_double()}; }
  std::complex<double> minus() const { return {h_minus.re.to_double(), h_minus.im.to_double()}; }
  std::complex<double> of_spin(int s) const { return s > 0 ? plus() : minus(); }

  // (h+ + h-)/2 and (h+ - h-)/2, the lattice and signal components of the
  // weighted comb.
  RationalComplex average() const { return Rational(1, 2) * (h_plus + h_minus); }
  RationalComplex half_difference() const { return Rational(1, 2) * (h_plus - h_minus); }

  std::string str() const { return h_plus.str() + "," + h_minus.str(); }
};

// Complex weights on the integer window [-N, N].
class WeightedComb {
 public:
  WeightedComb(int radius, std::vector<std::complex<double>> weights);

  int radius() const { return radius_; }
  int size() const { return 2 * radius_ + 1; }
  std::complex<double> at(int n) const { return weights_[static_cast<std::size_t>(n + radius_)]; }
  const std::vector<std::complex<double>>& weights() const { return weights_; }

 private:
  int radius_;
  std::vector<std::complex<double>> weights_;
};

// Substitutes h for the spins: weight at n is h_plus where w_n = +1, else
// h_minus.
WeightedComb apply_weights(const ensembles::SpinSequence& w, const WeightMap& h);

// Copies a real window into the comb pipeline (cover realizations).
WeightedComb lift_real(const ensembles::RealSequence& v);

// Window average (1/(2N+1)) sum of weights.
std::complex<double> empirical_mean(const WeightedComb& c);

}  // namespace dms::correlation
