#include "dms/closed_autocorr.hpp"

namespace dms::correlation {

ClosedFormAutocorr closed_autocorr(Model model, const WeightMap& h) {
  ClosedFormAutocorr out;
  out.model = model;
  out.weights = h;

  // Lattice and signal intensities |h+ + h-|^2 / 4 and |h+ - h-|^2 / 4.
  const Rational lattice = h.average().norm_sq();
  const Rational signal = h.half_difference().norm_sq();

  switch (model) {
    case Model::Toy:
      out.at_zero = lattice + signal;
      out.even_rest = lattice + signal;
      out.odd_rest = lattice - signal;
      break;
    case Model::DMS:
      out.at_zero = lattice + signal;
      out.even_rest = lattice;
      out.odd_rest = lattice;
      out.exceptions[1] = lattice - signal * Rational(1, 2);
      break;
    case Model::FactorY: {
      const Rational base = (h.h_plus + h.h_minus).norm_sq() + h.h_plus.norm_sq() - h.h_minus.norm_sq();
      const Rational lattice_y = base * Rational(1, 4);
      out.at_zero = lattice_y + signal;
      out.even_rest = lattice_y + signal * Rational(1, 2);
      out.odd_rest = lattice_y;
      break;
    }
    case Model::TMCover:
      out.at_zero = Rational(1);
      out.even_rest = Rational(0);
      out.odd_rest = Rational(0);
      break;
  }
  return out;
}

ClosedFormAutocorr sigma_correlation_closed() {
  ClosedFormAutocorr out;
  out.model = Model::DMS;
  out.at_zero = Rational(1);
  out.even_rest = Rational(0);
  out.odd_rest = Rational(0);
  out.exceptions[2] = Rational(-1, 2);
  return out;
}

Rational sigma_identity_value(const ClosedFormAutocorr& eta, int lag) {
  return Rational(2) * eta.coefficient(lag) + eta.coefficient(lag + 1) + eta.coefficient(lag - 1);
}

}  // namespace dms::correlation
