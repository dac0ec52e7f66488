#include "dms/measure.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace dms::spectra {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Rational floor_to_unit(const Rational& k) {
  // k - floor(k), an exact representative in [0, 1).
  std::int64_t q = k.den();
  std::int64_t p = k.num() % q;
  if (p < 0) p += q;
  return Rational(p, q);
}

}  // namespace

double TrigDensity::value(double k) const {
  if (coefficients.empty()) return 0.0;
  double d = coefficients[0].to_double();
  for (std::size_t j = 1; j < coefficients.size(); ++j)
    d += coefficients[j].to_double() * std::cos(kTwoPi * static_cast<double>(j) * k);
  return d;
}

bool TrigDensity::is_zero() const {
  for (const auto& a : coefficients)
    if (!a.is_zero()) return false;
  return true;
}

Rational TrigDensity::fourier_coefficient(int lag) const {
  const std::size_t n = static_cast<std::size_t>(lag < 0 ? -lag : lag);
  if (n >= coefficients.size()) return Rational(0);
  if (n == 0) return coefficients[0];
  return coefficients[n] * Rational(1, 2);
}

void TrigDensity::check_nonnegative(int grid_size) const {
  for (int g = 0; g < grid_size; ++g) {
    const double k = static_cast<double>(g) / grid_size;
    if (value(k) < -1e-12)
      throw std::invalid_argument("TrigDensity: negative density at k=" + std::to_string(k));
  }
}

void PointPart::validate() const {
  if (denominator <= 0) throw std::invalid_argument("PointPart: denominator must be positive");
  if (intensities.size() != static_cast<std::size_t>(denominator))
    throw std::invalid_argument("PointPart: one intensity per residue class required");
  for (const auto& v : intensities)
    if (v.is_negative()) throw std::invalid_argument("PointPart: negative intensity");
}

Rational PointPart::intensity_at(const Rational& k) const {
  const Rational r = floor_to_unit(k);
  if (denominator % r.den() != 0) return Rational(0);
  const std::int64_t residue = (r.num() * (denominator / r.den())) % denominator;
  return intensities[static_cast<std::size_t>(residue)];
}

std::vector<Rational> PointPart::support_cosets() const {
  std::vector<Rational> cosets;
  for (int r = 0; r < denominator; ++r)
    if (!intensities[static_cast<std::size_t>(r)].is_zero())
      cosets.emplace_back(r, denominator);
  return cosets;
}

std::vector<double> PointPart::autocorr_pattern(int n_max) const {
  std::vector<double> pattern(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (int n = 0; n <= n_max; ++n) {
    double v = 0.0;
    for (int r = 0; r < denominator; ++r)
      v += intensities[static_cast<std::size_t>(r)].to_double() *
           std::cos(kTwoPi * static_cast<double>(r) * n / denominator);
    pattern[static_cast<std::size_t>(n)] = v;
  }
  return pattern;
}

Rational MixedMeasure::period_mass() const {
  Rational mass(0);
  for (const auto& v : point.intensities) mass += v;
  if (!ac.coefficients.empty()) mass += ac.coefficients[0];
  return mass;
}

std::pair<Rational, double> MixedMeasure::eval(const Rational& k) const {
  return {point.intensity_at(k), ac.value(k.to_double())};
}

PointPart poisson_lattice_transform(int q, const std::vector<Rational>& period_coefficients) {
  if (q <= 0) throw std::invalid_argument("poisson_lattice_transform: period must be positive");
  if (period_coefficients.size() != static_cast<std::size_t>(q))
    throw std::invalid_argument("poisson_lattice_transform: need exactly one coefficient per lag class");

  PointPart out;
  out.denominator = q;
  out.intensities.resize(static_cast<std::size_t>(q));

  if (q == 1 || q == 2 || q == 4) {
    // Roots of unity are powers of i, so the transform stays rational.
    const Rational inv_q(1, q);
    for (int r = 0; r < q; ++r) {
      Rational re(0), im(0);
      for (int n = 0; n < q; ++n) {
        // e^{-2 pi i r n / q} = i^p with p = (-4 r n / q) mod 4.
        const int p = ((-4 * r * n / q) % 4 + 4) % 4;
        const Rational& c = period_coefficients[static_cast<std::size_t>(n)];
        switch (p) {
          case 0: re += c; break;
          case 1: im += c; break;
          case 2: re -= c; break;
          case 3: im -= c; break;
        }
      }
      if (!im.is_zero())
        throw std::invalid_argument("poisson_lattice_transform: pattern is not symmetric");
      out.intensities[static_cast<std::size_t>(r)] = re * inv_q;
    }
  } else {
    for (int r = 0; r < q; ++r) {
      double re = 0.0, im = 0.0;
      for (int n = 0; n < q; ++n) {
        const double angle = -kTwoPi * r * n / q;
        const double c = period_coefficients[static_cast<std::size_t>(n)].to_double();
        re += c * std::cos(angle);
        im += c * std::sin(angle);
      }
      if (std::abs(im) > 1e-9 * (std::abs(re) + 1.0))
        throw std::invalid_argument("poisson_lattice_transform: pattern is not symmetric");
      double v = re / q;
      if (v < 0.0 && v > -1e-12) v = 0.0;
      out.intensities[static_cast<std::size_t>(r)] = Rational::from_double(v);
    }
  }
  out.validate();
  return out;
}

TrigDensity density_from_finite_lags(const std::vector<Rational>& f) {
  TrigDensity d;
  d.coefficients = f;
  for (std::size_t j = 1; j < d.coefficients.size(); ++j)
    d.coefficients[j] = Rational(2) * f[j];
  return d;
}

MixedMeasure closed_diffraction(Model model, const correlation::WeightMap& h) {
  const Rational lattice = h.average().norm_sq();
  const Rational signal = h.half_difference().norm_sq();

  MixedMeasure m;
  switch (model) {
    case Model::Toy:
      m.point = PointPart{2, {lattice, signal}};
      break;
    case Model::DMS:
      m.point = PointPart{1, {lattice}};
      m.ac.coefficients = {signal, -signal};
      break;
    case Model::FactorY: {
      const Rational base =
          (h.h_plus + h.h_minus).norm_sq() + h.h_plus.norm_sq() - h.h_minus.norm_sq();
      const Rational lattice_y = base * Rational(1, 4);
      const Rational quarter = signal * Rational(1, 4);
      m.point = PointPart{2, {lattice_y + quarter, quarter}};
      m.ac.coefficients = {signal * Rational(1, 2)};
      break;
    }
    case Model::TMCover:
      m.point = PointPart::zero();
      m.ac.coefficients = {Rational(1)};
      break;
  }
  m.point.validate();
  m.ac.check_nonnegative();
  return m;
}

}  // namespace dms::spectra
