#include "dms/comb.hpp"

#include <stdexcept>

namespace dms::correlation {

WeightedComb::WeightedComb(int radius, std::vector<std::complex<double>> weights)
    : radius_(radius), weights_(std::move(weights)) {
  if (radius_ < 0) throw std::invalid_argument("WeightedComb: negative radius");
  if (weights_.size() != static_cast<std::size_t>(2 * radius_ + 1))
    throw std::invalid_argument("WeightedComb: window length must be 2N+1");
}

WeightedComb apply_weights(const ensembles::SpinSequence& w, const WeightMap& h) {
  std::vector<std::complex<double>> weights(static_cast<std::size_t>(w.size()));
  const auto plus = h.plus();
  const auto minus = h.minus();
  for (int n = -w.radius(); n <= w.radius(); ++n)
    weights[n + w.radius()] = w.at(n) > 0 ? plus : minus;
  return WeightedComb(w.radius(), std::move(weights));
}

WeightedComb lift_real(const ensembles::RealSequence& v) {
  std::vector<std::complex<double>> weights(v.values().begin(), v.values().end());
  return WeightedComb(v.radius(), std::move(weights));
}

std::complex<double> empirical_mean(const WeightedComb& c) {
  std::complex<double> sum = 0.0;
  for (const auto& w : c.weights()) sum += w;
  return sum / static_cast<double>(c.size());
}

}  // namespace dms::correlation
