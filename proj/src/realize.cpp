#include "dms/realize.hpp"

#include <stdexcept>

#include "dms/sequence.hpp"

namespace dms {

correlation::WeightedComb realize_comb(Model model, int radius, std::uint64_t seed,
                                       const correlation::WeightMap& h) {
  using namespace ensembles;
  switch (model) {
    case Model::Toy:
      return correlation::apply_weights(toy_sequences(radius).first, h);
    case Model::DMS:
      return correlation::apply_weights(sample_dms({Model::DMS, radius, seed}), h);
    case Model::FactorY:
      return correlation::apply_weights(sample_factor_y({Model::FactorY, radius, seed}), h);
    case Model::TMCover:
      return correlation::lift_real(tm_cover_sample({Model::TMCover, radius, seed}));
  }
  throw std::logic_error("unreachable");
}

spectra::Periodogram trial_averaged_periodogram(Model model, const correlation::WeightMap& h,
                                                int radius, std::uint64_t base_seed, int trials,
                                                int grid_size) {
  if (trials < 1) throw std::invalid_argument("trial_averaged_periodogram: trials must be >= 1");

  std::vector<spectra::Periodogram> per_trial(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    const auto comb = realize_comb(model, radius, ensembles::trial_seed(base_seed, t), h);
    per_trial[static_cast<std::size_t>(t)] = spectra::periodogram(comb, grid_size);
  }

  spectra::Periodogram out;
  out.grid_size = grid_size;
  out.radius = radius;
  out.trials = trials;
  out.values.assign(static_cast<std::size_t>(grid_size), 0.0);
  for (int t = 0; t < trials; ++t)
    for (int g = 0; g < grid_size; ++g)
      out.values[static_cast<std::size_t>(g)] += per_trial[static_cast<std::size_t>(t)].values[static_cast<std::size_t>(g)];
  for (auto& v : out.values) v /= trials;
  return out;
}

}  // namespace dms
