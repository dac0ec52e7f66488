#pragma once

#include <cstdint>

#include "dms/comb.hpp"
#include "dms/model.hpp"
#include "dms/periodogram.hpp"
#include "dms/sampler.hpp"

namespace dms {

// One weighted comb realization per model. The periodic hull has exactly two
// elements, so the toy model deterministically uses the +1-at-origin window;
// the cover's weights are intrinsic and ignore `h`.
correlation::WeightedComb realize_comb(Model model, int radius, std::uint64_t seed,
                                       const correlation::WeightMap& h);

// Periodogram averaged over `trials` independent realizations with seeds
// trial_seed(base_seed, t). Trials run concurrently; accumulation stays in
// trial order so the result is identical at any thread count.
spectra::Periodogram trial_averaged_periodogram(Model model, const correlation::WeightMap& h,
                                                int radius, std::uint64_t base_seed, int trials,
                                                int grid_size);

}  // namespace dms
