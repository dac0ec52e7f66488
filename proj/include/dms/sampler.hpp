#pragma once

#include <cstdint>

#include "dms/model.hpp"
#include "dms/sequence.hpp"

namespace dms::ensembles {

// Deterministic sampler description: same spec -> bit-identical output.
//
// RNG scheme (recorded as `rng` in emitted metadata):
//   * generator: std::mt19937_64 seeded directly with `seed`; random bits are
//     taken as engine() & 1.
//   * dms: the first bit selects the parity class (0 -> even, i.e. dimer boxes
//     [2j-1, 2j]; 1 -> odd, boxes [2j, 2j+1]); then one orientation bit per
//     box, left to right over every box meeting [-N, N] (0 -> (+1,-1),
//     1 -> (-1,+1)). Boxes sticking out past the window edge are sampled in
//     full so each in-window spin is defined.
//   * factory: exactly factor_phi(dms sample at radius N+1, same seed).
//   * tmcover: one sign bit per position, left to right (0 -> +, 1 -> -).
struct SamplerSpec {
  Model model = Model::DMS;
  int radius = 0;
  std::uint64_t seed = 0;
};

inline constexpr const char* kRngAlgorithm = "mt19937_64";

// Random-orientation close-packed dimer window; classifies Even or Odd
// (never Mixed; Periodic only if every sampled box happens to agree).
SpinSequence sample_dms(const SamplerSpec& spec);

// Neighbor-product factor of a dimer sample: +1 on one full parity class,
// fair +/-1 on the other.
SpinSequence sample_factor_y(const SamplerSpec& spec);

// Thue-Morse magnitudes 1/5 (letter 1) and 7/5 (letter 1bar) with i.i.d.
// fair signs; the word starts at position -N.
RealSequence tm_cover_sample(const SamplerSpec& spec);

// Per-trial seed derivation: splitmix64 finalizer applied to
// base + (trial+1) * 0x9E3779B97F4A7C15. Documented so multi-trial runs are
// reproducible and trials can run concurrently.
std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial);

}  // namespace dms::ensembles
