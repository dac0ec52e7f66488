#include "dms/sampler.hpp"

#include <random>
#include <stdexcept>

namespace dms::ensembles {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

SpinSequence sample_dms(const SamplerSpec& spec) {
  require(spec.model == Model::DMS, "sample_dms: spec.model must be dms");
  require(spec.radius >= 1, "sample_dms: radius must be >= 1");

  const int N = spec.radius;
  std::mt19937_64 rng(spec.seed);

  // Parity bit: 0 -> boxes [2j-1, 2j] (equal neighbors on even positions),
  // 1 -> boxes [2j, 2j+1].
  const int left_parity = (rng() & 1) ? 0 : 1;

  int left = -N - 1;
  if (((left % 2) + 2) % 2 != left_parity) ++left;

  std::vector<std::int8_t> values(static_cast<std::size_t>(2 * N + 1));
  for (; left <= N; left += 2) {
    const std::int8_t first = (rng() & 1) ? -1 : 1;
    if (left >= -N) values[left + N] = first;
    if (left + 1 <= N) values[left + 1 + N] = static_cast<std::int8_t>(-first);
  }
  return SpinSequence(N, std::move(values));
}

SpinSequence sample_factor_y(const SamplerSpec& spec) {
  require(spec.model == Model::FactorY, "sample_factor_y: spec.model must be factory");
  require(spec.radius >= 1, "sample_factor_y: radius must be >= 1");
  return factor_phi(sample_dms({Model::DMS, spec.radius + 1, spec.seed}));
}

RealSequence tm_cover_sample(const SamplerSpec& spec) {
  require(spec.model == Model::TMCover, "tm_cover_sample: spec.model must be tmcover");
  require(spec.radius >= 0, "tm_cover_sample: radius must be >= 0");

  const int N = spec.radius;
  const std::size_t window = static_cast<std::size_t>(2 * N + 1);
  int depth = 0;
  while ((std::size_t{1} << depth) < window) ++depth;
  const auto word = tm_word(depth);

  std::mt19937_64 rng(spec.seed);
  std::vector<double> values(window);
  for (std::size_t i = 0; i < window; ++i) {
    const double magnitude = word[i] == 0 ? 0.2 : 1.4;
    values[i] = (rng() & 1) ? -magnitude : magnitude;
  }
  return RealSequence(N, std::move(values));
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial) {
  std::uint64_t z = base_seed + (trial + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace dms::ensembles
