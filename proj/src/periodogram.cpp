#include "dms/periodogram.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace dms::spectra {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_power_of_two(int g) { return g > 0 && (g & (g - 1)) == 0; }

// Weights binned by n mod q; the phase e^{-2 pi i k n} with k = p/q only
// depends on n mod q, so the full sum collapses onto the bins.
std::vector<std::complex<double>> fold_weights(const correlation::WeightedComb& c, int q) {
  std::vector<std::complex<double>> bins(static_cast<std::size_t>(q), 0.0);
  const int N = c.radius();
  for (int n = -N; n <= N; ++n) {
    const int r = ((n % q) + q) % q;
    bins[static_cast<std::size_t>(r)] += c.at(n);
  }
  return bins;
}

// In-place iterative radix-2 FFT, negative-exponent convention.
void fft_radix2(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = -kTwoPi / static_cast<double>(len);
    const std::complex<double> step(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w = 1.0;
      for (std::size_t j_ = 0; j_ < len / 2; ++j_) {
        const auto u = a[i + j_];
        const auto v = a[i + j_ + len / 2] * w;
        a[i + j_] = u + v;
        a[i + j_ + len / 2] = u - v;
        w *= step;
      }
    }
  }
}

}  // namespace

Periodogram periodogram(const correlation::WeightedComb& c, int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("periodogram: grid size must be >= 2");

  auto bins = fold_weights(c, grid_size);
  std::vector<std::complex<double>> transform(static_cast<std::size_t>(grid_size));
  if (is_power_of_two(grid_size)) {
    transform = bins;
    fft_radix2(transform);
  } else {
#pragma omp parallel for schedule(static)
    for (int g = 0; g < grid_size; ++g) {
      std::complex<double> sum = 0.0;
      for (int r = 0; r < grid_size; ++r) {
        const double angle = -kTwoPi * static_cast<double>(g) * r / grid_size;
        sum += bins[static_cast<std::size_t>(r)] * std::complex<double>(std::cos(angle), std::sin(angle));
      }
      transform[static_cast<std::size_t>(g)] = sum;
    }
  }

  Periodogram out;
  out.grid_size = grid_size;
  out.radius = c.radius();
  out.values.resize(static_cast<std::size_t>(grid_size));
  for (int g = 0; g < grid_size; ++g)
    out.values[static_cast<std::size_t>(g)] = std::norm(transform[static_cast<std::size_t>(g)]) / c.size();
  return out;
}

Periodogram periodogram_direct(const correlation::WeightedComb& c, int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("periodogram: grid size must be >= 2");
  const int N = c.radius();

  Periodogram out;
  out.grid_size = grid_size;
  out.radius = N;
  out.values.resize(static_cast<std::size_t>(grid_size));
#pragma omp parallel for schedule(static)
  for (int g = 0; g < grid_size; ++g) {
    const double angle = -kTwoPi * g / grid_size;
    const std::complex<double> step(std::cos(angle), std::sin(angle));
    // Phase at n = -N, then one multiply per term.
    std::complex<double> phase(std::cos(angle * -N), std::sin(angle * -N));
    std::complex<double> sum = 0.0;
    for (int n = -N; n <= N; ++n) {
      sum += c.at(n) * phase;
      phase *= step;
    }
    out.values[static_cast<std::size_t>(g)] = std::norm(sum) / c.size();
  }
  return out;
}

Periodogram periodogram_direct_serial(const correlation::WeightedComb& c, int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("periodogram: grid size must be >= 2");
  const int N = c.radius();

  Periodogram out;
  out.grid_size = grid_size;
  out.radius = N;
  out.values.resize(static_cast<std::size_t>(grid_size));
  for (int g = 0; g < grid_size; ++g) {
    const double k = static_cast<double>(g) / grid_size;
    std::complex<double> sum = 0.0;
    for (int n = -N; n <= N; ++n) sum += c.at(n) * std::polar(1.0, -kTwoPi * k * n);
    out.values[static_cast<std::size_t>(g)] = std::norm(sum) / c.size();
  }
  return out;
}

double bragg_estimate(const correlation::WeightedComb& c, const Rational& k) {
  const int q = static_cast<int>(k.den());
  const auto bins = fold_weights(c, q);
  std::complex<double> sum = 0.0;
  for (int r = 0; r < q; ++r) {
    const double angle = -kTwoPi * static_cast<double>(k.num()) * r / q;
    sum += bins[static_cast<std::size_t>(r)] * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  const double intensity = std::norm(sum) / c.size();
  return intensity / c.size();
}

std::vector<BraggPeak> detect_bragg(const correlation::WeightedComb& c, int q_max, int grid_size) {
  if (q_max < 1) throw std::invalid_argument("detect_bragg: q_max must be >= 1");
  std::vector<BraggPeak> peaks;
  for (int q = 1; q <= q_max; ++q) {
    for (int p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational k(p, q);
      BraggPeak peak;
      peak.k = k;
      peak.intensity = bragg_estimate(c, k);

      // Background from the three grid points on each side; k +/- g/G stays
      // rational, so the same folded evaluation applies.
      double background = 0.0;
      for (int step = 1; step <= 3; ++step) {
        background += bragg_estimate(c, k - Rational(step, grid_size)) * c.size();
        background += bragg_estimate(c, k + Rational(step, grid_size)) * c.size();
      }
      background /= 6.0;

      // A point mass makes I_N grow with the window size while the continuous
      // background stays O(1): require the 10x ratio and a sqrt(2N+1) scaling
      // floor together.
      const double intensity_n = peak.intensity * c.size();
      peak.is_peak = intensity_n > 10.0 * background &&
                     intensity_n >= std::sqrt(static_cast<double>(c.size()));
      peaks.push_back(peak);
    }
  }
  return peaks;
}

PointPart peaks_to_point_part(const std::vector<BraggPeak>& peaks) {
  std::int64_t q = 1;
  for (const auto& peak : peaks)
    if (peak.is_peak) q = std::lcm(q, peak.k.den());
  PointPart out;
  out.denominator = static_cast<int>(q);
  out.intensities.assign(static_cast<std::size_t>(q), Rational(0));
  for (const auto& peak : peaks) {
    if (!peak.is_peak) continue;
    const std::int64_t r = peak.k.num() * (q / peak.k.den());
    out.intensities[static_cast<std::size_t>(r % q)] = Rational::from_double(peak.intensity);
  }
  out.validate();
  return out;
}

}  // namespace dms::spectra
