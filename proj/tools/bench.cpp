// Timing comparison of the serial reference kernels against the parallel and
// folded-transform paths.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dms/autocorr.hpp"
#include "dms/fejer.hpp"
#include "dms/periodogram.hpp"
#include "dms/realize.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double seconds(Fn&& fn) {
  const auto start = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void row(const char* name, double serial, double other) {
  std::printf("  %-38s %9.4f s %9.4f s %7.2fx\n", name, serial, other,
              other > 0 ? serial / other : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled (serial build)\n");
#endif

  const int radius = 100000;
  const int grid = 512;
  const int n_max = 64;
  const auto comb = dms::realize_comb(dms::Model::DMS, radius, 42, {});

  // Spin up the thread pool so the first timed parallel region is not
  // charged for it.
  (void)dms::correlation::empirical_autocorr(comb, 4);

  std::printf("N = %d, grid = %d, n_max = %d\n", radius, grid, n_max);
  std::printf("  %-38s %11s %11s %9s\n", "kernel", "serial", "fast", "speedup");

  {
    dms::correlation::AutocorrSeq a, b;
    const double t_serial = seconds([&] { a = dms::correlation::empirical_autocorr_serial(comb, n_max); });
    const double t_par = seconds([&] { b = dms::correlation::empirical_autocorr(comb, n_max); });
    row("autocorr (parallel lags)", t_serial, t_par);

    const auto peaks = dms::spectra::PointPart::zero();
    dms::spectra::GridDensity d1, d2;
    const double f_serial = seconds([&] { d1 = dms::spectra::fejer_density_serial(a, grid, peaks); });
    const double f_par = seconds([&] { d2 = dms::spectra::fejer_density(a, grid, peaks); });
    row("density smoothing (parallel grid)", f_serial, f_par);
  }

  {
    dms::spectra::Periodogram p1, p2, p3;
    const double t_serial = seconds([&] { p1 = dms::spectra::periodogram_direct_serial(comb, grid); });
    const double t_par = seconds([&] { p2 = dms::spectra::periodogram_direct(comb, grid); });
    const double t_fast = seconds([&] { p3 = dms::spectra::periodogram(comb, grid); });
    row("periodogram direct (parallel grid)", t_serial, t_par);
    row("periodogram folded transform", t_serial, t_fast);

    double worst = 0.0, scale = 0.0;
    for (int g = 0; g < grid; ++g) {
      worst = std::max(worst, std::abs(p1.values[g] - p3.values[g]));
      scale = std::max(scale, p1.values[g]);
    }
    std::printf("  direct vs folded: max |diff| / max value = %.3g\n", worst / scale);
  }
  return 0;
}
