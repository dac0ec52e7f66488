#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "dms/autocorr.hpp"
#include "dms/closed_autocorr.hpp"
#include "dms/comb.hpp"
#include "dms/sampler.hpp"

using namespace dms;
using namespace dms::correlation;
using dms::ensembles::SamplerSpec;
using dms::ensembles::sample_dms;
using dms::ensembles::sample_factor_y;
using dms::ensembles::SpinSequence;

namespace {

SpinSequence make_window(std::initializer_list<int> spins) {
  std::vector<std::int8_t> v;
  for (int s : spins) v.push_back(static_cast<std::int8_t>(s));
  const int radius = static_cast<int>(v.size() / 2);
  return SpinSequence(radius, std::move(v));
}

WeightedComb random_comb(std::mt19937_64& rng, int radius) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  std::vector<std::complex<double>> w(static_cast<std::size_t>(2 * radius + 1));
  for (auto& x : w) x = {uniform(rng), uniform(rng)};
  return WeightedComb(radius, std::move(w));
}

WeightMap weights(const std::string& plus, const std::string& minus) {
  WeightMap h;
  h.h_plus = parse_rational_complex(plus);
  h.h_minus = parse_rational_complex(minus);
  return h;
}

// Direct-summation oracle, written independently of the library kernel.
std::complex<double> autocorr_oracle(const WeightedComb& c, int lag) {
  std::complex<double> sum = 0.0;
  int count = 0;
  for (int m = -c.radius(); m + lag <= c.radius(); ++m) {
    sum += std::conj(c.at(m)) * c.at(m + lag);
    ++count;
  }
  return sum / static_cast<double>(count);
}

}  // namespace

TEST_CASE("balanced weight predicate") {
  CHECK(WeightMap{}.balanced());
  CHECK(!weights("1", "1").balanced());
  CHECK(weights("1/2+1/2i", "-1/2-1/2i").balanced());
}

TEST_CASE("weight substitution") {
  const auto w = make_window({1, -1, 1});

  const auto spins = apply_weights(w, weights("1", "-1"));
  CHECK(spins.at(-1) == std::complex<double>(1.0));
  CHECK(spins.at(0) == std::complex<double>(-1.0));

  const auto ones = apply_weights(w, weights("1", "1"));
  for (int n = -1; n <= 1; ++n) CHECK(ones.at(n) == std::complex<double>(1.0));

  const auto indicator = apply_weights(w, weights("1", "0"));
  CHECK(indicator.at(-1) == std::complex<double>(1.0));
  CHECK(indicator.at(0) == std::complex<double>(0.0));
  CHECK(indicator.at(1) == std::complex<double>(1.0));
}

TEST_CASE("real lift copies the window") {
  const ensembles::RealSequence v(1, {0.2, -1.4, 1.4});
  const auto c = lift_real(v);
  CHECK(c.radius() == 1);
  CHECK(c.at(-1) == std::complex<double>(0.2));
  CHECK(c.at(0) == std::complex<double>(-1.4));
}

TEST_CASE("window mean") {
  std::vector<std::complex<double>> ones(21, 1.0);
  CHECK(empirical_mean(WeightedComb(10, std::move(ones))) == std::complex<double>(1.0));

  const auto dms_comb =
      apply_weights(sample_dms({Model::DMS, 100000, 5}), weights("1", "-1"));
  CHECK(std::abs(empirical_mean(dms_comb)) <= 0.02);

  const auto y_comb =
      apply_weights(sample_factor_y({Model::FactorY, 100000, 23}), weights("1", "-1"));
  CHECK(std::abs(empirical_mean(y_comb) - std::complex<double>(0.5)) <= 0.02);
}

TEST_CASE("pair correlation preconditions") {
  const auto c = apply_weights(make_window({1, -1, 1}), weights("1", "-1"));
  CHECK_THROWS_AS(empirical_autocorr(c, -1), std::invalid_argument);
  CHECK_THROWS_AS(empirical_autocorr(c, 3), std::invalid_argument);
  CHECK(empirical_autocorr(c, 2).max_lag == 2);

  // The maximal lag 2N leaves exactly one pair, the window endpoints.
  const auto full = empirical_autocorr(c, 2);
  CHECK(full.at(2) == std::conj(c.at(-1)) * c.at(1));
}

TEST_CASE("pair correlation on the alternating window") {
  const auto c = apply_weights(ensembles::toy_sequences(500).first, weights("1", "-1"));
  const auto eta = empirical_autocorr(c, 8);
  CHECK(eta.at(0) == std::complex<double>(1.0));
  CHECK(eta.at(1) == std::complex<double>(-1.0));
  CHECK(eta.at(2) == std::complex<double>(1.0));
  for (int n = 0; n <= 8; ++n) CHECK(eta.at(n) == autocorr_oracle(c, n));
}

TEST_CASE("lag zero is the mean squared modulus") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = random_comb(rng, 200);
    const auto eta = empirical_autocorr(c, 16);
    double mean_sq = 0.0;
    for (int m = -c.radius(); m <= c.radius(); ++m) mean_sq += std::norm(c.at(m));
    mean_sq /= c.size();
    CHECK(std::abs(eta.at(0).imag()) <= 1e-15);
    CHECK(eta.at(0).real() == doctest::Approx(mean_sq).epsilon(1e-13));

    // Hermitian symmetry holds by construction.
    for (int n = 1; n <= 16; ++n) CHECK(eta.at(-n) == std::conj(eta.at(n)));
  }

  // With exact unit-modulus weights the value is exactly 1.
  const auto spins = apply_weights(sample_dms({Model::DMS, 5000, 3}), weights("1", "-1"));
  CHECK(empirical_autocorr(spins, 4).at(0) == std::complex<double>(1.0));
}

TEST_CASE("parallel and serial estimators agree bit for bit") {
  std::mt19937_64 rng(23);
  const auto c = random_comb(rng, 5000);
  const auto a = empirical_autocorr(c, 48);
  const auto b = empirical_autocorr_serial(c, 48);
  for (int n = 0; n <= 48; ++n) CHECK(a.at(n) == b.at(n));
  CHECK(a.normalization == b.normalization);
}

TEST_CASE("dimer pair correlation at scale") {
  const auto c = apply_weights(sample_dms({Model::DMS, 100000, 5}), weights("1", "-1"));
  const auto eta = empirical_autocorr(c, 32);
  CHECK(eta.at(0) == std::complex<double>(1.0));
  CHECK(eta.at(1).real() >= -0.51);
  CHECK(eta.at(1).real() <= -0.49);
  double worst = 0.0;
  for (int n = 2; n <= 32; ++n) worst = std::max(worst, std::abs(eta.at(n)));
  CHECK(worst <= 0.01);
}

TEST_CASE("weighted correlation follows the mixing formula") {
  const auto w = sample_dms({Model::DMS, 100000, 29});
  const auto h = weights("1+i", "1/2");
  const auto eta_h = empirical_autocorr(apply_weights(w, h), 16);
  const auto eta_bal = empirical_autocorr(apply_weights(w, weights("1", "-1")), 16);

  const double lattice = h.average().norm_sq().to_double();
  const double signal = h.half_difference().norm_sq().to_double();
  const double cross = 2.0 * std::sqrt(lattice * signal);
  for (int n = 0; n <= 16; ++n) {
    const double tol = 5.0 * (cross + signal) / std::sqrt(2.0 * 100000 + 1 - n);
    const std::complex<double> predicted = lattice + signal * eta_bal.at(n);
    CHECK(std::abs(eta_h.at(n) - predicted) <= tol);
  }
}

TEST_CASE("neighbor-sum correlation") {
  const auto w = sample_dms({Model::DMS, 100000, 31});
  const auto c = sigma_correlation_empirical(w, 8);
  CHECK(std::abs(c.at(0).real() - 1.0) <= 0.02);
  CHECK(std::abs(c.at(2).real() - (-0.5)) <= 0.02);
  CHECK(std::abs(c.at(1).real()) <= 0.02);
  CHECK_THROWS_AS(sigma_correlation_empirical(make_window({1, -1, 1}), 1), std::invalid_argument);
}

TEST_CASE("closed coefficients per model") {
  const auto balanced = weights("1", "-1");

  const auto dms_eta = closed_autocorr(Model::DMS, balanced);
  CHECK(dms_eta.coefficient(0) == Rational(1));
  CHECK(dms_eta.coefficient(1) == Rational(-1, 2));
  CHECK(dms_eta.coefficient(-1) == Rational(-1, 2));
  for (int n = 2; n <= 9; ++n) CHECK(dms_eta.coefficient(n) == Rational(0));

  const auto y_eta = closed_autocorr(Model::FactorY, balanced);
  CHECK(y_eta.coefficient(0) == Rational(1));
  CHECK(y_eta.coefficient(2) == Rational(1, 2));
  CHECK(y_eta.coefficient(-6) == Rational(1, 2));
  CHECK(y_eta.coefficient(3) == Rational(0));

  const auto toy_eta = closed_autocorr(Model::Toy, balanced);
  CHECK(toy_eta.coefficient(0) == Rational(1));
  CHECK(toy_eta.coefficient(4) == Rational(1));
  CHECK(toy_eta.coefficient(7) == Rational(-1));

  const auto flat = closed_autocorr(Model::DMS, weights("1", "1"));
  for (int n = 0; n <= 9; ++n) CHECK(flat.coefficient(n) == Rational(1));

  const auto cover = closed_autocorr(Model::TMCover, balanced);
  CHECK(cover.coefficient(0) == Rational(1));
  CHECK(cover.coefficient(1) == Rational(0));
  CHECK(cover.coefficient(2) == Rational(0));
}

TEST_CASE("closed coefficients mix linearly in the weights") {
  std::mt19937_64 rng(37);
  const auto balanced = weights("1", "-1");
  for (int trial = 0; trial < 20; ++trial) {
    WeightMap h;
    h.h_plus = {Rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 4)),
                Rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 4))};
    h.h_minus = {Rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 4)),
                 Rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 4))};
    const Rational lattice = h.average().norm_sq();
    const Rational signal = h.half_difference().norm_sq();
    for (Model model : {Model::Toy, Model::DMS}) {
      const auto general = closed_autocorr(model, h);
      const auto base = closed_autocorr(model, balanced);
      for (int n = 0; n <= 6; ++n)
        CHECK(general.coefficient(n) == lattice + signal * base.coefficient(n));
    }

    // The factor's lattice term carries the unbalanced mean instead.
    const Rational base_y = ((h.h_plus + h.h_minus).norm_sq() + h.h_plus.norm_sq() -
                             h.h_minus.norm_sq()) * Rational(1, 4);
    const auto general_y = closed_autocorr(Model::FactorY, h);
    const auto bal_y = closed_autocorr(Model::FactorY, balanced);
    for (int n = 0; n <= 6; ++n)
      CHECK(general_y.coefficient(n) == base_y + signal * bal_y.coefficient(n));
  }
}

TEST_CASE("neighbor-sum closed values and identity") {
  const auto sigma = sigma_correlation_closed();
  CHECK(sigma.coefficient(0) == Rational(1));
  CHECK(sigma.coefficient(2) == Rational(-1, 2));
  CHECK(sigma.coefficient(-2) == Rational(-1, 2));
  CHECK(sigma.coefficient(1) == Rational(0));
  CHECK(sigma.coefficient(5) == Rational(0));

  const auto eta = closed_autocorr(Model::DMS, weights("1", "-1"));
  // C(1) = 2 eta(1) + eta(2) + eta(0) = -1 + 0 + 1 = 0.
  CHECK(sigma_identity_value(eta, 1) == Rational(0));
  for (int n = -8; n <= 8; ++n)
    CHECK(sigma.coefficient(n) == sigma_identity_value(eta, n));
}
