#pragma once

#include <map>

#include "dms/comb.hpp"
#include "dms/model.hpp"
#include "dms/rational.hpp"

namespace dms::correlation {

// Exact autocorrelation coefficients as a finite description: the value at
// lag 0, one value for the remaining even lags, one for the odd lags, plus
// finitely many exceptional lags. Coefficients of every in-scope model are
// real, and lags are symmetric, so only |n| matters.
struct ClosedFormAutocorr {
  Model model = Model::DMS;
  WeightMap weights;
  Rational at_zero;
  Rational even_rest;
  Rational odd_rest;
  std::map<int, Rational> exceptions;  // keyed by positive lag

  Rational coefficient(int lag) const {
    const int n = lag < 0 ? -lag : lag;
    if (n == 0) return at_zero;
    if (auto it = exceptions.find(n); it != exceptions.end()) return it->second;
    return n % 2 == 0 ? even_rest : odd_rest;
  }
};

// Exact coefficients per model. Balanced +/-1 weights give: toy alternating
// (+1 even lags, -1 odd), dimer (1, -1/2 at lag 1, else 0), factor
// (1, 1/2 on even lags, 0 on odd). The cover's coefficients are intrinsic to
// its 1/5, 7/5 magnitudes and ignore `h`; they are delta at lag 0.
ClosedFormAutocorr closed_autocorr(Model model, const WeightMap& h);

// Exact neighbor-sum correlation: 1 at lag 0, -1/2 at lags +/-2, else 0.
ClosedFormAutocorr sigma_correlation_closed();

// The combination 2*eta(n) + eta(n+1) + eta(n-1) that the neighbor-sum
// correlation must equal when `eta` is the balanced dimer autocorrelation.
Rational sigma_identity_value(const ClosedFormAutocorr& eta, int lag);

}  // namespace dms::correlation
