#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dms::ensembles {

// Finite symmetric window of +/-1 spins around the origin. Position n in
// [-N, N] maps to values[n + N]; position 0 is the marked origin.
class SpinSequence {
 public:
  SpinSequence(int radius, std::vector<std::int8_t> values);

  int radius() const { return radius_; }
  int size() const { return 2 * radius_ + 1; }
  int at(int n) const { return values_[static_cast<std::size_t>(n + radius_)]; }
  const std::vector<std::int8_t>& values() const { return values_; }

  friend bool operator==(const SpinSequence& a, const SpinSequence& b) {
    return a.radius_ == b.radius_ && a.values_ == b.values_;
  }

 private:
  int radius_;
  std::vector<std::int8_t> values_;
};

// Real-valued window with the same indexing; holds cover realizations whose
// entries are +/-1/5 and +/-7/5.
class RealSequence {
 public:
  RealSequence(int radius, std::vector<double> values);

  int radius() const { return radius_; }
  int size() const { return 2 * radius_ + 1; }
  double at(int n) const { return values_[static_cast<std::size_t>(n + radius_)]; }
  const std::vector<double>& values() const { return values_; }

 private:
  int radius_;
  std::vector<double> values_;
};

enum class SequenceClass { Periodic, Even, Odd, Mixed };

std::string to_string(SequenceClass c);

// Positions m in [-N, N-1] with w_m == w_{m+1} (the equal-neighbor set).
std::vector<int> equal_neighbor_positions(const SpinSequence& w);

// Periodic when no neighbors agree; Even/Odd when all agreeing positions sit
// in one parity class; Mixed otherwise (not a legal dimer configuration).
SequenceClass classify(const SpinSequence& w);

// The two 2-periodic windows: first has value +1 at the origin, second is its
// unit shift (value -1 at the origin). Both have the requested radius.
std::pair<SpinSequence, SpinSequence> toy_sequences(int radius);

// Window translate: output value at n is the input value at n + t, so the
// radius shrinks to N - |t|. Rejects |t| > N.
SpinSequence shift(const SpinSequence& w, int t);

// Neighbor-product factor map v_n = -w_n * w_{n+1}; output radius N - 1.
// Invariant under global spin flip.
SpinSequence factor_phi(const SpinSequence& w);

// Collapses onto the 2-periodic pair: Even windows map to the +1-at-origin
// sequence, Odd windows to its shift, Periodic windows to themselves.
// Mixed input is rejected.
SpinSequence collapse_to_toy(const SpinSequence& w);

// depth-fold image of the letter 1 under 1 -> 1 1bar, 1bar -> 1bar 1.
// Encoded as bytes: 0 = letter 1, 1 = letter 1bar. Length 2^depth.
std::vector<std::uint8_t> tm_word(int depth);

}  // namespace dms::ensembles
