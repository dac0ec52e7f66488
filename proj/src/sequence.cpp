#include "dms/sequence.hpp"

#include <cstdlib>
#include <stdexcept>

namespace dms::ensembles {

SpinSequence::SpinSequence(int radius, std::vector<std::int8_t> values)
    : radius_(radius), values_(std::move(values)) {
  if (radius_ < 0) throw std::invalid_argument("SpinSequence: negative radius");
  if (values_.size() != static_cast<std::size_t>(2 * radius_ + 1))
    throw std::invalid_argument("SpinSequence: window length must be 2N+1");
  for (auto v : values_)
    if (v != 1 && v != -1) throw std::invalid_argument("SpinSequence: spins must be +1 or -1");
}

RealSequence::RealSequence(int radius, std::vector<double> values)
    : radius_(radius), values_(std::move(values)) {
  if (radius_ < 0) throw std::invalid_argument("RealSequence: negative radius");
  if (values_.size() != static_cast<std::size_t>(2 * radius_ + 1))
    throw std::invalid_argument("RealSequence: window length must be 2N+1");
}

std::string to_string(SequenceClass c) {
  switch (c) {
    case SequenceClass::Periodic: return "periodic";
    case SequenceClass::Even: return "even";
    case SequenceClass::Odd: return "odd";
    case SequenceClass::Mixed: return "mixed";
  }
  throw std::logic_error("unreachable");
}

std::vector<int> equal_neighbor_positions(const SpinSequence& w) {
  std::vector<int> m;
  for (int n = -w.radius(); n < w.radius(); ++n)
    if (w.at(n) == w.at(n + 1)) m.push_back(n);
  return m;
}

SequenceClass classify(const SpinSequence& w) {
  bool has_even = false;
  bool has_odd = false;
  for (int n = -w.radius(); n < w.radius(); ++n) {
    if (w.at(n) == w.at(n + 1)) {
      if (std::abs(n) % 2 == 0)
        has_even = true;
      else
        has_odd = true;
    }
  }
  if (!has_even && !has_odd) return SequenceClass::Periodic;
  if (has_even && has_odd) return SequenceClass::Mixed;
  return has_even ? SequenceClass::Even : SequenceClass::Odd;
}

std::pair<SpinSequence, SpinSequence> toy_sequences(int radius) {
  if (radius < 0) throw std::invalid_argument("toy_sequences: negative radius");
  std::vector<std::int8_t> plus(2 * radius + 1);
  std::vector<std::int8_t> minus(2 * radius + 1);
  for (int n = -radius; n <= radius; ++n) {
    std::int8_t v = (std::abs(n) % 2 == 0) ? 1 : -1;
    plus[n + radius] = v;
    minus[n + radius] = static_cast<std::int8_t>(-v);
  }
  return {SpinSequence(radius, std::move(plus)), SpinSequence(radius, std::move(minus))};
}

SpinSequence shift(const SpinSequence& w, int t) {
  if (std::abs(t) > w.radius()) throw std::invalid_argument("shift: |t| exceeds radius");
  int r = w.radius() - std::abs(t);
  std::vector<std::int8_t> out(2 * r + 1);
  for (int n = -r; n <= r; ++n) out[n + r] = static_cast<std::int8_t>(w.at(n + t));
  return SpinSequence(r, std::move(out));
}

SpinSequence factor_phi(const SpinSequence& w) {
  if (w.radius() < 1) throw std::invalid_argument("factor_phi: radius must be >= 1");
  int r = w.radius() - 1;
  std::vector<std::int8_t> out(2 * r + 1);
  for (int n = -r; n <= r; ++n) out[n + r] = static_cast<std::int8_t>(-w.at(n) * w.at(n + 1));
  return SpinSequence(r, std::move(out));
}

SpinSequence collapse_to_toy(const SpinSequence& w) {
  switch (classify(w)) {
    case SequenceClass::Periodic: return w;
    case SequenceClass::Even: return toy_sequences(w.radius()).first;
    case SequenceClass::Odd: return toy_sequences(w.radius()).second;
    case SequenceClass::Mixed:
      throw std::invalid_argument("collapse_to_toy: mixed window is not a dimer configuration");
  }
  throw std::logic_error("unreachable");
}

std::vector<std::uint8_t> tm_word(int depth) {
  if (depth < 0) throw std::invalid_argument("tm_word: negative depth");
  std::vector<std::uint8_t> word{0};
  for (int d = 0; d < depth; ++d) {
    std::vector<std::uint8_t> next;
    next.reserve(word.size() * 2);
    for (auto letter : word) {
      next.push_back(letter);
      next.push_back(static_cast<std::uint8_t>(1 - letter));
    }
    word = std::move(next);
  }
  return word;
}

}  // namespace dms::ensembles
