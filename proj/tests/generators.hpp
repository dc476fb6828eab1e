#pragma once

// Seeded random builders shared across the test suites.

#include <random>

#include "shiftlab/biseq.hpp"
#include "shiftlab/cylinder.hpp"

namespace shiftlab::testgen {

using Rng = std::mt19937;

inline Symbol symbol(Rng& rng, Symbol max_value = 9) {
  return std::uniform_int_distribution<Symbol>(0, max_value)(rng);
}

inline Word word(Rng& rng, std::size_t length, Symbol max_value = 9) {
  Word w;
  w.reserve(length);
  for (std::size_t i = 0; i < length; ++i) w.push_back(symbol(rng, max_value));
  return w;
}

inline TailSpec tail(Rng& rng, Symbol max_value = 9, bool allow_arithmetic = true) {
  switch (std::uniform_int_distribution<int>(0, allow_arithmetic ? 2 : 1)(rng)) {
    case 0:
      return TailSpec::constant(symbol(rng, max_value));
    case 1: {
      const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
      return TailSpec::periodic(word(rng, len, max_value));
    }
    default:
      return TailSpec::arithmetic(symbol(rng, max_value),
                                  std::uniform_int_distribution<std::int64_t>(1, 3)(rng));
  }
}

/// A general representable sequence over N.
inline BiSeq biseq(Rng& rng, Symbol max_value = 9, bool allow_arithmetic = true) {
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
  const std::int64_t lo = std::uniform_int_distribution<std::int64_t>(-5, 5)(rng);
  return BiSeq(tail(rng, max_value, allow_arithmetic), lo, word(rng, len, max_value),
               tail(rng, max_value, allow_arithmetic));
}

/// Zero outside [-radius, radius].
inline BiSeq finite_support(Rng& rng, std::int64_t radius, Symbol max_value) {
  Word w = word(rng, static_cast<std::size_t>(2 * radius + 1), max_value);
  return BiSeq(TailSpec::constant(0), -radius, std::move(w), TailSpec::constant(0));
}

/// An injective-with-zero member: zero at zero_pos, fresh values elsewhere,
/// parity-split arithmetic tails.
inline BiSeq injective_with_zero(Rng& rng, std::int64_t zero_pos) {
  const std::size_t flank = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
  Word center;
  Symbol next_odd = 1, next_even = 2;
  for (std::size_t i = 0; i < flank; ++i) {
    center.push_back(next_odd);
    next_odd += 2;
  }
  center.push_back(0);
  for (std::size_t i = 0; i < flank; ++i) {
    center.push_back(next_even);
    next_even += 2;
  }
  const auto lo = zero_pos - static_cast<std::int64_t>(flank);
  return BiSeq(TailSpec::arithmetic(next_odd, 2), lo, std::move(center),
               TailSpec::arithmetic(next_even, 2));
}

inline FinMap finmap(Rng& rng, std::size_t max_entries = 4, Symbol max_value = 9) {
  FinMap h;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_entries)(rng);
  for (std::size_t i = 0; i < n; ++i)
    h.set(std::uniform_int_distribution<std::int64_t>(-8, 8)(rng), symbol(rng, max_value));
  return h;
}

/// Maps that agree on overlaps: restrictions of one common sequence.
inline std::vector<FinMap> compatible_family(Rng& rng, std::size_t count, const BiSeq& source) {
  std::vector<FinMap> maps;
  for (std::size_t i = 0; i < count; ++i) {
    FinMap h;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    for (std::size_t e = 0; e < n; ++e) {
      const auto p = std::uniform_int_distribution<std::int64_t>(-8, 8)(rng);
      h.set(p, source.at(p));
    }
    maps.push_back(std::move(h));
  }
  return maps;
}

}  // namespace shiftlab::testgen
