#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "burstcodes/bitstring.hpp"

namespace burstcodes {

// Marker parameters: the marker is 0^k 1^k and `delta` is the window
// length within which every position of a dense string sees a full
// marker occurrence.
struct PatternParams {
  std::size_t k = 1;
  std::size_t delta = 3;
  BitString pattern;  // 0^k 1^k

  static PatternParams with_delta(std::size_t k, std::size_t delta);
  // Default window length k * 2^(2k+1) * ceil(log2(length_hint)).
  static std::size_t formula_delta(std::size_t k, std::size_t length_hint);
};

// Smallest w with 2^w >= v (v >= 1).
std::size_t ceil_log2(std::uint64_t v);

// 1-based start positions of occurrences of p in x (none when x is
// shorter than p). No occurrence can overlap another since 0^k 1^k
// cannot overlap itself.
std::vector<std::size_t> pattern_starts(const BitString& x, const BitString& p);

// Indicator string: bit i set iff an occurrence of p starts at i.
BitString indicator(const BitString& x, const BitString& p);

std::size_t count_patterns(const BitString& x, const BitString& p);

// Distances between consecutive ones of (1, indicator, 1); has
// count_patterns+1 entries and sums to |x|+1.
std::vector<std::int64_t> gap_vector(const BitString& x, const BitString& p);

// Every window of delta consecutive positions contains a full occurrence
// of the marker. Strings shorter than delta are vacuously dense.
bool is_dense(const BitString& x, const PatternParams& params);

// Number of dense strings of length n, by exhaustive enumeration (n <= 24).
std::uint64_t dense_count_exact(std::size_t n, const PatternParams& params);

struct McDensity {
  std::uint64_t samples = 0;
  std::uint64_t dense = 0;
  double fraction = 0.0;
  std::uint64_t seed = 0;
};

// Monte Carlo estimate of the dense fraction among uniform strings of
// length n. Deterministic for a fixed seed.
McDensity dense_fraction_mc(std::size_t n, const PatternParams& params,
                            std::uint64_t samples, std::uint64_t seed);

}  // namespace burstcodes
