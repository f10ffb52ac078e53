#include "burstcodes/pattern.hpp"

#include <random>
#include <stdexcept>

namespace burstcodes {

namespace {

// Occurrence scan without the |p| <= |x| precondition: a string shorter
// than the marker simply has no occurrences.
std::vector<std::size_t> scan_starts(const std::uint8_t* x, std::size_t n,
                                     const std::uint8_t* p, std::size_t m) {
  std::vector<std::size_t> starts;
  if (m == 0 || m > n) return starts;
  for (std::size_t i = 0; i + m <= n; ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < m; ++j) {
      if (x[i + j] != p[j]) {
        hit = false;
        break;
      }
    }
    if (hit) starts.push_back(i + 1);
  }
  return starts;
}

bool dense_raw(const std::uint8_t* x, std::size_t n, const std::uint8_t* p,
               std::size_t m, std::size_t delta) {
  if (n < delta) return true;
  auto starts = scan_starts(x, n, p, m);
  // Window starting at i must contain an occurrence start in [i, i+delta-m].
  std::size_t ptr = 0;
  for (std::size_t i = 1; i + delta - 1 <= n; ++i) {
    while (ptr < starts.size() && starts[ptr] < i) ++ptr;
    if (ptr == starts.size() || starts[ptr] > i + delta - m) return false;
  }
  return true;
}

constexpr std::size_t kMaxExhaustiveBits = 24;

}  // namespace

PatternParams PatternParams::with_delta(std::size_t k, std::size_t delta) {
  if (k == 0) throw std::invalid_argument("PatternParams: k must be positive");
  if (delta <= 2 * k) throw std::invalid_argument("PatternParams: delta must exceed the marker length 2k");
  PatternParams pp;
  pp.k = k;
  pp.delta = delta;
  pp.pattern = concat(BitString::zeros(k), BitString::ones(k));
  return pp;
}

std::size_t PatternParams::formula_delta(std::size_t k, std::size_t length_hint) {
  if (k == 0) throw std::invalid_argument("formula_delta: k must be positive");
  std::size_t lg = ceil_log2(length_hint < 2 ? 2 : length_hint);
  return k * (std::size_t{1} << (2 * k + 1)) * lg;
}

std::size_t ceil_log2(std::uint64_t v) {
  if (v == 0) throw std::invalid_argument("ceil_log2: argument must be positive");
  std::size_t w = 0;
  while ((std::uint64_t{1} << w) < v) {
    ++w;
    if (w >= 64) throw std::overflow_error("ceil_log2: argument too large");
  }
  return w;
}

std::vector<std::size_t> pattern_starts(const BitString& x, const BitString& p) {
  if (p.empty()) throw std::invalid_argument("pattern_starts: pattern must be nonempty");
  return scan_starts(x.raw().data(), x.size(), p.raw().data(), p.size());
}

BitString indicator(const BitString& x, const BitString& p) {
  auto starts = pattern_starts(x, p);
  std::vector<std::uint8_t> bits(x.size(), 0);
  for (std::size_t s : starts) bits[s - 1] = 1;
  return BitString(std::move(bits));
}

std::size_t count_patterns(const BitString& x, const BitString& p) {
  return pattern_starts(x, p).size();
}

std::vector<std::int64_t> gap_vector(const BitString& x, const BitString& p) {
  auto starts = pattern_starts(x, p);
  std::vector<std::int64_t> gaps;
  gaps.reserve(starts.size() + 1);
  std::size_t prev = 0;
  for (std::size_t s : starts) {
    gaps.push_back(static_cast<std::int64_t>(s - prev));
    prev = s;
  }
  gaps.push_back(static_cast<std::int64_t>(x.size() + 1 - prev));
  return gaps;
}

bool is_dense(const BitString& x, const PatternParams& params) {
  return dense_raw(x.raw().data(), x.size(), params.pattern.raw().data(),
                   params.pattern.size(), params.delta);
}

std::uint64_t dense_count_exact(std::size_t n, const PatternParams& params) {
  if (n > kMaxExhaustiveBits) {
    throw std::length_error("dense_count_exact: exhaustive enumeration capped at 24 bits");
  }
  const std::uint8_t* p = params.pattern.raw().data();
  std::size_t m = params.pattern.size();
  std::vector<std::uint8_t> buf(n);
  std::uint64_t count = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    for (std::size_t i = 0; i < n; ++i) buf[i] = static_cast<std::uint8_t>((v >> (n - 1 - i)) & 1u);
    if (dense_raw(buf.data(), n, p, m, params.delta)) ++count;
  }
  return count;
}

McDensity dense_fraction_mc(std::size_t n, const PatternParams& params,
                            std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("dense_fraction_mc: need at least one sample");
  const std::uint8_t* p = params.pattern.raw().data();
  std::size_t m = params.pattern.size();
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> buf(n);
  std::uint64_t dense = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i % 64 == 0) word = rng();
      buf[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1u);
    }
    if (dense_raw(buf.data(), n, p, m, params.delta)) ++dense;
  }
  McDensity out;
  out.samples = samples;
  out.dense = dense;
  out.fraction = static_cast<double>(dense) / static_cast<double>(samples);
  out.seed = seed;
  return out;
}

}  // namespace burstcodes
