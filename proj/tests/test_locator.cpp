#include <stdexcept>

#include "burstcodes/channel.hpp"
#include "burstcodes/errors.hpp"
#include "burstcodes/locator.hpp"
#include "burstcodes/pattern.hpp"
#include "burstcodes/vt.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace burstcodes;

namespace {

LocSyndromes syndromes_of(const BitString& x, const PatternParams& params) {
  auto g = gap_vector(x, params.pattern);
  std::int64_t n2 = 2 * static_cast<std::int64_t>(x.size());
  return {static_cast<std::int64_t>((g.size() - 1) % 4),
          ((vt_checksum(g) % n2) + n2) % n2, x.size()};
}

// Some candidate contains the first position of some block whose removal
// maps x to y.
bool sound_for(const LocateResult& r, const BitString& x, const BitString& y) {
  auto prefixes = burst_prefixes(x, y);
  for (const auto& c : r.candidates) {
    for (std::size_t l : prefixes) {
      if (c.range.contains(static_cast<std::int64_t>(l) + 1)) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("membership") {
  PatternParams params = PatternParams::with_delta(2, 10);
  BitString a = BitString::from_text("01010011000110");
  CHECK(loc_member(a, params, {2, 2, 14}));
  CHECK(loc_member(BitString::from_text("10000111110011"), params, {2, 2, 14}));
  CHECK(loc_member(BitString::from_text("10010011100111"), params, {2, 2, 14}));
  CHECK_FALSE(loc_member(a, params, {1, 2, 14}));
  CHECK_FALSE(loc_member(a, params, {2, 3, 14}));
  // not dense, so no syndromes match
  CHECK_FALSE(loc_member(BitString::zeros(14), params, {0, 0, 14}));
  CHECK_FALSE(loc_member(BitString::zeros(14), params, {1, 0, 14}));
  CHECK_THROWS_AS(loc_member(a, params, {2, 2, 12}), std::invalid_argument);
}

TEST_CASE("worked trace: block removed from 01010011000110") {
  // deleting positions 5,6 leaves 010111000110; the census says one marker
  // was destroyed and the checksum difference pins it down
  PatternParams params = PatternParams::with_delta(2, 10);
  LocateResult r = locate(BitString::from_text("010111000110"), params, {2, 2, 14});
  CHECK(r.burst_len == 2);
  REQUIRE(r.candidates.size() == 1);
  CHECK(r.candidates[0].range == PosInterval{4, 8});
  CHECK(r.candidates[0].rule == "marker-destroyed");
}

TEST_CASE("replaced marker with a backward shift") {
  // x = 100100111010: the block at 5..6 eats the head of the marker at 5
  // while a new occurrence forms at position 2 of y. The second affected
  // gap GROWS, which the slot arithmetic must allow.
  PatternParams params = PatternParams::with_delta(2, 8);
  BitString x = BitString::from_text("100100111010");
  BitString y = apply_burst(x, {4, 2});
  CHECK(y.to_text() == "1001111010");
  LocateResult r = locate(y, params, syndromes_of(x, params));
  CHECK(sound_for(r, x, y));
  bool replaced = false;
  for (const auto& c : r.candidates) replaced |= c.rule == "marker-replaced";
  CHECK(replaced);
}

TEST_CASE("destroyed last marker") {
  // x = 11001100110001: the block at 10..11 destroys the marker at 7 and
  // the reconstruction pins its position exactly
  PatternParams params = PatternParams::with_delta(2, 8);
  BitString x = BitString::from_text("11001100110001");
  BitString y = apply_burst(x, {9, 2});
  LocateResult r = locate(y, params, syndromes_of(x, params));
  CHECK(sound_for(r, x, y));
  for (const auto& c : r.candidates) {
    CHECK(c.range.count() <= 8);
  }
}

TEST_CASE("argument checking") {
  PatternParams params = PatternParams::with_delta(2, 10);
  BitString x = BitString::from_text("01010011000110");
  CHECK_THROWS_AS(locate(x, params, {2, 2, 14}), std::invalid_argument);  // no deficit
  CHECK_THROWS_AS(locate(BitString::zeros(10), params, {2, 2, 14}),
                  std::out_of_range);  // deficit 4 > k
}

TEST_CASE("inconsistent checksums fail loudly") {
  PatternParams params = PatternParams::with_delta(2, 8);
  // a received word whose census admits no consistent slot for c1 = 1
  // (odd differences cannot come from a block inside a gap when k' = 2,
  // and no marker slot fits either)
  bool threw = false;
  for (std::int64_t c1 = 0; c1 < 24 && !threw; ++c1) {
    try {
      locate(BitString::zeros(10), params, {0, c1, 12});
    } catch (const DecodeFailure&) {
      threw = true;
    }
  }
  CHECK(threw);
}

// Exhaustive soundness at a small scale, straight against the splice
// oracle: every dense string, every block, every length 1..k.
TEST_CASE("exhaustive soundness at length 10") {
  const std::size_t n = 10;
  PatternParams params = PatternParams::with_delta(2, 8);
  for (std::uint64_t val = 0; val < (1ull << n); ++val) {
    BitString x = BitString::from_value_msb(val, n);
    if (!is_dense(x, params)) continue;
    LocSyndromes syn = syndromes_of(x, params);
    for (std::size_t kp = 1; kp <= 2; ++kp) {
      for (std::size_t pre = 0; pre + kp <= n; ++pre) {
        BitString y = apply_burst(x, {pre, kp});
        LocateResult r = locate(y, params, syn);
        CHECK(r.burst_len == kp);
        for (const auto& c : r.candidates) {
          CHECK(c.range.count() <= 8);
          CHECK(c.range.lo >= 1);
          CHECK(c.range.hi <= static_cast<std::int64_t>(n - kp + 1));
        }
        CHECK(sound_for(r, x, y));
      }
    }
  }
}

// The census difference read from the checksums matches the true marker
// count difference.
TEST_CASE("census difference matches brute force") {
  const std::size_t n = 10;
  PatternParams params = PatternParams::with_delta(2, 8);
  for (std::uint64_t val = 0; val < (1ull << n); ++val) {
    BitString x = BitString::from_value_msb(val, n);
    if (!is_dense(x, params)) continue;
    LocSyndromes syn = syndromes_of(x, params);
    for (std::size_t pre = 0; pre + 2 <= n; ++pre) {
      BitString y = apply_burst(x, {pre, 2});
      std::int64_t diff = static_cast<std::int64_t>(count_patterns(x, params.pattern)) -
                          static_cast<std::int64_t>(count_patterns(y, params.pattern));
      CHECK(diff >= -1);
      CHECK(diff <= 2);
      std::int64_t mod4 = ((syn.c0 - static_cast<std::int64_t>(count_patterns(
                                         y, params.pattern))) %
                               4 +
                           4) %
                          4;
      CHECK((mod4 == 3 ? -1 : mod4) == diff);
    }
  }
}
