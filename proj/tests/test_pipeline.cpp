#include <stdexcept>

#include <random>

#include "burstcodes/channel.hpp"
#include "burstcodes/errors.hpp"
#include "burstcodes/pipeline.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace burstcodes;

TEST_CASE("repetition coding") {
  CHECK(repetition_encode(BitString::from_text("101"), 2).to_text() ==
        "111000111");
  CHECK(repetition_decode(BitString::from_text("1110111"), 3, 2).to_text() ==
        "101");
  CHECK_THROWS_AS(repetition_decode(BitString::from_text("1111"), 3, 2),
                  std::invalid_argument);  // deficit 5 > k
  CHECK_THROWS_AS(repetition_decode(BitString::zeros(10), 3, 2),
                  std::invalid_argument);  // longer than the codeword
}

TEST_CASE("repetition survives any single short burst") {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t m = 1; m <= 8; ++m) {
      for (std::uint64_t val = 0; val < (1ull << m); ++val) {
        BitString u = BitString::from_value_msb(val, m);
        BitString c = repetition_encode(u, k);
        REQUIRE(c.size() == m * (k + 1));
        CHECK(repetition_decode(c, m, k) == u);
        for (std::size_t kp = 1; kp <= k; ++kp) {
          for (std::size_t pre = 0; pre + kp <= c.size(); ++pre) {
            CHECK(repetition_decode(apply_burst(c, {pre, kp}), m, k) == u);
          }
        }
      }
    }
  }
}

TEST_CASE("syndrome field widths") {
  // c0: 2, c1: ceil(log2 28) = 5, three residues of ceil(log2 10) = 4,
  // three parity bits
  CHECK(syndrome_width(14, 2, 10) == 2 + 5 + 3 * 4 + 3);
  CHECK(syndrome_width(16384, 1, 112) == 2 + 15 + 7 + 1);
}

TEST_CASE("syndrome serialization round-trips") {
  const std::size_t n = 200, k = 3, delta = 48;
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    SyndromeSet s;
    s.c0 = static_cast<std::int64_t>(rng() % 4);
    s.c1 = static_cast<std::int64_t>(rng() % (2 * n));
    for (std::size_t i = 0; i < syndrome_count(k); ++i) {
      s.v.push_back(static_cast<std::int64_t>(rng() % delta));
      s.b.push_back(static_cast<std::int64_t>(rng() % 2));
    }
    BitString bits = serialize_syndromes(s, n, k, delta);
    REQUIRE(bits.size() == syndrome_width(n, k, delta));
    CHECK(deserialize_syndromes(bits, n, k, delta) == s);
  }
}

TEST_CASE("serialization rejects out-of-range fields") {
  SyndromeSet s;
  s.c1 = 400;  // >= 2n
  s.v = {0, 0, 0};
  s.b = {0, 0, 0};
  CHECK_THROWS_AS(serialize_syndromes(s, 200, 2, 48), std::invalid_argument);
  // a deserialize whose c1 field decodes past 2n-1
  BitString wide = BitString::ones(syndrome_width(10, 1, 8));
  CHECK_THROWS_AS(deserialize_syndromes(wide, 10, 1, 8), FormatError);
  CHECK_THROWS_AS(deserialize_syndromes(BitString::zeros(3), 10, 1, 8),
                  std::invalid_argument);  // wrong width is a caller bug
}

TEST_CASE("marker interleaving is invertible and dense") {
  // at the default window the message is shorter than one block, so no
  // markers are inserted; a narrow window forces one after every bit
  for (std::size_t delta : {0u, 8u}) {
    PipelineParams params = PipelineParams::make(16, 2, delta);
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
      BitString u = BitString::from_value_msb(rng() & 0xffff, 16);
      BitString x = densify(u, params);
      CHECK(x.size() == params.m1);
      CHECK(is_dense(x, params.pattern));
      CHECK(undensify(x, params) == u);
    }
  }
  PipelineParams narrow = PipelineParams::make(16, 2, 8);
  CHECK(narrow.block_len == 1);
  CHECK(narrow.m1 == 80);
  // corrupt a marker copy and the inverse refuses: the message is all
  // ones, so a cleared bit inside the first marker's one-half sticks out
  std::string t = densify(BitString::ones(16), narrow).to_text();
  t[narrow.block_len + 2] = '0';
  CHECK_THROWS_AS(undensify(BitString::from_text(t), narrow), FormatError);
}

TEST_CASE("layout arithmetic is frozen") {
  PipelineParams p16 = PipelineParams::make(16, 2);
  CHECK(p16.pattern.delta == 256);
  CHECK(p16.block_len == 249);
  CHECK(p16.m1 == 16);
  CHECK(p16.w1 == 34);
  CHECK(p16.m2 == 34);
  CHECK(p16.w2 == 36);
  CHECK(p16.m3 == 108);
  CHECK(p16.total() == 158);

  CHECK(PipelineParams::make(64, 2).total() == 220);
  CHECK(PipelineParams::make(64, 3).total() == 503);
  CHECK(PipelineParams::make(256, 2).total() == 414);
  CHECK(PipelineParams::make(256, 3).total() == 697);
}

TEST_CASE("layout validation") {
  CHECK_THROWS_AS(PipelineParams::make(16, 0), std::invalid_argument);
  CHECK_THROWS_AS(PipelineParams::make(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(PipelineParams::make(16, 2, 7), std::invalid_argument);
}

TEST_CASE("every burst position at a small message size") {
  PipelineParams params = PipelineParams::make(16, 2);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 4; ++trial) {
    BitString u = BitString::from_value_msb(rng() & 0xffff, 16);
    BitString c = encode(u, params);
    REQUIRE(c.size() == params.total());
    CHECK(pipeline_decode(c, params) == u);  // zero deletions
    for (std::size_t kp = 1; kp <= params.k; ++kp) {
      for (std::size_t pre = 0; pre + kp <= c.size(); ++pre) {
        CHECK(pipeline_decode(apply_burst(c, {pre, kp}), params) == u);
      }
    }
  }
}

TEST_CASE("length discipline") {
  PipelineParams params = PipelineParams::make(16, 2);
  CHECK_THROWS_AS(encode(BitString::zeros(15), params), std::invalid_argument);
  CHECK_THROWS_AS(pipeline_decode(BitString::zeros(params.total() - 3), params),
                  std::invalid_argument);  // deficit 3 > k
  CHECK_THROWS_AS(pipeline_decode(BitString::zeros(params.total() + 1), params),
                  std::invalid_argument);
}
