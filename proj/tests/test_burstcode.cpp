#include <stdexcept>

#include <algorithm>
#include <cstdint>

#include "burstcodes/burst_code.hpp"
#include "burstcodes/channel.hpp"
#include "burstcodes/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace burstcodes;

namespace {

CodeParams params_of(std::size_t n, std::size_t k, std::size_t delta) {
  return {n, PatternParams::with_delta(k, delta)};
}

}  // namespace

TEST_CASE("syndrome bookkeeping") {
  CHECK(syndrome_count(1) == 1);
  CHECK(syndrome_count(2) == 3);
  CHECK(syndrome_count(3) == 6);
  CHECK(SyndromeSet::index_of(1, 1) == 0);
  CHECK(SyndromeSet::index_of(1, 2) == 1);
  CHECK(SyndromeSet::index_of(2, 2) == 2);
  CHECK(SyndromeSet::index_of(3, 3) == 5);
}

TEST_CASE("syndromes of a dense word") {
  SyndromeSet s = extract_syndromes(BitString::from_text("01010011000110"),
                                    params_of(14, 2, 10));
  CHECK(s.c0 == 2);
  CHECK(s.c1 == 2);
  CHECK(s.v == std::vector<std::int64_t>{6, 1, 3});
  CHECK(s.b == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("syndromes demand density") {
  CHECK_THROWS_AS(extract_syndromes(BitString::zeros(14), params_of(14, 2, 10)),
                  std::domain_error);
  CHECK_THROWS_AS(extract_syndromes(BitString::zeros(12), params_of(14, 2, 10)),
                  std::invalid_argument);  // wrong length
}

TEST_CASE("bucket search at length 14") {
  CodeParams params = params_of(14, 2, 10);
  SearchResult best = search_best(params);
  CHECK(best.dense_total == 3712);
  CHECK(best.bucket_count == 2523);
  CHECK(best.size == 6);
  CHECK(best.redundancy == doctest::Approx(11.415037).epsilon(1e-6));
  CHECK(best.syn.c0 == 1);
  CHECK(best.syn.c1 == 23);
  CHECK(best.syn.v == std::vector<std::int64_t>{4, 1, 8});
  CHECK(best.syn.b == std::vector<std::int64_t>{1, 0, 1});

  std::vector<BitString> words = enumerate_code({params, best.syn});
  std::vector<std::string> expect = {
      "00001000111111", "01011000111010", "01011100111011",
      "10101000110101", "11111000110000", "11111100110001"};
  REQUIRE(words.size() == expect.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    CHECK(words[i].to_text() == expect[i]);
  }
}

TEST_CASE("bucket search at length 12") {
  SearchResult best = search_best(params_of(12, 2, 8));
  CHECK(best.dense_total == 368);
  CHECK(best.size == 4);
  CHECK(best.syn.c0 == 1);
  CHECK(best.syn.c1 == 21);
  CHECK(best.syn.v == std::vector<std::int64_t>{1, 3, 7});
  CHECK(best.syn.b == std::vector<std::int64_t>{0, 1, 1});
}

TEST_CASE("buckets partition the dense strings") {
  CodeParams params = params_of(12, 2, 8);
  BucketTable table = bucket_table(params);
  std::uint64_t total = 0;
  for (const auto& [syn, vals] : table) {
    CHECK(!vals.empty());
    CHECK(std::is_sorted(vals.begin(), vals.end()));
    total += vals.size();
  }
  CHECK(total == dense_count_exact(12, params.pattern));
  CHECK(total == 368);
  // deterministic
  CHECK(bucket_table(params) == table);
}

TEST_CASE("every burst of at most two deletions is undone") {
  CodeParams params = params_of(12, 2, 8);
  CodeInstance inst{params, search_best(params).syn};
  std::vector<BitString> words = enumerate_code(inst);
  REQUIRE(words.size() == 4);
  for (const auto& x : words) {
    CHECK(code_member(x, inst));
    CHECK(decode(x, inst) == x);  // no deletion at all
    for (const auto& y : ball_upto(x, 2)) {
      CHECK(decode(y, inst) == x);
    }
  }
}

TEST_CASE("non-members and bad lengths are rejected") {
  CodeParams params = params_of(12, 2, 8);
  CodeInstance inst{params, search_best(params).syn};
  // full-length non-member: nothing deleted, syndromes disagree
  BitString stranger = BitString::from_text("010011001101");
  REQUIRE(is_dense(stranger, params.pattern));
  REQUIRE(!code_member(stranger, inst));
  CHECK_THROWS_AS(decode(stranger, inst), DecodeFailure);
  CHECK_THROWS_AS(decode(BitString::zeros(13), inst), std::invalid_argument);
  CHECK_THROWS_AS(decode(BitString::zeros(9), inst), std::out_of_range);
  CHECK(try_decode(BitString::zeros(11), inst) == std::nullopt);
}
