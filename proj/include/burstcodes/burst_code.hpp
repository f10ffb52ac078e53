#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "burstcodes/bitstring.hpp"
#include "burstcodes/locator.hpp"
#include "burstcodes/pattern.hpp"

namespace burstcodes {

// Checked values that carve the dense strings of length n into codes:
// the marker census mod 4, the marker checksum mod 2n, and a checksum /
// parity pair for every strided subsequence x_[i, n] with stride s,
// 1 <= i <= s <= k. The pairs are stored flat in (stride, i) order, so
// v[index_of(i, s)] belongs to stride s starting at i.
struct SyndromeSet {
  std::int64_t c0 = 0;          // marker count mod 4
  std::int64_t c1 = 0;          // marker checksum mod 2n
  std::vector<std::int64_t> v;  // subsequence checksums mod delta
  std::vector<std::int64_t> b;  // subsequence weights mod 2

  static std::size_t index_of(std::size_t i, std::size_t stride) {
    return stride * (stride - 1) / 2 + i - 1;
  }

  friend bool operator==(const SyndromeSet&, const SyndromeSet&) = default;
  friend auto operator<=>(const SyndromeSet&, const SyndromeSet&) = default;
};

// Number of (i, stride) pairs for burst bound k: k(k+1)/2.
std::size_t syndrome_count(std::size_t k);

struct CodeParams {
  std::size_t n = 0;
  PatternParams pattern;
};

// One concrete code: the dense strings of length n whose syndromes all
// match. Any such set corrects a single burst of at most k deletions.
struct CodeInstance {
  CodeParams params;
  SyndromeSet syn;
};

// Syndromes of a dense string (domain_error if x is not dense).
SyndromeSet extract_syndromes(const BitString& x, const CodeParams& params);

bool code_member(const BitString& x, const CodeInstance& inst);

// Repairs a single burst of 1..k deletions: narrows the burst start to
// a few short windows, repairs each strided subsequence within every
// candidate window, and keeps reconstructions that are codewords and
// reproduce y under some burst. Throws DecodeFailure if none survives
// and AmbiguityError if two distinct ones do.
BitString decode(const BitString& y, const CodeInstance& inst);

// decode, with DecodeFailure mapped to nullopt (AmbiguityError still throws).
std::optional<BitString> try_decode(const BitString& y, const CodeInstance& inst);

// All codewords, by exhaustive enumeration (n <= 24).
std::vector<BitString> enumerate_code(const CodeInstance& inst);

// Every dense string of length n keyed by its syndromes; values are the
// numeric (MSB-first) codeword values in increasing order. Deterministic.
using BucketTable = std::map<SyndromeSet, std::vector<std::uint32_t>>;
BucketTable bucket_table(const CodeParams& params);

struct SearchResult {
  SyndromeSet syn;              // largest bucket (first in key order on ties)
  std::size_t size = 0;         // its cardinality
  double redundancy = 0.0;      // n - log2(size); NaN when the table is empty
  std::uint64_t dense_total = 0;  // number of dense strings of length n
  std::size_t bucket_count = 0;   // number of nonempty buckets
};

// Picks the largest bucket; ties break toward the smallest key.
SearchResult search_best(const CodeParams& params);

}  // namespace burstcodes
