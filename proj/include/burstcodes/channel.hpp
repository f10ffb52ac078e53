#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "burstcodes/bitstring.hpp"

namespace burstcodes {

// One burst of `length` consecutive deletions. `prefix_len` is the number
// of leading symbols kept, so positions prefix_len+1 .. prefix_len+length
// are removed. prefix_len = 0 deletes a prefix of the string.
struct BurstSpec {
  std::size_t prefix_len = 0;
  std::size_t length = 1;
};

BitString apply_burst(const BitString& x, const BurstSpec& burst);

// All outputs of a burst of exactly k deletions.
std::unordered_set<BitString> ball_exact(const BitString& x, std::size_t k);

// All outputs of a burst of at most k deletions (union over 1..k).
std::unordered_set<BitString> ball_upto(const BitString& x, std::size_t k);

// True iff the burst balls of the given words are pairwise disjoint,
// i.e. the set corrects one burst of up to k deletions. Exact check.
bool is_burst_code(const std::vector<BitString>& codewords, std::size_t k);

// All prefix lengths l such that deleting positions l+1 .. l+(|x|-|y|)
// from x yields y. Requires |x| > |y|; the result is a (possibly empty)
// contiguous range because the kept prefix and suffix must match.
std::vector<std::size_t> burst_prefixes(const BitString& x, const BitString& y);

}  // namespace burstcodes
