#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burstcodes/bitstring.hpp"
#include "burstcodes/pattern.hpp"

namespace burstcodes {

// Marker-census checksums of a codeword of length n:
//   c0 = count_patterns(x) mod 4
//   c1 = vt_checksum(gap_vector(x)) mod 2n
struct LocSyndromes {
  std::int64_t c0 = 0;
  std::int64_t c1 = 0;
  std::size_t n = 0;
};

struct LocateCandidate {
  PosInterval range;  // possible start positions of the deleted block
  std::string rule;   // which census case produced it
};

struct LocateResult {
  std::size_t burst_len = 0;  // inferred from the length deficit
  std::vector<LocateCandidate> candidates;  // a handful, each of <= delta positions
};

// x is dense and matches the checksums.
bool loc_member(const BitString& x, const PatternParams& params,
                const LocSyndromes& syn);

// Narrows the first position of a single deleted block down to a few
// windows of at most delta consecutive positions each. y is the received
// word; the codeword length and checksums come from syn. The true first
// deleted position is always inside one of the returned windows.
LocateResult locate(const BitString& y, const PatternParams& params,
                    const LocSyndromes& syn);

}  // namespace burstcodes
