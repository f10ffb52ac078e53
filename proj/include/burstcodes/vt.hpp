#pragma once

#include <cstdint>
#include <span>

#include "burstcodes/bitstring.hpp"

namespace burstcodes {

// Position-weighted checksum sum(i * a_i) with 1-based i.
std::int64_t vt_checksum(std::span<const std::int64_t> a);
std::int64_t vt_checksum(const BitString& x);

// Plain sum (for a bitstring: its weight).
std::int64_t parity_checksum(std::span<const std::int64_t> a);
std::int64_t parity_checksum(const BitString& x);

// Shifted checksum code: strings x of length n with
// vt_checksum(x) = v  (mod p)   and   weight(x) = b (mod 2).
// Members can be repaired from a single deletion once the deleted
// position is pinned down to fewer than p consecutive candidates; p may
// exceed n+1 (then any single deletion is repairable outright).
struct SvtParams {
  std::int64_t v = 0;
  int b = 0;
  std::int64_t p = 2;
  std::size_t n = 1;
};

bool svt_member(const BitString& x, const SvtParams& s);

// Repairs one deletion: y has length s.n - 1 and the deleted position of
// the original codeword lies within `window` (at most p consecutive
// positions). Deterministic; the repaired insertion is canonicalized to
// the leftmost position of its run.
BitString svt_decode(const BitString& y, const SvtParams& s, PosInterval window);

}  // namespace burstcodes
