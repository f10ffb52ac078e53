#pragma once

#include <cstdint>

#include "burstcodes/bitstring.hpp"
#include "burstcodes/burst_code.hpp"
#include "burstcodes/pattern.hpp"

namespace burstcodes {

// Frozen layout of the three-segment encoder output for a d-bit message
// protected against one burst of at most k deletions:
//   segment 1: the densified message                 (m1 bits)
//   segment 2: the densified serialized syndromes of segment 1 (m2 bits)
//   segment 3: segment 2's serialized syndromes, each bit k+1 times (m3 bits)
// All derived lengths are pure functions of (d, k, delta).
struct PipelineParams {
  std::size_t d = 0;       // information length
  std::size_t k = 1;       // burst bound
  PatternParams pattern;   // marker and window length delta
  std::size_t block_len = 0;  // info bits between markers: delta - 4k + 1
  std::size_t m1 = 0;      // densified message length
  std::size_t w1 = 0;      // serialized syndrome width at n = m1
  std::size_t m2 = 0;      // densified width-w1 payload length
  std::size_t w2 = 0;      // serialized syndrome width at n = m2
  std::size_t m3 = 0;      // w2 * (k + 1)

  std::size_t total() const { return m1 + m2 + m3; }
  CodeParams segment1_code() const { return {m1, pattern}; }
  CodeParams segment2_code() const { return {m2, pattern}; }

  // delta = 0 picks the default window length for the message length.
  static PipelineParams make(std::size_t d, std::size_t k, std::size_t delta = 0);
};

// Width in bits of a serialized SyndromeSet for code length n.
std::size_t syndrome_width(std::size_t n, std::size_t k, std::size_t delta);

// Fixed-width big-endian fields: c0 (2 bits), c1 (ceil(log2 2n) bits),
// the checksum residues in (stride, i) order (ceil(log2 delta) bits each),
// then the weight parities (1 bit each).
BitString serialize_syndromes(const SyndromeSet& s, std::size_t n, std::size_t k,
                              std::size_t delta);
SyndromeSet deserialize_syndromes(const BitString& bits, std::size_t n, std::size_t k,
                                  std::size_t delta);

// Marker interleaving: a copy of the marker after every full block of
// params.block_len message bits. Injective, and the output is dense.
BitString densify(const BitString& u, const PipelineParams& params);
// Exact inverse; FormatError when x is not an encoder image.
BitString undensify(const BitString& x, const PipelineParams& params);

// Each bit repeated k+1 times, in order.
BitString repetition_encode(const BitString& u, std::size_t k);
// Inverse after one burst of at most k deletions: output bit j is
// y[j(k+1) - deficit]. The deficit m(k+1) - |y| must lie in [0, k].
BitString repetition_decode(const BitString& y, std::size_t m, std::size_t k);

// pre: |u| = params.d. Output length params.total().
BitString encode(const BitString& u, const PipelineParams& params);

// Recovers u from encode(u) minus one burst of at most k deletions,
// decoding segments right to left. Throws DecodeFailure with a stage
// diagnostic when no reconstruction verifies and AmbiguityError when two
// distinct ones do.
BitString pipeline_decode(const BitString& y, const PipelineParams& params);

}  // namespace burstcodes
