#pragma once

#include <cstdint>
#include <string>

#include "burstcodes/burst_code.hpp"

namespace burstcodes {

// Exhaustive correctness sweep over one (n, k, delta) configuration:
// buckets all dense strings, then round-trips every burst of every
// codeword of the largest bucket plus `random_buckets` seeded others.
struct CodeSweepOptions {
  std::size_t n = 0;
  std::size_t k = 1;
  std::size_t delta = 3;
  std::size_t random_buckets = 3;
  std::uint64_t seed = 1;
  bool all_buckets = false;  // round-trip every bucket instead
};

struct CodeSweepReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t delta = 0;
  std::uint64_t dense_total = 0;       // sum of bucket sizes
  std::uint64_t dense_enumerated = 0;  // independent exhaustive count
  std::size_t bucket_count = 0;
  std::size_t best_size = 0;
  std::size_t buckets_checked = 0;
  std::uint64_t words_decoded = 0;
  std::uint64_t wrong_decodes = 0;
  std::uint64_t decode_failures = 0;
  std::uint64_t ambiguities = 0;
  std::uint64_t disjointness_violations = 0;
  bool partition_ok = true;   // dense_total == dense_enumerated
  bool pigeonhole_ok = true;  // best_size * 8n * (2*delta)^pairs >= dense_total
  std::string first_issue;

  bool ok() const {
    return wrong_decodes == 0 && decode_failures == 0 && ambiguities == 0 &&
           disjointness_violations == 0 && partition_ok && pigeonhole_ok;
  }
};

CodeSweepReport run_code_sweep(const CodeSweepOptions& opt);

// Exhaustive soundness sweep of the burst locator: for every dense x of
// length n, every burst length 1..k and every start position, some
// candidate interval must contain a start position that maps x onto y.
struct LocateSweepReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t delta = 0;
  std::uint64_t dense_total = 0;
  std::uint64_t cases_checked = 0;
  std::uint64_t unsound = 0;          // no candidate contained a valid start
  std::uint64_t oversized = 0;        // candidate wider than delta
  std::uint64_t locate_failures = 0;  // locate refused a genuine ball member
  std::size_t max_candidates = 0;
  std::string first_issue;

  bool ok() const { return unsound == 0 && oversized == 0 && locate_failures == 0; }
};

LocateSweepReport run_locate_sweep(std::size_t n, std::size_t k, std::size_t delta);

}  // namespace burstcodes
