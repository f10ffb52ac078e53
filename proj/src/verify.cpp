#include "burstcodes/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "burstcodes/channel.hpp"
#include "burstcodes/errors.hpp"
#include "burstcodes/locator.hpp"
#include "burstcodes/vt.hpp"

namespace burstcodes {

namespace {

void note(std::string& first_issue, const std::string& msg) {
  if (first_issue.empty()) first_issue = msg;
}

}  // namespace

CodeSweepReport run_code_sweep(const CodeSweepOptions& opt) {
  CodeParams params{opt.n, PatternParams::with_delta(opt.k, opt.delta)};
  CodeSweepReport rep;
  rep.n = opt.n;
  rep.k = opt.k;
  rep.delta = opt.delta;

  BucketTable table = bucket_table(params);
  rep.bucket_count = table.size();
  for (const auto& [syn, members] : table) {
    rep.dense_total += members.size();
    rep.best_size = std::max(rep.best_size, members.size());
  }
  rep.dense_enumerated = dense_count_exact(opt.n, params.pattern);
  rep.partition_ok = rep.dense_total == rep.dense_enumerated;
  if (!rep.partition_ok) note(rep.first_issue, "bucket sizes do not sum to the dense count");

  // Average-case counting: the best bucket cannot be smaller than the
  // dense strings spread over 4 * 2n * (delta * 2)^pairs syndrome slots.
  {
    const std::size_t pairs = syndrome_count(opt.k);
    unsigned __int128 lhs = rep.best_size;
    lhs *= 8 * static_cast<unsigned __int128>(opt.n);
    for (std::size_t i = 0; i < pairs; ++i) lhs *= 2 * opt.delta;
    rep.pigeonhole_ok = lhs >= rep.dense_total;
    if (!rep.pigeonhole_ok) note(rep.first_issue, "best bucket below the counting bound");
  }

  // Pick the buckets to round-trip: the largest plus seeded random ones.
  std::vector<const BucketTable::value_type*> chosen;
  if (!table.empty()) {
    const BucketTable::value_type* best = &*table.begin();
    for (const auto& entry : table) {
      if (entry.second.size() > best->second.size()) best = &entry;
    }
    chosen.push_back(best);
    if (opt.all_buckets || table.size() <= opt.random_buckets + 1) {
      for (const auto& entry : table) {
        if (&entry != best) chosen.push_back(&entry);
      }
    } else {
      std::mt19937_64 eng(opt.seed);
      std::set<std::size_t> picked;
      while (picked.size() < opt.random_buckets) {
        std::size_t idx = static_cast<std::size_t>(eng() % table.size());
        auto it = table.begin();
        std::advance(it, idx);
        if (&*it == best) continue;
        if (picked.insert(idx).second) chosen.push_back(&*it);
      }
    }
  }

  for (const auto* entry : chosen) {
    ++rep.buckets_checked;
    CodeInstance inst{params, entry->first};
    std::vector<BitString> words;
    words.reserve(entry->second.size());
    for (std::uint32_t value : entry->second) {
      words.push_back(BitString::from_value_msb(value, opt.n));
    }
    if (!is_burst_code(words, opt.k)) {
      ++rep.disjointness_violations;
      note(rep.first_issue, "bucket with overlapping burst balls");
    }
    for (const BitString& x : words) {
      auto check = [&](const BitString& y) {
        ++rep.words_decoded;
        try {
          BitString back = decode(y, inst);
          if (back != x) {
            ++rep.wrong_decodes;
            note(rep.first_issue,
                 "decode(" + y.to_text() + ") = " + back.to_text() + ", expected " + x.to_text());
          }
        } catch (const DecodeFailure& e) {
          ++rep.decode_failures;
          note(rep.first_issue, "decode(" + y.to_text() + ") of " + x.to_text() +
                                    " failed: " + e.what());
        } catch (const AmbiguityError& e) {
          ++rep.ambiguities;
          note(rep.first_issue, "decode(" + y.to_text() + ") of " + x.to_text() +
                                    " ambiguous: " + e.what());
        }
      };
      check(x);  // full-length word: plain membership path
      for (const BitString& y : ball_upto(x, opt.k)) check(y);
    }
  }
  return rep;
}

LocateSweepReport run_locate_sweep(std::size_t n, std::size_t k, std::size_t delta) {
  PatternParams params = PatternParams::with_delta(k, delta);
  LocateSweepReport rep;
  rep.n = n;
  rep.k = k;
  rep.delta = delta;
  const std::int64_t n2 = 2 * static_cast<std::int64_t>(n);

  for (std::uint64_t value = 0; value < (std::uint64_t{1} << n); ++value) {
    BitString x = BitString::from_value_msb(value, n);
    if (!is_dense(x, params)) continue;
    ++rep.dense_total;
    auto gaps = gap_vector(x, params.pattern);
    LocSyndromes syn{static_cast<std::int64_t>(gaps.size() - 1) % 4,
                     ((vt_checksum(gaps) % n2) + n2) % n2, n};
    for (std::size_t kp = 1; kp <= k && kp < n; ++kp) {
      for (std::size_t start = 1; start + kp - 1 <= n; ++start) {
        BitString y = apply_burst(x, {start - 1, kp});
        ++rep.cases_checked;
        LocateResult loc;
        try {
          loc = locate(y, params, syn);
        } catch (const DecodeFailure& e) {
          ++rep.locate_failures;
          note(rep.first_issue, "locate refused x=" + x.to_text() + " start=" +
                                    std::to_string(start) + " len=" + std::to_string(kp) +
                                    ": " + e.what());
          continue;
        }
        rep.max_candidates = std::max(rep.max_candidates, loc.candidates.size());
        for (const auto& cand : loc.candidates) {
          if (cand.range.count() > static_cast<std::int64_t>(delta)) {
            ++rep.oversized;
            note(rep.first_issue, "candidate wider than delta for x=" + x.to_text());
          }
        }
        // Sound iff some candidate holds a start position that really
        // maps x onto y.
        bool sound = false;
        for (std::size_t prefix : burst_prefixes(x, y)) {
          std::int64_t valid_start = static_cast<std::int64_t>(prefix) + 1;
          for (const auto& cand : loc.candidates) {
            if (cand.range.contains(valid_start)) {
              sound = true;
              break;
            }
          }
          if (sound) break;
        }
        if (!sound) {
          ++rep.unsound;
          note(rep.first_issue, "no candidate covers a valid start for x=" + x.to_text() +
                                    " start=" + std::to_string(start) +
                                    " len=" + std::to_string(kp) + " y=" + y.to_text());
        }
      }
    }
  }
  return rep;
}

}  // namespace burstcodes
