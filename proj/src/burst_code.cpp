#include "burstcodes/burst_code.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "burstcodes/channel.hpp"
#include "burstcodes/errors.hpp"
#include "burstcodes/vt.hpp"

namespace burstcodes {

namespace {

constexpr std::size_t kMaxExhaustiveBits = 24;

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? (a + b - 1) / b : -(-a / b);
}

void check_params(const CodeParams& params) {
  if (params.n == 0) throw std::invalid_argument("CodeParams: n must be positive");
  if (params.pattern.pattern.size() > params.n) {
    throw std::invalid_argument("CodeParams: marker longer than the code length");
  }
}

}  // namespace

std::size_t syndrome_count(std::size_t k) { return k * (k + 1) / 2; }

SyndromeSet extract_syndromes(const BitString& x, const CodeParams& params) {
  check_params(params);
  if (x.size() != params.n) {
    throw std::invalid_argument("extract_syndromes: length mismatch");
  }
  if (!is_dense(x, params.pattern)) {
    throw std::domain_error("extract_syndromes: string is not dense");
  }
  const std::int64_t n2 = 2 * static_cast<std::int64_t>(params.n);
  const std::int64_t delta = static_cast<std::int64_t>(params.pattern.delta);
  SyndromeSet s;
  auto gaps = gap_vector(x, params.pattern.pattern);
  s.c0 = static_cast<std::int64_t>(gaps.size() - 1) % 4;
  s.c1 = mod_pos(vt_checksum(gaps), n2);
  s.v.reserve(syndrome_count(params.pattern.k));
  s.b.reserve(syndrome_count(params.pattern.k));
  for (std::size_t stride = 1; stride <= params.pattern.k; ++stride) {
    for (std::size_t i = 1; i <= stride; ++i) {
      BitString sub = subsequence(x, {i, params.n, stride});
      s.v.push_back(mod_pos(vt_checksum(sub), delta));
      s.b.push_back(parity_checksum(sub) % 2);
    }
  }
  return s;
}

bool code_member(const BitString& x, const CodeInstance& inst) {
  if (x.size() != inst.params.n) return false;
  if (!is_dense(x, inst.params.pattern)) return false;
  return extract_syndromes(x, inst.params) == inst.syn;
}

BitString decode(const BitString& y, const CodeInstance& inst) {
  const CodeParams& P = inst.params;
  check_params(P);
  if (inst.syn.v.size() != syndrome_count(P.pattern.k) ||
      inst.syn.b.size() != syndrome_count(P.pattern.k)) {
    throw std::invalid_argument("decode: syndrome vectors have the wrong arity");
  }
  const std::int64_t n = static_cast<std::int64_t>(P.n);
  if (y.size() > P.n) {
    throw std::invalid_argument("decode: received word is longer than the code length");
  }
  if (y.size() == P.n) {
    // No deletion happened; accept y itself if it is a codeword.
    if (!code_member(y, inst)) {
      throw DecodeFailure("decode: full-length word is not a codeword");
    }
    return y;
  }
  const std::int64_t kp = n - static_cast<std::int64_t>(y.size());
  // locate() rejects deficits above the declared bound.
  LocateResult loc = locate(y, P.pattern, {inst.syn.c0, inst.syn.c1, P.n});

  std::vector<BitString> found;
  for (const LocateCandidate& cand : loc.candidates) {
    // The block starts somewhere in [lo, hi], so the deleted positions
    // lie in [lo, hi + kp - 1]; each residue class mod kp loses exactly
    // one of them.
    const std::int64_t lo = cand.range.lo;
    const std::int64_t hi = cand.range.hi;
    std::vector<BitString> residues;
    residues.reserve(static_cast<std::size_t>(kp));
    bool ok = true;
    for (std::int64_t i = 1; i <= kp && ok; ++i) {
      const std::int64_t ni = (n - i) / kp + 1;
      const std::size_t flat =
          SyndromeSet::index_of(static_cast<std::size_t>(i), static_cast<std::size_t>(kp));
      BitString yi = i <= static_cast<std::int64_t>(y.size())
                         ? subsequence(y, {static_cast<std::size_t>(i), y.size(),
                                           static_cast<std::size_t>(kp)})
                         : BitString{};
      std::int64_t t_lo = std::max<std::int64_t>(1, ceil_div(lo - i, kp) + 1);
      std::int64_t t_hi = std::min<std::int64_t>(ni, (hi + kp - 1 - i) / kp + 1);
      if (t_lo > t_hi) {
        ok = false;
        break;
      }
      SvtParams sp{inst.syn.v[flat], static_cast<int>(inst.syn.b[flat]),
                   static_cast<std::int64_t>(P.pattern.delta),
                   static_cast<std::size_t>(ni)};
      try {
        residues.push_back(svt_decode(yi, sp, {t_lo, t_hi}));
      } catch (const DecodeFailure&) {
        ok = false;
      }
    }
    if (!ok) continue;
    BitString merged = interleave_merge(residues, static_cast<std::size_t>(kp), P.n);
    if (!code_member(merged, inst)) continue;
    if (burst_prefixes(merged, y).empty()) continue;
    if (std::find(found.begin(), found.end(), merged) == found.end()) {
      found.push_back(merged);
    }
  }

  if (found.empty()) {
    throw DecodeFailure("decode: no codeword explains the received word");
  }
  if (found.size() > 1) {
    throw AmbiguityError("decode: two distinct codewords explain the received word");
  }
  return found.front();
}

std::optional<BitString> try_decode(const BitString& y, const CodeInstance& inst) {
  try {
    return decode(y, inst);
  } catch (const DecodeFailure&) {
    return std::nullopt;
  }
}

std::vector<BitString> enumerate_code(const CodeInstance& inst) {
  check_params(inst.params);
  const std::size_t n = inst.params.n;
  if (n > kMaxExhaustiveBits) {
    throw std::length_error("enumerate_code: exhaustive enumeration capped at 24 bits");
  }
  std::vector<BitString> out;
  for (std::uint64_t value = 0; value < (std::uint64_t{1} << n); ++value) {
    BitString x = BitString::from_value_msb(value, n);
    if (code_member(x, inst)) out.push_back(x);
  }
  return out;
}

BucketTable bucket_table(const CodeParams& params) {
  check_params(params);
  const std::size_t n = params.n;
  if (n > kMaxExhaustiveBits) {
    throw std::length_error("bucket_table: exhaustive enumeration capped at 24 bits");
  }
  const std::uint64_t space = std::uint64_t{1} << n;
  auto bucket_range = [&params, n](std::uint64_t first, std::uint64_t last) {
    BucketTable table;
    for (std::uint64_t value = first; value < last; ++value) {
      BitString x = BitString::from_value_msb(value, n);
      if (!is_dense(x, params.pattern)) continue;
      table[extract_syndromes(x, params)].push_back(static_cast<std::uint32_t>(value));
    }
    return table;
  };

  unsigned shards = std::max(1u, std::thread::hardware_concurrency());
  if (space < 4096) shards = 1;
  std::vector<BucketTable> parts(shards);
  std::vector<std::thread> workers;
  workers.reserve(shards);
  for (unsigned s = 0; s < shards; ++s) {
    std::uint64_t first = space / shards * s + std::min<std::uint64_t>(s, space % shards);
    std::uint64_t last = first + space / shards + (s < space % shards ? 1 : 0);
    workers.emplace_back([&, s, first, last] { parts[s] = bucket_range(first, last); });
  }
  for (auto& w : workers) w.join();

  // Shards cover ascending value ranges, so appending in shard order keeps
  // every bucket sorted and the merge is schedule-independent.
  BucketTable table = std::move(parts.front());
  for (unsigned s = 1; s < shards; ++s) {
    for (auto& [syn, members] : parts[s]) {
      auto& dst = table[syn];
      dst.insert(dst.end(), members.begin(), members.end());
    }
  }
  return table;
}

SearchResult search_best(const CodeParams& params) {
  SearchResult best;
  for (const auto& [syn, members] : bucket_table(params)) {
    best.dense_total += members.size();
    ++best.bucket_count;
    if (members.size() > best.size) {
      best.size = members.size();
      best.syn = syn;
    }
  }
  best.redundancy = best.size > 0
                        ? static_cast<double>(params.n) - std::log2(static_cast<double>(best.size))
                        : std::numeric_limits<double>::quiet_NaN();
  return best;
}

}  // namespace burstcodes
