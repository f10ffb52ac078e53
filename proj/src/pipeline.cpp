#include "burstcodes/pipeline.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "burstcodes/channel.hpp"
#include "burstcodes/errors.hpp"

namespace burstcodes {

namespace {

BitString slice1(const BitString& x, std::size_t lo, std::size_t hi) {
  if (lo > hi) return BitString{};
  return subsequence(x, {lo, hi, 1});
}

void append_field(std::vector<std::uint8_t>& out, std::uint64_t value, std::size_t width) {
  for (std::size_t bit = width; bit-- > 0;) {
    out.push_back(static_cast<std::uint8_t>((value >> bit) & 1));
  }
}

std::uint64_t read_field(const BitString& bits, std::size_t& cursor, std::size_t width) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < width; ++i) {
    value = (value << 1) | static_cast<std::uint64_t>(bits[cursor++]);
  }
  return value;
}

}  // namespace

PipelineParams PipelineParams::make(std::size_t d, std::size_t k, std::size_t delta) {
  if (k == 0) throw std::invalid_argument("PipelineParams: k must be positive");
  if (delta == 0) delta = PatternParams::formula_delta(k, d);
  if (d < 2 * k) throw std::invalid_argument("PipelineParams: message shorter than the marker");
  if (delta < 4 * k) throw std::invalid_argument("PipelineParams: delta must be at least 4k");
  PipelineParams p;
  p.d = d;
  p.k = k;
  p.pattern = PatternParams::with_delta(k, delta);
  p.block_len = delta - 4 * k + 1;
  p.m1 = d + 2 * k * (d / p.block_len);
  p.w1 = syndrome_width(p.m1, k, delta);
  p.m2 = p.w1 + 2 * k * (p.w1 / p.block_len);
  p.w2 = syndrome_width(p.m2, k, delta);
  p.m3 = p.w2 * (k + 1);
  return p;
}

std::size_t syndrome_width(std::size_t n, std::size_t k, std::size_t delta) {
  if (n == 0 || k == 0 || delta < 2) {
    throw std::invalid_argument("syndrome_width: need n >= 1, k >= 1, delta >= 2");
  }
  std::size_t pairs = k * (k + 1) / 2;
  return 2 + ceil_log2(2 * n) + pairs * ceil_log2(delta) + pairs;
}

BitString serialize_syndromes(const SyndromeSet& s, std::size_t n, std::size_t k,
                              std::size_t delta) {
  std::size_t pairs = k * (k + 1) / 2;
  if (s.v.size() != pairs || s.b.size() != pairs) {
    throw std::invalid_argument("serialize_syndromes: wrong arity for the burst bound");
  }
  auto in_range = [](std::int64_t x, std::int64_t limit) { return 0 <= x && x < limit; };
  if (!in_range(s.c0, 4) || !in_range(s.c1, 2 * static_cast<std::int64_t>(n))) {
    throw std::invalid_argument("serialize_syndromes: census residue out of range");
  }
  for (std::size_t i = 0; i < pairs; ++i) {
    if (!in_range(s.v[i], static_cast<std::int64_t>(delta)) || !in_range(s.b[i], 2)) {
      throw std::invalid_argument("serialize_syndromes: subsequence residue out of range");
    }
  }
  std::vector<std::uint8_t> out;
  out.reserve(syndrome_width(n, k, delta));
  append_field(out, static_cast<std::uint64_t>(s.c0), 2);
  append_field(out, static_cast<std::uint64_t>(s.c1), ceil_log2(2 * n));
  for (std::size_t i = 0; i < pairs; ++i) {
    append_field(out, static_cast<std::uint64_t>(s.v[i]), ceil_log2(delta));
  }
  for (std::size_t i = 0; i < pairs; ++i) {
    append_field(out, static_cast<std::uint64_t>(s.b[i]), 1);
  }
  return BitString(std::move(out));
}

SyndromeSet deserialize_syndromes(const BitString& bits, std::size_t n, std::size_t k,
                                  std::size_t delta) {
  if (bits.size() != syndrome_width(n, k, delta)) {
    throw std::invalid_argument("deserialize_syndromes: wrong payload width");
  }
  std::size_t pairs = k * (k + 1) / 2;
  std::size_t cursor = 0;
  SyndromeSet s;
  s.c0 = static_cast<std::int64_t>(read_field(bits, cursor, 2));
  s.c1 = static_cast<std::int64_t>(read_field(bits, cursor, ceil_log2(2 * n)));
  if (s.c1 >= 2 * static_cast<std::int64_t>(n)) {
    throw FormatError("deserialize_syndromes: census residue out of range");
  }
  for (std::size_t i = 0; i < pairs; ++i) {
    auto v = static_cast<std::int64_t>(read_field(bits, cursor, ceil_log2(delta)));
    if (v >= static_cast<std::int64_t>(delta)) {
      throw FormatError("deserialize_syndromes: subsequence residue out of range");
    }
    s.v.push_back(v);
  }
  for (std::size_t i = 0; i < pairs; ++i) {
    s.b.push_back(static_cast<std::int64_t>(read_field(bits, cursor, 1)));
  }
  return s;
}

BitString densify(const BitString& u, const PipelineParams& params) {
  const auto& marker = params.pattern.pattern.raw();
  std::vector<std::uint8_t> out;
  out.reserve(u.size() + marker.size() * (u.size() / params.block_len));
  for (std::size_t i = 0; i < u.size(); ++i) {
    out.push_back(static_cast<std::uint8_t>(u[i]));
    if ((i + 1) % params.block_len == 0) {
      out.insert(out.end(), marker.begin(), marker.end());
    }
  }
  return BitString(std::move(out));
}

BitString undensify(const BitString& x, const PipelineParams& params) {
  const std::size_t L = params.block_len;
  const std::size_t C = L + params.pattern.pattern.size();
  const std::size_t blocks = x.size() / C;
  const std::size_t tail = x.size() % C;
  if (tail >= L) {
    throw FormatError("undensify: length is not an encoder output length");
  }
  const auto& marker = params.pattern.pattern.raw();
  std::vector<std::uint8_t> out;
  out.reserve(blocks * L + tail);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t base = b * C;
    for (std::size_t i = 0; i < L; ++i) out.push_back(static_cast<std::uint8_t>(x[base + i]));
    for (std::size_t i = 0; i < marker.size(); ++i) {
      if (x[base + L + i] != marker[i]) {
        throw FormatError("undensify: marker bits are corrupted");
      }
    }
  }
  for (std::size_t i = 0; i < tail; ++i) {
    out.push_back(static_cast<std::uint8_t>(x[blocks * C + i]));
  }
  return BitString(std::move(out));
}

BitString repetition_encode(const BitString& u, std::size_t k) {
  std::vector<std::uint8_t> out;
  out.reserve(u.size() * (k + 1));
  for (std::size_t i = 0; i < u.size(); ++i) {
    out.insert(out.end(), k + 1, static_cast<std::uint8_t>(u[i]));
  }
  return BitString(std::move(out));
}

BitString repetition_decode(const BitString& y, std::size_t m, std::size_t k) {
  const std::size_t full = m * (k + 1);
  if (y.size() > full || full - y.size() > k) {
    throw std::invalid_argument("repetition_decode: length deficit outside [0, k]");
  }
  const std::size_t deficit = full - y.size();
  std::vector<std::uint8_t> out;
  out.reserve(m);
  // A burst of `deficit` deletions shifts positions by at most `deficit`,
  // so index j(k+1) - deficit still falls inside the j-th repeated block.
  for (std::size_t j = 1; j <= m; ++j) {
    out.push_back(static_cast<std::uint8_t>(y.at1(j * (k + 1) - deficit)));
  }
  return BitString(std::move(out));
}

BitString encode(const BitString& u, const PipelineParams& params) {
  if (u.size() != params.d) {
    throw std::invalid_argument("encode: message length does not match the layout");
  }
  const std::size_t delta = params.pattern.delta;
  BitString seg1 = densify(u, params);
  BitString s1 = serialize_syndromes(extract_syndromes(seg1, params.segment1_code()),
                                     params.m1, params.k, delta);
  BitString seg2 = densify(s1, params);
  BitString s2 = serialize_syndromes(extract_syndromes(seg2, params.segment2_code()),
                                     params.m2, params.k, delta);
  return concat(concat(seg1, seg2), repetition_encode(s2, params.k));
}

BitString pipeline_decode(const BitString& y, const PipelineParams& params) {
  const std::size_t N = params.total();
  const std::size_t delta = params.pattern.delta;
  if (y.size() > N || N - y.size() > params.k) {
    throw std::invalid_argument("pipeline_decode: length deficit outside [0, k]");
  }
  const std::size_t kp = N - y.size();

  // Wherever the burst fell, the final m3 - kp symbols of y are segment 3
  // after one contiguous burst of exactly kp deletions, so the repetition
  // payload is recovered without any hypothesis.
  BitString tail3 = slice1(y, y.size() - (params.m3 - kp) + 1, y.size());
  BitString s2 = repetition_decode(tail3, params.w2, params.k);
  CodeInstance code2{params.segment2_code(), {}};
  try {
    code2.syn = deserialize_syndromes(s2, params.m2, params.k, delta);
  } catch (const FormatError& e) {
    throw DecodeFailure(std::string("pipeline_decode: repetition payload is malformed: ") +
                        e.what());
  }

  // The burst is contiguous, so the kp deletions split across the three
  // segments as one of at most 2k+1 ordered triples.
  std::vector<std::array<std::size_t, 3>> splits;
  if (kp == 0) {
    splits.push_back({0, 0, 0});
  } else {
    splits.push_back({kp, 0, 0});
    splits.push_back({0, kp, 0});
    splits.push_back({0, 0, kp});
    for (std::size_t i = 1; i < kp; ++i) splits.push_back({i, kp - i, 0});
    for (std::size_t i = 1; i < kp; ++i) splits.push_back({0, i, kp - i});
  }

  std::vector<BitString> found;
  std::string trail;
  for (const auto& [d1, d2, d3] : splits) {
    (void)d3;
    auto tag = [&](const char* what) {
      trail += " (" + std::to_string(d1) + "," + std::to_string(d2) + "," +
               std::to_string(d3) + "):" + what;
    };
    try {
      BitString win2 = slice1(y, params.m1 - d1 + 1, params.m1 - d1 + params.m2 - d2);
      BitString seg2c = d2 == 0 ? win2 : decode(win2, code2);
      if (serialize_syndromes(extract_syndromes(seg2c, params.segment2_code()),
                              params.m2, params.k, delta) != s2) {
        tag("segment-2 checksum mismatch");
        continue;
      }
      BitString s1 = undensify(seg2c, params);
      if (s1.size() != params.w1) {
        tag("segment-2 payload width");
        continue;
      }
      CodeInstance code1{params.segment1_code(),
                         deserialize_syndromes(s1, params.m1, params.k, delta)};
      BitString win1 = slice1(y, 1, params.m1 - d1);
      BitString seg1c = d1 == 0 ? win1 : decode(win1, code1);
      if (serialize_syndromes(extract_syndromes(seg1c, params.segment1_code()),
                              params.m1, params.k, delta) != s1) {
        tag("segment-1 checksum mismatch");
        continue;
      }
      BitString u = undensify(seg1c, params);
      if (u.size() != params.d) {
        tag("message width");
        continue;
      }
      BitString full = encode(u, params);
      bool consistent = kp == 0 ? full == y : !burst_prefixes(full, y).empty();
      if (!consistent) {
        tag("re-encoding mismatch");
        continue;
      }
      if (std::find(found.begin(), found.end(), u) == found.end()) found.push_back(u);
    } catch (const DecodeFailure& e) {
      tag(e.what());
    } catch (const FormatError& e) {
      tag(e.what());
    } catch (const std::domain_error& e) {
      tag(e.what());
    }
  }

  if (found.empty()) {
    throw DecodeFailure("pipeline_decode: no burst split verified;" + trail);
  }
  if (found.size() > 1) {
    throw AmbiguityError("pipeline_decode: two distinct messages verified");
  }
  return found.front();
}

}  // namespace burstcodes
