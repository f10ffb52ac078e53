#include "burstcodes/locator.hpp"

#include <stdexcept>

#include "burstcodes/errors.hpp"
#include "burstcodes/vt.hpp"

namespace burstcodes {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// All representatives of `base` (mod m) that fall inside [lo, hi].
std::vector<std::int64_t> lifts_into(std::int64_t base, std::int64_t lo,
                                     std::int64_t hi, std::int64_t m) {
  std::vector<std::int64_t> out;
  if (lo > hi) return out;
  for (std::int64_t v = lo + mod_pos(base - lo, m); v <= hi; v += m) {
    out.push_back(v);
  }
  return out;
}

std::int64_t ceil_half(std::int64_t v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }

}  // namespace

bool loc_member(const BitString& x, const PatternParams& params,
                const LocSyndromes& syn) {
  if (x.size() != syn.n) throw std::invalid_argument("loc_member: length mismatch");
  if (!is_dense(x, params)) return false;
  std::int64_t n2 = 2 * static_cast<std::int64_t>(syn.n);
  auto gaps = gap_vector(x, params.pattern);
  std::int64_t c0 = static_cast<std::int64_t>(gaps.size() - 1) % 4;
  std::int64_t c1 = mod_pos(vt_checksum(gaps), n2);
  return c0 == syn.c0 && c1 == syn.c1;
}

LocateResult locate(const BitString& y, const PatternParams& params,
                    const LocSyndromes& syn) {
  const std::int64_t n = static_cast<std::int64_t>(syn.n);
  const std::int64_t m2n = 2 * n;
  if (y.size() >= syn.n) throw std::invalid_argument("locate: received word is not shorter than n");
  const std::int64_t kp = n - static_cast<std::int64_t>(y.size());
  if (kp > static_cast<std::int64_t>(params.k)) {
    throw std::out_of_range("locate: length deficit exceeds the declared burst bound");
  }
  const std::int64_t delta = static_cast<std::int64_t>(params.delta);
  const std::int64_t kk = static_cast<std::int64_t>(params.k);

  // Marker census of the received word. Occurrences of 0^k 1^k never
  // overlap, so every interior gap is at least 2k.
  auto gaps = [&] {
    std::vector<std::int64_t> g;
    std::size_t prev = 0;
    if (y.size() >= params.pattern.size()) {
      for (std::size_t s : pattern_starts(y, params.pattern)) {
        g.push_back(static_cast<std::int64_t>(s - prev));
        prev = s;
      }
    }
    g.push_back(static_cast<std::int64_t>(y.size() + 1 - prev));
    return g;
  }();
  const std::int64_t t = static_cast<std::int64_t>(gaps.size()) - 1;  // marker count of y

  // pre[j] = sum of the first j gaps; S(j) = pre[j-1] is the position of
  // marker j-1 in y (0 for j = 1), and pre[t+1] = |y|+1.
  std::vector<std::int64_t> pre(gaps.size() + 1, 0);
  for (std::size_t i = 0; i < gaps.size(); ++i) pre[i + 1] = pre[i] + gaps[i];
  const std::int64_t total = pre[t + 1];
  auto S = [&](std::int64_t j) { return pre[j - 1]; };

  // How many markers the burst destroyed (-1: one was created).
  const std::int64_t d_raw = mod_pos(syn.c0 - t, 4);
  const std::int64_t dprime = mod_pos(syn.c1 - vt_checksum(gaps), m2n);

  LocateResult out;
  out.burst_len = static_cast<std::size_t>(kp);
  // Emit the feasible window of first-deleted positions for one reading,
  // clipped to the valid range and tiled so no candidate exceeds delta.
  auto push = [&](std::int64_t lo, std::int64_t hi, const char* rule) {
    lo = std::max<std::int64_t>(lo, 1);
    hi = std::min<std::int64_t>(hi, n - kp + 1);  // latest possible block start
    for (std::int64_t a = lo; a <= hi; a += delta) {
      std::int64_t b = std::min(a + delta - 1, hi);
      bool dup = false;
      for (const auto& c : out.candidates) {
        if (c.range.lo == a && c.range.hi == b) { dup = true; break; }
      }
      if (!dup) out.candidates.push_back({{a, b}, rule});
    }
  };
  // Sum of the gaps strictly after index j.
  auto tail = [&](std::int64_t j) { return total - pre[j]; };

  // Every case below walks the possible marker slots j, keeps the ones whose
  // checksum difference matches dprime, and reconstructs the unknown codeword
  // gaps exactly. Interior codeword gaps lie in [2k, delta]; the gap before
  // the first marker and the gap after the last one can be as short as 1.
  switch (d_raw) {
    case 0: {
      // Marker census unchanged. Either the block fell inside gap j without
      // touching a marker (difference j*k'), or it wiped out marker j while
      // a replacement occurrence formed nearby (difference j*k' + k2, where
      // k2 is the shift balance between the two affected gaps).
      if (dprime % kp == 0) {
        std::int64_t j = dprime / kp;
        if (j >= 1 && j <= t + 1) {
          std::int64_t lo = j >= 2 ? S(j) + 2 * kk : 1;
          std::int64_t hi = j <= t ? S(j + 1) : n - kp + 1;
          push(lo, hi, "gap-burst");
        }
      }
      for (std::int64_t j = 1; j <= t; ++j) {
        // Replacement marker sits at S(j+1); the destroyed one stood k1
        // positions to its right (k1 may be negative). Both must touch the
        // block, which pins the first deleted position to within 2k-1.
        auto k2s = lifts_into(dprime - j * kp, 2 - 2 * kk, 2 * kk + kp - 2, m2n);
        for (std::int64_t k2 : k2s) {
          std::int64_t k1 = kp - k2;
          std::int64_t lo = S(j + 1) + std::max<std::int64_t>(1, 1 - k2);
          std::int64_t hi = S(j + 1) + std::min(2 * kk - 1, k1 + 2 * kk - 1);
          push(lo, hi, "marker-replaced");
        }
      }
      break;
    }
    case 3: {
      // One marker more than the codeword had: the block split gap j by
      // gluing a new occurrence together, so it straddles that marker.
      for (std::int64_t j = 1; j <= t; ++j) {
        if (mod_pos(j * kp - tail(j), m2n) != dprime) continue;
        std::int64_t lo = std::max(S(j + 1) + 1, j >= 2 ? S(j) + 2 * kk : 1);
        std::int64_t hi = std::min(S(j + 1) + 2 * kk - 1,
                                   j <= t - 1 ? S(j + 2) : n - kp + 1);
        push(lo, hi, "marker-created");
      }
      break;
    }
    case 1: {
      // One marker destroyed, none created: gaps j and j+1 of the codeword
      // merged. The residue pins the unknown gap after the destroyed marker,
      // which in turn pins the marker position exactly.
      for (std::int64_t j = 1; j <= t + 1; ++j) {
        std::int64_t ay = gaps[j - 1];
        std::int64_t next_lb = j <= t ? 2 * kk : 1;
        std::int64_t own_lb = j >= 2 ? 2 * kk : 1;
        std::int64_t a_lo = std::max(next_lb, ay + kp - delta);
        std::int64_t a_hi = std::min(delta, ay + kp - own_lb);
        for (std::int64_t c : lifts_into(dprime - tail(j) - j * kp, a_lo, a_hi, m2n)) {
          std::int64_t sj = S(j + 1) + kp - c;
          push(sj - kp + 1, sj + 2 * kk - 1, "marker-destroyed");
        }
      }
      break;
    }
    case 2: {
      // Two adjacent markers destroyed; the block covers both, so the gap
      // between them is at most 2k + k' - 2 and the block is at least 2 long.
      if (kp < 2) break;
      for (std::int64_t j = 1; j <= t + 1; ++j) {
        std::int64_t ay = gaps[j - 1];
        std::int64_t z_base_lb = j <= t ? 2 * kk : 1;  // gap after the second marker
        std::int64_t own_lb = j >= 2 ? 2 * kk : 1;
        std::int64_t c_lo = 2 * kk + 2 * z_base_lb;
        std::int64_t c_hi = 2 * kk + kp - 2 + 2 * delta;
        for (std::int64_t C : lifts_into(dprime - 2 * tail(j) - j * kp, c_lo, c_hi, m2n)) {
          std::int64_t z_hi = std::min({delta, (C - 2 * kk) / 2, delta + C - ay - kp});
          std::int64_t z_lo = std::max({z_base_lb, ceil_half(C - (2 * kk + kp - 2)),
                                        own_lb + C - kp - ay});
          if (z_lo > z_hi) continue;
          push(S(j + 1) + 1 - z_hi, S(j + 1) + 2 * kk + kp - 1 - C + z_hi,
               "two-markers-destroyed");
        }
      }
      break;
    }
  }

  if (out.candidates.empty()) {
    throw DecodeFailure("locate: checksums are inconsistent with the received word");
  }
  return out;
}

}  // namespace burstcodes
