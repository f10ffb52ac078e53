#include "burstcodes/vt.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "burstcodes/errors.hpp"

namespace burstcodes {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void check_params(const SvtParams& s) {
  if (s.n == 0) throw std::invalid_argument("SvtParams: n must be positive");
  if (s.p < 2) throw std::invalid_argument("SvtParams: modulus must be at least 2");
  if (s.v < 0 || s.v >= s.p) throw std::invalid_argument("SvtParams: checksum residue out of range");
  if (s.b != 0 && s.b != 1) throw std::invalid_argument("SvtParams: parity residue must be 0 or 1");
}

}  // namespace

std::int64_t vt_checksum(std::span<const std::int64_t> a) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += static_cast<std::int64_t>(i + 1) * a[i];
  return sum;
}

std::int64_t vt_checksum(const BitString& x) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) sum += static_cast<std::int64_t>(i + 1);
  }
  return sum;
}

std::int64_t parity_checksum(std::span<const std::int64_t> a) {
  std::int64_t sum = 0;
  for (std::int64_t e : a) sum += e;
  return sum;
}

std::int64_t parity_checksum(const BitString& x) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i];
  return sum;
}

bool svt_member(const BitString& x, const SvtParams& s) {
  check_params(s);
  if (x.size() != s.n) throw std::invalid_argument("svt_member: length mismatch");
  return mod_pos(vt_checksum(x), s.p) == s.v && parity_checksum(x) % 2 == s.b;
}

BitString svt_decode(const BitString& y, const SvtParams& s, PosInterval window) {
  check_params(s);
  if (y.size() + 1 != s.n) throw std::invalid_argument("svt_decode: received word must be one bit short");
  std::int64_t n = static_cast<std::int64_t>(s.n);
  std::int64_t lo = std::max<std::int64_t>(window.lo, 1);
  std::int64_t hi = std::min<std::int64_t>(window.hi, n);
  if (lo > hi) throw DecodeFailure("svt_decode: candidate window is empty");
  if (hi - lo + 1 > s.p) {
    throw std::invalid_argument("svt_decode: window wider than the checksum modulus resolves");
  }

  // The parity residue pins the deleted bit itself.
  int bit = static_cast<int>(mod_pos(s.b - parity_checksum(y), 2));

  // Re-inserting `bit` at position t shifts the suffix weights:
  // checksum(x) = checksum(y) + t*bit + (ones of y at positions >= t).
  std::vector<std::int64_t> suffix_ones(s.n + 1, 0);
  for (std::int64_t t = static_cast<std::int64_t>(y.size()); t >= 1; --t) {
    suffix_ones[t] = suffix_ones[t + 1] + y[t - 1];
  }
  std::int64_t base = vt_checksum(y);

  std::int64_t first = -1;
  BitString repaired;
  for (std::int64_t t = lo; t <= hi; ++t) {
    if (mod_pos(base + t * bit + suffix_ones[t], s.p) != s.v) continue;
    if (first < 0) {
      first = t;
      std::vector<std::uint8_t> bits;
      bits.reserve(s.n);
      for (std::int64_t i = 1; i < t; ++i) bits.push_back(static_cast<std::uint8_t>(y[i - 1]));
      bits.push_back(static_cast<std::uint8_t>(bit));
      for (std::int64_t i = t; i <= static_cast<std::int64_t>(y.size()); ++i) {
        bits.push_back(static_cast<std::uint8_t>(y[i - 1]));
      }
      repaired = BitString(std::move(bits));
      continue;
    }
    // A later matching position yields the same string iff everything
    // between the two insertion points equals the inserted bit.
    bool same = true;
    for (std::int64_t i = first; i < t; ++i) {
      if (y[i - 1] != bit) {
        same = false;
        break;
      }
    }
    if (!same) {
      throw AmbiguityError("svt_decode: two distinct repairs match the checksums");
    }
  }
  if (first < 0) throw DecodeFailure("svt_decode: no insertion matches the checksums");
  return repaired;
}

}  // namespace burstcodes
