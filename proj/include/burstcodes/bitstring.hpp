#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace burstcodes {

// Immutable binary string. All positions named in public contracts are
// 1-based (matching the usual coding-theory convention); operator[] is
// plain 0-based storage access.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);

  // Parses a run of '0'/'1' characters; anything else is a FormatError.
  static BitString from_text(std::string_view text);
  static BitString zeros(std::size_t n);
  static BitString ones(std::size_t n);
  // The low n bits of value, most significant bit first (position 1).
  static BitString from_value_msb(std::uint64_t value, std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i]; }
  int at1(std::size_t pos) const;  // 1-based, bounds-checked

  const std::vector<std::uint8_t>& raw() const { return bits_; }
  std::string to_text() const;

  friend bool operator==(const BitString& a, const BitString& b) = default;
  friend auto operator<=>(const BitString& a, const BitString& b) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Arithmetic-progression index set {start, start+stride, ...} capped at end.
// Bounds are 1-based and inclusive.
struct StridedRange {
  std::size_t start = 1;
  std::size_t end = 1;
  std::size_t stride = 1;

  std::size_t count() const { return (end - start) / stride + 1; }
};

// Inclusive 1-based position interval.
struct PosInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t count() const { return hi - lo + 1; }
  bool contains(std::int64_t pos) const { return lo <= pos && pos <= hi; }
  friend bool operator==(const PosInterval&, const PosInterval&) = default;
};

// x restricted to the positions of r, in order.
BitString subsequence(const BitString& x, const StridedRange& r);

// Inverse of the residue split: residues[i-1] carries the positions
// congruent to i modulo stride, and the result has length n.
BitString interleave_merge(const std::vector<BitString>& residues,
                           std::size_t stride, std::size_t n);

BitString concat(const BitString& a, const BitString& b);

}  // namespace burstcodes

template <>
struct std::hash<burstcodes::BitString> {
  std::size_t operator()(const burstcodes::BitString& x) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t bit : x.raw()) {
      h ^= static_cast<std::size_t>(bit) + 0x9e;
      h *= 1099511628211ull;
    }
    return h ^ (x.size() << 1);
  }
};
