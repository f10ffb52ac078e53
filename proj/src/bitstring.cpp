#include "burstcodes/bitstring.hpp"

#include <stdexcept>

#include "burstcodes/errors.hpp"

namespace burstcodes {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_) {
    if (b > 1) throw std::invalid_argument("BitString: bit values must be 0 or 1");
  }
}

BitString BitString::from_text(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0') {
      bits.push_back(0);
    } else if (c == '1') {
      bits.push_back(1);
    } else {
      throw FormatError("bad character '" + std::string(1, c) +
                        "' in bitstring (want only '0'/'1')");
    }
  }
  return BitString(std::move(bits));
}

BitString BitString::zeros(std::size_t n) {
  return BitString(std::vector<std::uint8_t>(n, 0));
}

BitString BitString::ones(std::size_t n) {
  return BitString(std::vector<std::uint8_t>(n, 1));
}

BitString BitString::from_value_msb(std::uint64_t value, std::size_t n) {
  if (n > 64) throw std::invalid_argument("from_value_msb: width exceeds 64");
  std::vector<std::uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i) {
    bits[i] = static_cast<std::uint8_t>((value >> (n - 1 - i)) & 1u);
  }
  return BitString(std::move(bits));
}

int BitString::at1(std::size_t pos) const {
  if (pos < 1 || pos > bits_.size()) {
    throw std::out_of_range("BitString::at1: position out of range");
  }
  return bits_[pos - 1];
}

std::string BitString::to_text() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] += bits_[i];
  return s;
}

BitString subsequence(const BitString& x, const StridedRange& r) {
  if (r.stride == 0) throw std::invalid_argument("subsequence: stride must be positive");
  if (r.start < 1 || r.start > r.end || r.end > x.size()) {
    throw std::out_of_range("subsequence: range does not fit the string");
  }
  std::vector<std::uint8_t> out;
  out.reserve(r.count());
  for (std::size_t pos = r.start; pos <= r.end; pos += r.stride) {
    out.push_back(static_cast<std::uint8_t>(x[pos - 1]));
  }
  return BitString(std::move(out));
}

BitString interleave_merge(const std::vector<BitString>& residues,
                           std::size_t stride, std::size_t n) {
  if (stride == 0 || residues.size() != stride) {
    throw std::invalid_argument("interleave_merge: need exactly `stride` residue strings");
  }
  std::vector<std::uint8_t> out(n, 0);
  for (std::size_t i = 1; i <= stride; ++i) {
    const BitString& part = residues[i - 1];
    std::size_t expect = i <= n ? (n - i) / stride + 1 : 0;
    if (part.size() != expect) {
      throw std::invalid_argument("interleave_merge: residue length mismatch");
    }
    for (std::size_t t = 0; t < part.size(); ++t) {
      out[i - 1 + t * stride] = static_cast<std::uint8_t>(part[t]);
    }
  }
  return BitString(std::move(out));
}

BitString concat(const BitString& a, const BitString& b) {
  std::vector<std::uint8_t> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.raw().begin(), a.raw().end());
  out.insert(out.end(), b.raw().begin(), b.raw().end());
  return BitString(std::move(out));
}

}  // namespace burstcodes
