#include "burstcodes/channel.hpp"

#include <stdexcept>
#include <unordered_map>

namespace burstcodes {

BitString apply_burst(const BitString& x, const BurstSpec& burst) {
  if (burst.length == 0) throw std::invalid_argument("apply_burst: burst length must be positive");
  if (burst.prefix_len + burst.length > x.size()) {
    throw std::out_of_range("apply_burst: burst does not fit the string");
  }
  std::vector<std::uint8_t> out;
  out.reserve(x.size() - burst.length);
  for (std::size_t i = 0; i < burst.prefix_len; ++i) out.push_back(static_cast<std::uint8_t>(x[i]));
  for (std::size_t i = burst.prefix_len + burst.length; i < x.size(); ++i) {
    out.push_back(static_cast<std::uint8_t>(x[i]));
  }
  return BitString(std::move(out));
}

std::unordered_set<BitString> ball_exact(const BitString& x, std::size_t k) {
  if (k == 0 || k > x.size()) throw std::out_of_range("ball_exact: need 1 <= k <= |x|");
  std::unordered_set<BitString> out;
  for (std::size_t pre = 0; pre + k <= x.size(); ++pre) {
    out.insert(apply_burst(x, {pre, k}));
  }
  return out;
}

std::unordered_set<BitString> ball_upto(const BitString& x, std::size_t k) {
  if (k == 0 || k > x.size()) throw std::out_of_range("ball_upto: need 1 <= k <= |x|");
  std::unordered_set<BitString> out;
  for (std::size_t len = 1; len <= k; ++len) {
    auto part = ball_exact(x, len);
    out.insert(part.begin(), part.end());
  }
  return out;
}

std::vector<std::size_t> burst_prefixes(const BitString& x, const BitString& y) {
  if (x.size() <= y.size()) {
    throw std::invalid_argument("burst_prefixes: need |x| > |y|");
  }
  std::size_t m = y.size();
  std::size_t lcp = 0;
  while (lcp < m && x[lcp] == y[lcp]) ++lcp;
  std::size_t lcs = 0;
  while (lcs < m && x[x.size() - 1 - lcs] == y[m - 1 - lcs]) ++lcs;
  // Prefix l works iff l <= lcp and the trailing m - l symbols agree.
  std::size_t lo = m > lcs ? m - lcs : 0;
  std::vector<std::size_t> out;
  for (std::size_t l = lo; l <= lcp; ++l) out.push_back(l);
  return out;
}

bool is_burst_code(const std::vector<BitString>& codewords, std::size_t k) {
  if (codewords.empty()) return true;
  std::size_t n = codewords.front().size();
  for (const auto& c : codewords) {
    if (c.size() != n) throw std::invalid_argument("is_burst_code: codeword lengths differ");
  }
  if (k == 0 || k > n) throw std::out_of_range("is_burst_code: need 1 <= k <= n");
  // Every ball member remembers its first owner; a second owner is a clash.
  std::unordered_map<BitString, std::size_t> owner;
  for (std::size_t idx = 0; idx < codewords.size(); ++idx) {
    for (const auto& y : ball_upto(codewords[idx], k)) {
      auto [it, fresh] = owner.emplace(y, idx);
      if (!fresh && it->second != idx) return false;
    }
  }
  return true;
}

}  // namespace burstcodes
