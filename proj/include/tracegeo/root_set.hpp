#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace tracegeo {

// Fixed-universe bitset over root indices.
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return n_; }

  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept { return count() == 0; }

  bool is_subset_of(const RootSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  RootSet operator&(const RootSet& o) const {
    RootSet r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  RootSet operator|(const RootSet& o) const {
    RootSet r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] |= o.words_[k];
    return r;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> m;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        m.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return m;
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  // Any member strictly greater than i.
  bool has_member_above(std::size_t i) const {
    std::size_t k = i / 64;
    const unsigned bit = static_cast<unsigned>(i % 64);
    if (bit < 63 && (words_[k] >> (bit + 1)) != 0) return true;
    for (++k; k < words_.size(); ++k)
      if (words_[k]) return true;
    return false;
  }

  // Lexicographic order on the sorted member lists.
  friend bool lex_less(const RootSet& a, const RootSet& b) {
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      const std::uint64_t x = a.words_[k] ^ b.words_[k];
      if (!x) continue;
      const std::size_t i = k * 64 + static_cast<std::size_t>(std::countr_zero(x));
      return a.contains(i) ? b.has_member_above(i) : !a.has_member_above(i);
    }
    return false;
  }

  friend bool operator==(const RootSet&, const RootSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct RootSetHash {
  std::size_t operator()(const RootSet& s) const noexcept { return s.hash(); }
};

}  // namespace tracegeo
