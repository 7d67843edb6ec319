#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace kemeny {

// Runtime-sized bitset over a fixed universe. Candidate universes are small
// (tens of candidates), so most operations touch one or two 64-bit words.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }
  void set(int i) { words_[i >> 6] |= bit(i); }
  void reset(int i) { words_[i >> 6] &= ~bit(i); }
  bool test(int i) const { return (words_[i >> 6] & bit(i)) != 0; }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  // First set bit, or -1 when empty.
  int find_first() const { return scan_from(0); }

  // First set bit strictly after i, or -1.
  int find_next(int i) const { return i + 1 >= nbits_ ? -1 : scan_from(i + 1); }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  // this &= ~o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  static std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }

  int scan_from(int i) const {
    std::size_t k = static_cast<std::size_t>(i) >> 6;
    if (k >= words_.size()) return -1;
    std::uint64_t w = words_[k] & ~(bit(i) - 1);
    while (true) {
      if (w) return static_cast<int>(k * 64 + std::countr_zero(w));
      if (++k == words_.size()) return -1;
      w = words_[k];
    }
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace kemeny
