#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace cliquecover {

// Fixed-size bitset sized at runtime. The exact solvers keep vertex sets and
// adjacency rows in this form so intersection is a handful of word ops.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  // Lowest set bit, or -1.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  int next(int after) const {
    int i = after + 1;
    if (i >= nbits_) return -1;
    std::size_t wi = static_cast<std::size_t>(i) >> 6;
    std::uint64_t w = words_[wi] >> (i & 63);
    if (w) return i + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi)
      if (words_[wi]) return static_cast<int>(wi * 64 + std::countr_zero(words_[wi]));
    return -1;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // a &= ~b
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  int intersect_count(const Bitset& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
    return out;
  }

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cliquecover
