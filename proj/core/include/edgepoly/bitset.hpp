#ifndef EDGEPOLY_BITSET_HPP
#define EDGEPOLY_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace edgepoly {

/// Fixed-universe bitset used for vertex sets and edge sets.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int universe) : words_((universe + 64) / 64, 0) {}

  void insert(int k) { words_[k >> 6] |= uint64_t{1} << (k & 63); }
  void erase(int k) { words_[k >> 6] &= ~(uint64_t{1} << (k & 63)); }
  bool contains(int k) const { return (words_[k >> 6] >> (k & 63)) & 1; }

  bool intersects(const DynBitset& o) const {
    size_t n = std::min(words_.size(), o.words_.size());
    for (size_t i = 0; i < n; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  int intersect_count(const DynBitset& o) const {
    size_t n = std::min(words_.size(), o.words_.size());
    int c = 0;
    for (size_t i = 0; i < n; ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  /// |this & other & ~excluded|
  int intersect_count_excluding(const DynBitset& o,
                                const DynBitset& excluded) const {
    size_t n = std::min(words_.size(), o.words_.size());
    int c = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t w = words_[i] & o.words_[i];
      if (i < excluded.words_.size()) w &= ~excluded.words_[i];
      c += std::popcount(w);
    }
    return c;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  friend bool operator==(const DynBitset&, const DynBitset&) = default;

 private:
  std::vector<uint64_t> words_;
};

}  // namespace edgepoly

#endif  // EDGEPOLY_BITSET_HPP
