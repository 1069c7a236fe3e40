#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace coxplane {

/// Fixed-width bitset whose width is chosen at run time. Used for reflection
/// subsets and for clique search over almost positive roots.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return nbits_;
  }

  bool is_subset_of(const DynBitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  DynBitset minus(const DynBitset& o) const {
    DynBitset r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~o.words_[k];
    return r;
  }
  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
  friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

  bool operator==(const DynBitset&) const = default;
  auto operator<=>(const DynBitset& o) const { return words_ <=> o.words_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ULL;
    return h;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct DynBitsetHash {
  std::size_t operator()(const DynBitset& b) const { return b.hash(); }
};

}  // namespace coxplane
