#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace kmmtc {

/// Fixed-universe bit set over target indices.
class TargetSet {
 public:
  TargetSet() = default;
  explicit TargetSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return size_; }

  void set(std::size_t i) { words_[i / 64] |= word_bit(i); }
  void reset(std::size_t i) { words_[i / 64] &= ~word_bit(i); }
  bool test(std::size_t i) const { return (words_[i / 64] & word_bit(i)) != 0; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool is_subset_of(const TargetSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    }
    return true;
  }
  bool intersects(const TargetSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & other.words_[k]) != 0) return true;
    }
    return false;
  }

  TargetSet& operator|=(const TargetSet& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  TargetSet& operator&=(const TargetSet& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  friend TargetSet operator&(TargetSet a, const TargetSet& b) { return a &= b; }
  friend TargetSet operator|(TargetSet a, const TargetSet& b) { return a |= b; }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w != 0) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  /// Lowest index not in the set, or universe() when full.
  std::size_t first_unset() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] != ~std::uint64_t{0}) {
        const auto i = k * 64 + static_cast<std::size_t>(std::countr_one(words_[k]));
        return i < size_ ? i : size_;
      }
    }
    return size_;
  }

  static TargetSet full(std::size_t universe) {
    TargetSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.set(i);
    return s;
  }

  friend bool operator==(const TargetSet&, const TargetSet&) = default;

 private:
  static std::uint64_t word_bit(std::size_t i) { return std::uint64_t{1} << (i % 64); }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace kmmtc
