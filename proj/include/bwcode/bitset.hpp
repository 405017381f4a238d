#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bwcode {

// Fixed-size bitset whose width is chosen at construction. Backs the
// adjacency rows and the solver candidate sets, so the word-level operations
// here are the hot path of the whole project.
class DynamicBitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  DynamicBitset() = default;

  explicit DynamicBitset(std::size_t size, bool value = false)
      : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    if (value) trim_tail();
  }

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  const std::uint64_t* data() const { return words_.data(); }

  bool test(std::size_t pos) const {
    return (words_[pos >> 6] >> (pos & 63)) & 1;
  }

  void set(std::size_t pos) { words_[pos >> 6] |= std::uint64_t{1} << (pos & 63); }
  void reset(std::size_t pos) { words_[pos >> 6] &= ~(std::uint64_t{1} << (pos & 63)); }

  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim_tail();
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }

  bool none() const { return !any(); }

  std::size_t find_first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    }
    return npos;
  }

  std::size_t find_next(std::size_t prev) const {
    std::size_t pos = prev + 1;
    if (pos >= size_) return npos;
    std::size_t wi = pos >> 6;
    std::uint64_t w = words_[wi] >> (pos & 63);
    if (w) return pos + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi) {
      if (words_[wi]) return wi * 64 + std::countr_zero(words_[wi]);
    }
    return npos;
  }

  DynamicBitset& operator&=(const DynamicBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  DynamicBitset& operator|=(const DynamicBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  // Set difference: drop every bit that is set in other.
  DynamicBitset& operator-=(const DynamicBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend bool operator==(const DynamicBitset&, const DynamicBitset&) = default;

  std::size_t intersection_count(const DynamicBitset& other) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      total += std::popcount(words_[i] & other.words_[i]);
    }
    return total;
  }

  bool intersects(const DynamicBitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }

  bool is_subset_of(const DynamicBitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        fn(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t pos) { out.push_back(pos); });
    return out;
  }

  // out = a & b, all three the same width; returns popcount of the result.
  friend std::size_t intersect_into(const DynamicBitset& a, const DynamicBitset& b,
                                    DynamicBitset& out) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t w = a.words_[i] & b.words_[i];
      out.words_[i] = w;
      total += std::popcount(w);
    }
    return total;
  }

 private:
  void trim_tail() {
    std::size_t tail = size_ & 63;
    if (tail && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace bwcode
