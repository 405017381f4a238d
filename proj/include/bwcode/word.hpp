#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bwcode/errors.hpp"

namespace bwcode {

inline constexpr int kMaxWordLength = 64;
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

enum class WeightMode { constant, bounded };

inline std::string to_string(WeightMode mode) {
  return mode == WeightMode::constant ? "constant" : "bounded";
}

inline WeightMode parse_weight_mode(std::string_view text) {
  if (text == "constant") return WeightMode::constant;
  if (text == "bounded") return WeightMode::bounded;
  throw UsageError("unknown weight mode '" + std::string(text) +
                   "' (expected 'constant' or 'bounded')");
}

// Binary word of known length, packed into a single machine word. The
// leftmost character of the text form is the most significant of the n used
// bits, so numeric order on the packed value equals lexicographic order on
// the text form.
class Word {
 public:
  Word(int length, std::uint64_t bits) : bits_(bits), length_(length) {
    if (length < 1 || length > kMaxWordLength) {
      throw UsageError("word length " + std::to_string(length) +
                       " out of range [1, " + std::to_string(kMaxWordLength) + "]");
    }
    if (length < kMaxWordLength && (bits >> length) != 0) {
      throw UsageError("packed value has bits beyond the stated length");
    }
  }

  static Word parse(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxWordLength)) {
      throw UsageError("word must have between 1 and " +
                       std::to_string(kMaxWordLength) + " characters, got " +
                       std::to_string(text.size()));
    }
    std::uint64_t bits = 0;
    for (char c : text) {
      bits <<= 1;
      if (c == '1') {
        bits |= 1;
      } else if (c != '0') {
        throw UsageError(std::string("invalid character '") + c + "' in word");
      }
    }
    return Word(static_cast<int>(text.size()), bits);
  }

  std::string render() const {
    std::string out(static_cast<std::size_t>(length_), '0');
    for (int pos = 0; pos < length_; ++pos) {
      if ((bits_ >> (length_ - 1 - pos)) & 1) out[static_cast<std::size_t>(pos)] = '1';
    }
    return out;
  }

  int length() const { return length_; }
  std::uint64_t packed() const { return bits_; }
  int weight() const { return std::popcount(bits_); }

  // pos 0 is the leftmost character.
  bool bit(int pos) const { return (bits_ >> (length_ - 1 - pos)) & 1; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_;
  int length_;
};

inline int weight(const Word& x) { return x.weight(); }

inline int hamming_distance(const Word& x, const Word& y) {
  if (x.length() != y.length()) {
    throw UsageError("hamming distance needs equal lengths, got " +
                     std::to_string(x.length()) + " and " + std::to_string(y.length()));
  }
  return std::popcount(x.packed() ^ y.packed());
}

// Search instance: length n, minimum distance d, weight budget w interpreted
// per mode. w = 0 is allowed and admits only the zero word.
struct CodeParams {
  int n = 0;
  int d = 0;
  int w = 0;
  WeightMode mode = WeightMode::bounded;

  void validate() const {
    if (n < 1 || n > kMaxWordLength) {
      throw UsageError("n=" + std::to_string(n) + " out of range [1, " +
                       std::to_string(kMaxWordLength) + "]");
    }
    if (w < 0 || w > n) {
      throw UsageError("w=" + std::to_string(w) + " out of range [0, n]");
    }
    if (d < 1) {
      throw UsageError("d=" + std::to_string(d) + " must be at least 1");
    }
  }

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(result);
}

inline std::uint64_t count_admissible_words(const CodeParams& params) {
  params.validate();
  if (params.mode == WeightMode::constant) return binomial(params.n, params.w);
  unsigned __int128 total = 0;
  for (int j = 0; j <= params.w; ++j) total += binomial(params.n, j);
  std::uint64_t max64 = ~std::uint64_t{0};
  return total > max64 ? max64 : static_cast<std::uint64_t>(total);
}

namespace detail {

// Appends every n-bit value of popcount j in increasing numeric order
// (Gosper's hack).
inline void append_weight_class(int n, int j, std::vector<Word>& out) {
  if (j == 0) {
    out.emplace_back(n, 0);
    return;
  }
  std::uint64_t v = (j == kMaxWordLength) ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << j) - 1;
  while (true) {
    out.emplace_back(n, v);
    std::uint64_t low = v & (~v + 1);
    std::uint64_t carry = v + low;
    if (carry == 0) break;  // class exhausted at the top of the 64-bit range
    std::uint64_t next = carry | (((v ^ carry) / low) >> 2);
    if (n < kMaxWordLength && (next >> n) != 0) break;
    v = next;
  }
}

}  // namespace detail

// All admissible words for the given parameters, in increasing order of the
// packed representation (equivalently, lexicographic order of the text form).
inline std::vector<Word> enumerate_words(const CodeParams& params,
                                         std::uint64_t cap = kDefaultEnumerationCap) {
  params.validate();
  std::uint64_t total = count_admissible_words(params);
  if (total > cap) {
    throw CapacityError("enumeration would produce " + std::to_string(total) +
                        " words, above the cap of " + std::to_string(cap));
  }
  std::vector<Word> out;
  out.reserve(total);
  if (params.mode == WeightMode::constant) {
    detail::append_weight_class(params.n, params.w, out);
  } else {
    for (int j = 0; j <= params.w; ++j) detail::append_weight_class(params.n, j, out);
    std::sort(out.begin(), out.end());
  }
  return out;
}

}  // namespace bwcode
