#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace bergman {

/// Set of small nonnegative integers packed into 64-bit words. Used for
/// faces over a complex's vertex table; all sets taking part in one
/// operation must share the same universe size.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  static Bitset from_indices(std::size_t universe, const std::vector<int>& idx) {
    Bitset b(universe);
    for (int i : idx) b.set(i);
    return b;
  }

  void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= word_bit(i); }
  void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~word_bit(i); }
  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] & word_bit(i)) != 0;
  }

  int count() const {
    int n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
  }

  bool none() const {
    for (std::uint64_t w : words_) if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const Bitset& other) const {
    assert(words_.size() == other.words_.size());
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  bool intersects(const Bitset& other) const {
    assert(words_.size() == other.words_.size());
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  Bitset operator&(const Bitset& o) const { return apply(o, [](auto a, auto b) { return a & b; }); }
  Bitset operator|(const Bitset& o) const { return apply(o, [](auto a, auto b) { return a | b; }); }
  Bitset operator-(const Bitset& o) const { return apply(o, [](auto a, auto b) { return a & ~b; }); }

  bool operator==(const Bitset& o) const { return words_ == o.words_; }
  bool operator!=(const Bitset& o) const { return words_ != o.words_; }

  /// First set bit at index >= from, or -1.
  int next_set_bit(int from) const {
    std::size_t k = static_cast<std::size_t>(from) >> 6;
    if (k >= words_.size()) return -1;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) return static_cast<int>((k << 6) + std::countr_zero(w));
      if (++k == words_.size()) return -1;
      w = words_[k];
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int i = next_set_bit(0); i >= 0; i = next_set_bit(i + 1)) out.push_back(i);
    return out;
  }

  /// Lexicographic order on the increasing index sequences (a proper prefix
  /// sorts before its extensions). This is not the numeric word order.
  static bool lex_less(const Bitset& a, const Bitset& b) {
    assert(a.words_.size() == b.words_.size());
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      std::uint64_t d = a.words_[k] ^ b.words_[k];
      if (d == 0) continue;
      int bit = static_cast<int>((k << 6) + std::countr_zero(d));
      if (a.test(bit)) {
        // a's next element is `bit`; b either continues above it or ends.
        return b.next_set_bit(bit + 1) >= 0;
      }
      return a.next_set_bit(bit + 1) < 0;
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }

  std::size_t word_count() const { return words_.size(); }

 private:
  static std::uint64_t word_bit(int i) { return std::uint64_t{1} << (i & 63); }

  template <typename F>
  Bitset apply(const Bitset& o, F f) const {
    assert(words_.size() == o.words_.size());
    Bitset r;
    r.words_.resize(words_.size());
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = f(words_[k], o.words_[k]);
    return r;
  }

  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace bergman
