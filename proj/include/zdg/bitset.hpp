#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zdg {

/// Fixed-size dynamic bitset used for vertex sets and adjacency rows.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t size, bool filled = false)
      : size_(size), words_((size + kBits - 1) / kBits, filled ? ~Word{0} : Word{0}) {
    if (filled) trim();
  }

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / kBits] >> (i % kBits)) & 1U; }
  void set(std::size_t i) { words_[i / kBits] |= Word{1} << (i % kBits); }
  void reset(std::size_t i) { words_[i / kBits] &= ~(Word{1} << (i % kBits)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest set index >= from, or size() when there is none.
  std::size_t find_next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t wi = from / kBits;
    Word w = words_[wi] & (~Word{0} << (from % kBits));
    while (true) {
      if (w) return wi * kBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(wi * kBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// this &= ~o
  VertexSet& subtract(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet complemented() const {
    VertexSet out(*this);
    for (Word& w : out.words_) w = ~w;
    out.trim();
    return out;
  }
  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool operator==(const VertexSet&) const = default;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

 private:
  void trim() {
    if (size_ % kBits != 0 && !words_.empty()) words_.back() &= (Word{1} << (size_ % kBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace zdg
