#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace argon {

/// A subset of the arguments 0..n-1 of a framework.
///
/// The first 64 bits live inline, so frameworks with at most 64 arguments
/// never allocate. Larger universes spill the remaining words into a vector.
/// Binary operations require both operands to share the same universe size.
class ArgSet {
public:
  static constexpr std::size_t word_bits = 64;

  ArgSet() = default;
  ArgSet(const ArgSet& o) : n_(o.n_), lo_(o.lo_) {
    if (!o.hi_.empty())
      hi_ = o.hi_;
  }
  ArgSet(ArgSet&&) noexcept = default;
  ArgSet& operator=(const ArgSet& o) {
    n_ = o.n_;
    lo_ = o.lo_;
    if (!o.hi_.empty() || !hi_.empty())
      hi_ = o.hi_;
    return *this;
  }
  ArgSet& operator=(ArgSet&&) noexcept = default;

  explicit ArgSet(std::size_t universe_size) : n_(universe_size) {
    if (n_ > word_bits)
      hi_.assign((n_ - 1) / word_bits, 0);
  }

  static ArgSet full(std::size_t universe_size) {
    ArgSet s(universe_size);
    for (std::size_t w = 0; w < s.word_count(); ++w)
      s.word_ref(w) = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  /// Set whose bit i is bit i of `mask`; requires universe_size <= 64.
  static ArgSet from_mask(std::size_t universe_size, std::uint64_t mask) {
    assert(universe_size <= word_bits);
    ArgSet s(universe_size);
    s.lo_ = mask;
    s.trim();
    return s;
  }

  static ArgSet of(std::size_t universe_size, std::initializer_list<std::size_t> members) {
    ArgSet s(universe_size);
    for (auto i : members)
      s.insert(i);
    return s;
  }

  std::size_t universe_size() const noexcept { return n_; }
  std::size_t word_count() const noexcept { return n_ == 0 ? 1 : (n_ + word_bits - 1) / word_bits; }

  std::uint64_t word(std::size_t w) const noexcept { return w == 0 ? lo_ : hi_[w - 1]; }

  /// Low 64 bits; the whole set when universe_size() <= 64.
  std::uint64_t mask() const noexcept { return lo_; }

  bool contains(std::size_t i) const noexcept {
    assert(i < n_);
    return (word(i / word_bits) >> (i % word_bits)) & 1U;
  }
  void insert(std::size_t i) noexcept {
    assert(i < n_);
    word_ref(i / word_bits) |= std::uint64_t{1} << (i % word_bits);
  }
  void erase(std::size_t i) noexcept {
    assert(i < n_);
    word_ref(i / word_bits) &= ~(std::uint64_t{1} << (i % word_bits));
  }

  ArgSet with(std::size_t i) const {
    ArgSet s = *this;
    s.insert(i);
    return s;
  }

  std::size_t count() const noexcept {
    std::size_t c = static_cast<std::size_t>(std::popcount(lo_));
    for (auto w : hi_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    if (lo_ != 0)
      return false;
    return std::all_of(hi_.begin(), hi_.end(), [](std::uint64_t w) { return w == 0; });
  }

  bool subset_of(const ArgSet& other) const noexcept {
    assert(n_ == other.n_);
    if ((lo_ & ~other.lo_) != 0)
      return false;
    for (std::size_t w = 0; w < hi_.size(); ++w)
      if ((hi_[w] & ~other.hi_[w]) != 0)
        return false;
    return true;
  }

  bool intersects(const ArgSet& other) const noexcept {
    assert(n_ == other.n_);
    if ((lo_ & other.lo_) != 0)
      return true;
    for (std::size_t w = 0; w < hi_.size(); ++w)
      if ((hi_[w] & other.hi_[w]) != 0)
        return true;
    return false;
  }

  /// Complement relative to the universe 0..n-1.
  ArgSet complement() const {
    ArgSet s = *this;
    s.lo_ = ~s.lo_;
    for (auto& w : s.hi_)
      w = ~w;
    s.trim();
    return s;
  }

  ArgSet& operator|=(const ArgSet& o) noexcept {
    assert(n_ == o.n_);
    lo_ |= o.lo_;
    for (std::size_t w = 0; w < hi_.size(); ++w)
      hi_[w] |= o.hi_[w];
    return *this;
  }
  ArgSet& operator&=(const ArgSet& o) noexcept {
    assert(n_ == o.n_);
    lo_ &= o.lo_;
    for (std::size_t w = 0; w < hi_.size(); ++w)
      hi_[w] &= o.hi_[w];
    return *this;
  }
  ArgSet& operator-=(const ArgSet& o) noexcept {
    assert(n_ == o.n_);
    lo_ &= ~o.lo_;
    for (std::size_t w = 0; w < hi_.size(); ++w)
      hi_[w] &= ~o.hi_[w];
    return *this;
  }

  friend ArgSet operator|(ArgSet a, const ArgSet& b) { return a |= b; }
  friend ArgSet operator&(ArgSet a, const ArgSet& b) { return a &= b; }
  friend ArgSet operator-(ArgSet a, const ArgSet& b) { return a -= b; }

  friend bool operator==(const ArgSet& a, const ArgSet& b) noexcept {
    return a.n_ == b.n_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  /// Orders by universe size, then by the bit pattern read as an unsigned
  /// integer with argument 0 as the least significant bit.
  friend std::strong_ordering operator<=>(const ArgSet& a, const ArgSet& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0)
      return c;
    for (std::size_t w = a.hi_.size(); w > 0; --w)
      if (auto c = a.hi_[w - 1] <=> b.hi_[w - 1]; c != 0)
        return c;
    return a.lo_ <=> b.lo_;
  }

  /// Smallest member >= from, or universe_size() if none.
  std::size_t next(std::size_t from) const noexcept {
    while (from < n_) {
      std::size_t w = from / word_bits;
      std::uint64_t bits = word(w) >> (from % word_bits);
      if (bits != 0)
        return from + static_cast<std::size_t>(std::countr_zero(bits));
      from = (w + 1) * word_bits;
    }
    return n_;
  }

  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    iterator() = default;
    iterator(const ArgSet* s, std::size_t pos) : s_(s), pos_(pos) {}
    std::size_t operator*() const noexcept { return pos_; }
    iterator& operator++() noexcept {
      pos_ = s_->next(pos_ + 1);
      return *this;
    }
    iterator operator++(int) noexcept {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.pos_ == b.pos_; }

  private:
    const ArgSet* s_ = nullptr;
    std::size_t pos_ = 0;
  };

  iterator begin() const noexcept { return {this, next(0)}; }
  iterator end() const noexcept { return {this, n_}; }

private:
  std::uint64_t& word_ref(std::size_t w) noexcept { return w == 0 ? lo_ : hi_[w - 1]; }

  void trim() noexcept {
    std::size_t rem = n_ % word_bits;
    if (n_ == 0) {
      lo_ = 0;
      return;
    }
    if (rem != 0)
      word_ref(word_count() - 1) &= (std::uint64_t{1} << rem) - 1;
  }

  std::size_t n_ = 0;
  std::uint64_t lo_ = 0;
  std::vector<std::uint64_t> hi_;
};

/// Intersect-then-compare inclusion: A ⊆ B within domain D.
inline bool subset_within(const ArgSet& a, const ArgSet& b, const ArgSet& domain) {
  assert(a.universe_size() == b.universe_size() && a.universe_size() == domain.universe_size());
  for (std::size_t w = 0; w < a.word_count(); ++w)
    if ((a.word(w) & domain.word(w) & ~b.word(w)) != 0)
      return false;
  return true;
}

inline bool equal_within(const ArgSet& a, const ArgSet& b, const ArgSet& domain) {
  assert(a.universe_size() == b.universe_size() && a.universe_size() == domain.universe_size());
  for (std::size_t w = 0; w < a.word_count(); ++w)
    if (((a.word(w) ^ b.word(w)) & domain.word(w)) != 0)
      return false;
  return true;
}

} // namespace argon
