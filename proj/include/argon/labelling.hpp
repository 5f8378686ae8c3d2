#pragma once

#include "argon/arg_set.hpp"
#include "argon/error.hpp"

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace argon {

/// Serialisation order is In < Out < Undec.
enum class Label : std::uint8_t { In = 0, Out = 1, Undec = 2 };

inline constexpr char label_char(Label l) { return l == Label::In ? 'I' : l == Label::Out ? 'O' : 'U'; }

/// A total assignment of labels to the arguments 0..n-1, stored as its
/// in-set and out-set; everything else is Undec.
class Labelling {
public:
  Labelling() = default;

  static Labelling all_undec(std::size_t n) { return Labelling(ArgSet(n), ArgSet(n)); }

  /// in and out must be disjoint subsets of the same universe.
  static Labelling from_sets(ArgSet in, ArgSet out) {
    if (in.universe_size() != out.universe_size() || in.intersects(out))
      throw std::invalid_argument("in-set and out-set must be disjoint over one universe");
    return Labelling(std::move(in), std::move(out));
  }

  static Labelling from_labels(const std::vector<Label>& labels) {
    Labelling l = all_undec(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
      l.set(i, labels[i]);
    return l;
  }

  std::size_t size() const noexcept { return in_.universe_size(); }

  Label label(std::size_t a) const noexcept {
    if (in_.contains(a))
      return Label::In;
    return out_.contains(a) ? Label::Out : Label::Undec;
  }
  Label operator[](std::size_t a) const noexcept { return label(a); }

  void set(std::size_t a, Label l) noexcept {
    in_.erase(a);
    out_.erase(a);
    if (l == Label::In)
      in_.insert(a);
    else if (l == Label::Out)
      out_.insert(a);
  }

  Labelling with(std::size_t a, Label l) const {
    Labelling c = *this;
    c.set(a, l);
    return c;
  }

  const ArgSet& in_set() const noexcept { return in_; }
  const ArgSet& out_set() const noexcept { return out_; }
  ArgSet undec_set() const { return (in_ | out_).complement(); }

  std::vector<Label> labels() const {
    std::vector<Label> out(size());
    for (std::size_t i = 0; i < size(); ++i)
      out[i] = label(i);
    return out;
  }

  friend bool operator==(const Labelling& a, const Labelling& b) noexcept {
    return a.in_ == b.in_ && a.out_ == b.out_;
  }

  /// Lexicographic over argument indices (index 0 most significant), with
  /// In < Out < Undec at each position.
  friend std::strong_ordering operator<=>(const Labelling& a, const Labelling& b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0)
      return c;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (auto c = a.label(i) <=> b.label(i); c != 0)
        return c;
    return std::strong_ordering::equal;
  }

private:
  Labelling(ArgSet in, ArgSet out) : in_(std::move(in)), out_(std::move(out)) {}

  ArgSet in_;
  ArgSet out_;
};

/// The in-set and out-set side by side in one set over 2n positions:
/// position i is "i is In", position n + i is "i is Out". The commitment
/// order is plain inclusion of these.
inline ArgSet commitment(const Labelling& l) {
  const std::size_t n = l.size();
  ArgSet c(2 * n);
  for (auto a : l.in_set())
    c.insert(a);
  for (auto a : l.out_set())
    c.insert(n + a);
  return c;
}

/// D on the in-half and the out-half of commitment().
inline ArgSet commitment_domain(const ArgSet& d) {
  const std::size_t n = d.universe_size();
  ArgSet c(2 * n);
  for (auto a : d) {
    c.insert(a);
    c.insert(n + a);
  }
  return c;
}

/// L1 ⊑ L2: in(L1) ⊆ in(L2) and out(L1) ⊆ out(L2).
inline bool leq_committed(const Labelling& l1, const Labelling& l2) {
  if (l1.size() != l2.size())
    throw std::invalid_argument("labellings belong to frameworks of different size");
  return l1.in_set().subset_of(l2.in_set()) && l1.out_set().subset_of(l2.out_set());
}

inline bool leq_committed(const Labelling& l1, const Labelling& l2, const ArgSet& domain) {
  if (l1.size() != l2.size())
    throw std::invalid_argument("labellings belong to frameworks of different size");
  return subset_within(l1.in_set(), l2.in_set(), domain) && subset_within(l1.out_set(), l2.out_set(), domain);
}

/// Labelling ranked by position in lexicographic order over 3^n.
inline Labelling labelling_from_rank(std::size_t n, std::uint64_t rank) {
  Labelling l = Labelling::all_undec(n);
  for (std::size_t i = n; i > 0; --i) {
    l.set(i - 1, static_cast<Label>(rank % 3));
    rank /= 3;
  }
  return l;
}

inline std::uint64_t labelling_count(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < n; ++i)
    c *= 3;
  return c;
}

} // namespace argon
