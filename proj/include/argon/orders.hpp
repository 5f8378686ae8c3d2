#pragma once

// Minimal/maximal/least/greatest objects of a family under a set-valued
// projection, monotonicity, fixpoints on the powerset lattice, and the finite
// directed-completeness check.

#include "argon/arg_set.hpp"
#include "argon/error.hpp"

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace argon {

/// Largest universe whose full powerset we are willing to scan.
inline constexpr std::size_t max_powerset_universe = 30;

struct Identity {
  template <class T>
  const T& operator()(const T& x) const noexcept {
    return x;
  }
};

/// A family is anything that can test membership and visit its members.
/// The visitor returns false to stop early.
template <class F, class Obj>
concept ObjectFamily = requires(const F& f, const Obj& o, bool (*visit)(const Obj&)) {
  { f.contains(o) } -> std::convertible_to<bool>;
  f.for_each(visit);
};

/// All subsets of 0..n-1 satisfying a pure predicate. Members are visited in
/// ascending bit-pattern order.
template <class Pred>
class PowersetFamily {
public:
  PowersetFamily(std::size_t universe_size, Pred pred) : n_(universe_size), pred_(std::move(pred)) {
    if (n_ > max_powerset_universe)
      throw BudgetError("powerset family over more than 30 arguments");
  }

  std::size_t universe_size() const noexcept { return n_; }
  bool contains(const ArgSet& s) const { return pred_(s); }

  template <class Visit>
  void for_each(Visit&& visit) const {
    const std::uint64_t end = std::uint64_t{1} << n_;
    for (std::uint64_t m = 0; m < end; ++m) {
      ArgSet s = ArgSet::from_mask(n_, m);
      if (pred_(s) && !visit(std::as_const(s)))
        return;
    }
  }

  std::vector<ArgSet> members() const {
    std::vector<ArgSet> out;
    for_each([&](const ArgSet& s) {
      out.push_back(s);
      return true;
    });
    return out;
  }

private:
  std::size_t n_;
  Pred pred_;
};

/// An explicitly materialised family. Membership is a linear scan, which is
/// what the (small) families in this library call for.
template <class T>
class ListFamily {
public:
  ListFamily() = default;
  explicit ListFamily(std::vector<T> members) : members_(std::move(members)) {}

  bool contains(const T& x) const { return std::find(members_.begin(), members_.end(), x) != members_.end(); }

  template <class Visit>
  void for_each(Visit&& visit) const {
    for (const auto& m : members_)
      if (!visit(m))
        return;
  }

  const std::vector<T>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

private:
  std::vector<T> members_;
};

namespace detail {

inline bool sub(const ArgSet& a, const ArgSet& b, const ArgSet* domain) {
  return domain ? subset_within(a, b, *domain) : a.subset_of(b);
}
inline bool eq(const ArgSet& a, const ArgSet& b, const ArgSet* domain) {
  return domain ? equal_within(a, b, *domain) : a == b;
}

template <class Family, class Obj, class Proj>
bool minimal(const Family& fam, const Obj& x, Proj&& proj, const ArgSet* d) {
  if (!fam.contains(x))
    return false;
  const ArgSet px = proj(x);
  bool ok = true;
  fam.for_each([&](const Obj& o) {
    const ArgSet po = proj(o);
    if (sub(po, px, d) && !eq(po, px, d))
      ok = false;
    return ok;
  });
  return ok;
}

template <class Family, class Obj, class Proj>
bool maximal(const Family& fam, const Obj& x, Proj&& proj, const ArgSet* d) {
  if (!fam.contains(x))
    return false;
  const ArgSet px = proj(x);
  bool ok = true;
  fam.for_each([&](const Obj& o) {
    const ArgSet po = proj(o);
    if (sub(px, po, d) && !eq(po, px, d))
      ok = false;
    return ok;
  });
  return ok;
}

template <class Family, class Obj, class Proj>
bool least(const Family& fam, const Obj& x, Proj&& proj, const ArgSet* d) {
  if (!fam.contains(x))
    return false;
  const ArgSet px = proj(x);
  bool ok = true;
  fam.for_each([&](const Obj& o) {
    ok = sub(px, proj(o), d);
    return ok;
  });
  return ok;
}

template <class Family, class Obj, class Proj>
bool greatest(const Family& fam, const Obj& x, Proj&& proj, const ArgSet* d) {
  if (!fam.contains(x))
    return false;
  const ArgSet px = proj(x);
  bool ok = true;
  fam.for_each([&](const Obj& o) {
    ok = sub(proj(o), px, d);
    return ok;
  });
  return ok;
}

} // namespace detail

/// x is in the family and no member has a strictly smaller projection.
template <class Family, class Obj, class Proj = Identity>
bool is_minimal(const Family& fam, const Obj& x, Proj proj = {}) {
  return detail::minimal(fam, x, proj, nullptr);
}
template <class Family, class Obj, class Proj>
bool is_minimal(const Family& fam, const Obj& x, Proj proj, const ArgSet& domain) {
  return detail::minimal(fam, x, proj, &domain);
}

template <class Family, class Obj, class Proj = Identity>
bool is_maximal(const Family& fam, const Obj& x, Proj proj = {}) {
  return detail::maximal(fam, x, proj, nullptr);
}
template <class Family, class Obj, class Proj>
bool is_maximal(const Family& fam, const Obj& x, Proj proj, const ArgSet& domain) {
  return detail::maximal(fam, x, proj, &domain);
}

/// x is in the family and its projection is included in every member's.
template <class Family, class Obj, class Proj = Identity>
bool is_least(const Family& fam, const Obj& x, Proj proj = {}) {
  return detail::least(fam, x, proj, nullptr);
}
template <class Family, class Obj, class Proj>
bool is_least(const Family& fam, const Obj& x, Proj proj, const ArgSet& domain) {
  return detail::least(fam, x, proj, &domain);
}

template <class Family, class Obj, class Proj = Identity>
bool is_greatest(const Family& fam, const Obj& x, Proj proj = {}) {
  return detail::greatest(fam, x, proj, nullptr);
}
template <class Family, class Obj, class Proj>
bool is_greatest(const Family& fam, const Obj& x, Proj proj, const ArgSet& domain) {
  return detail::greatest(fam, x, proj, &domain);
}

/// Keeps the members of `family` selected by `pred(family, member)`, in order.
template <class T, class Pred>
std::vector<T> select(const ListFamily<T>& family, Pred&& pred) {
  std::vector<T> out;
  for (const auto& m : family.members())
    if (pred(family, m))
      out.push_back(m);
  return out;
}

// ---------------------------------------------------------------------------
// Transformers on the powerset lattice of 0..n-1.

inline constexpr std::size_t max_exhaustive_monotone_universe = 12;

struct Monotonicity {
  enum class Method { Exhaustive, Sampled };

  bool holds;
  Method method;

  explicit operator bool() const noexcept { return holds; }
  bool exhaustive() const noexcept { return method == Method::Exhaustive; }
};

struct SamplingOptions {
  std::size_t samples = 4096;
  std::uint64_t seed = 0x5eed;
};

/// Checks A ⊆ B ⟹ f(A) ⊆ f(B). Up to 12 arguments every covering pair
/// (B = A ∪ {x}) is checked, which decides monotonicity exactly; above that
/// random pairs are sampled and the verdict says so.
template <class F>
Monotonicity is_monotone(std::size_t n, F&& f, SamplingOptions sampling = {}) {
  if (n <= max_exhaustive_monotone_universe) {
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < end; ++m) {
      const ArgSet a = ArgSet::from_mask(n, m);
      const ArgSet fa = f(a);
      for (std::size_t x = 0; x < n; ++x) {
        if (a.contains(x))
          continue;
        if (!fa.subset_of(f(a.with(x))))
          return {false, Monotonicity::Method::Exhaustive};
      }
    }
    return {true, Monotonicity::Method::Exhaustive};
  }
  std::mt19937_64 rng(sampling.seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < sampling.samples; ++i) {
    ArgSet a(n), b(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (coin(rng))
        a.insert(x);
      if (coin(rng))
        b.insert(x);
    }
    b |= a;
    if (!f(a).subset_of(f(b)))
      return {false, Monotonicity::Method::Sampled};
  }
  return {true, Monotonicity::Method::Sampled};
}

template <class F>
bool is_fixpoint(F&& f, const ArgSet& s) {
  return f(s) == s;
}
template <class F>
bool is_fixpoint(F&& f, const ArgSet& s, const ArgSet& domain) {
  return equal_within(f(s), s, domain);
}

/// Kleene iteration from the empty set. Monotone f on a universe of n
/// elements stabilises within n + 1 steps; anything else is reported.
template <class F>
ArgSet least_fixpoint(std::size_t n, F&& f) {
  ArgSet s(n);
  for (std::size_t step = 0; step <= n + 1; ++step) {
    ArgSet next = f(s);
    if (next == s)
      return s;
    if (!s.subset_of(next))
      throw NotMonotoneError("ascending iteration lost elements: transformer is not monotone");
    s = std::move(next);
  }
  throw NotMonotoneError("iteration did not stabilise: transformer is not monotone");
}

/// Iteration downward from the full universe.
template <class F>
ArgSet greatest_fixpoint(std::size_t n, F&& f) {
  ArgSet s = ArgSet::full(n);
  for (std::size_t step = 0; step <= n + 1; ++step) {
    ArgSet next = f(s);
    if (next == s)
      return s;
    if (!next.subset_of(s))
      throw NotMonotoneError("descending iteration gained elements: transformer is not monotone");
    s = std::move(next);
  }
  throw NotMonotoneError("iteration did not stabilise: transformer is not monotone");
}

// ---------------------------------------------------------------------------
// Directed completeness.

inline constexpr std::size_t max_exhaustive_directed_universe = 4;

/// Every directed subfamily has its union in the family. A subfamily is
/// directed when every pair of its members has an upper bound inside it; the
/// empty subfamily is vacuously directed, so the empty set must be a member.
///
/// For universes of at most 4 arguments all subfamilies are enumerated. For
/// larger ones the check uses the finite collapse: a non-empty finite
/// directed subfamily contains its own maximum, which is its union, so only
/// the empty subfamily can fail.
inline bool is_directed_complete(std::size_t n, const std::vector<ArgSet>& family) {
  auto member = [&](const ArgSet& s) { return std::find(family.begin(), family.end(), s) != family.end(); };
  if (n > max_exhaustive_directed_universe)
    return member(ArgSet(n));

  const std::size_t k = family.size();
  if (k > 16)
    throw BudgetError("directed-completeness check expects distinct members of a small powerset");
  std::vector<std::uint32_t> above(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (family[i].subset_of(family[j]))
        above[i] |= std::uint32_t{1} << j;

  const std::uint64_t end = std::uint64_t{1} << k;
  for (std::uint64_t sub = 0; sub < end; ++sub) {
    const auto x = static_cast<std::uint32_t>(sub);
    bool directed = true;
    for (std::uint32_t ri = x; ri != 0 && directed; ri &= ri - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(ri));
      for (std::uint32_t rj = x; rj != 0; rj &= rj - 1) {
        const auto j = static_cast<std::size_t>(std::countr_zero(rj));
        if ((above[i] & above[j] & x) == 0) {
          directed = false;
          break;
        }
      }
    }
    if (!directed)
      continue;
    ArgSet unite(n);
    for (std::uint32_t r = x; r != 0; r &= r - 1)
      unite |= family[static_cast<std::size_t>(std::countr_zero(r))];
    if (!member(unite))
      return false;
  }
  return true;
}

template <class Pred>
bool is_directed_complete(const PowersetFamily<Pred>& family) {
  return is_directed_complete(family.universe_size(), family.members());
}

} // namespace argon
