#pragma once

#include "argon/framework.hpp"
#include "argon/orders.hpp"
#include "argon/parallel.hpp"
#include "argon/semantics.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <cstdint>
#include <optional>
#include <vector>

namespace argon {

// ---------------------------------------------------------------------------
// Base predicates. Every predicate has a relativised form taking a Domain;
// the plain form uses the whole universe.

/// No member of S (inside the domain) attacks another, or itself.
inline bool is_conflict_free(const Framework& af, const ArgSet& s, const Domain& d) {
  const ArgSet inside = s & d.members;
  return !attacked_set(af, inside, d).intersects(inside);
}
inline bool is_conflict_free(const Framework& af, const ArgSet& s) {
  return is_conflict_free(af, s, Domain::whole(af));
}

inline bool is_admissible(const Framework& af, const ArgSet& s, const Domain& d) {
  if (!is_conflict_free(af, s, d))
    return false;
  const ArgSet hit = attacked_set(af, s, d);
  for (auto a : s & d.members)
    if (!(af.attackers_of(a) & d.members).subset_of(hit))
      return false;
  return true;
}
inline bool is_admissible(const Framework& af, const ArgSet& s) { return is_admissible(af, s, Domain::whole(af)); }

inline bool is_complete(const Framework& af, const ArgSet& s, const Domain& d) {
  return is_admissible(af, s, d) && subset_within(characteristic(af, s, d), s, d.members);
}
inline bool is_complete(const Framework& af, const ArgSet& s) { return is_complete(af, s, Domain::whole(af)); }

/// Conflict-free and its range covers the domain.
inline bool is_stable(const Framework& af, const ArgSet& s, const Domain& d) {
  return is_conflict_free(af, s, d) && d.members.subset_of(range_of(af, s, d));
}
inline bool is_stable(const Framework& af, const ArgSet& s) { return is_stable(af, s, Domain::whole(af)); }

/// Least fixpoint of the characteristic function.
inline ArgSet grounded_extension(const Framework& af) {
  return least_fixpoint(af.size(), [&](const ArgSet& s) { return characteristic(af, s); });
}

// ---------------------------------------------------------------------------

/// Decides every extension semantics on one framework and domain.
///
/// The families the order-based semantics quantify over (conflict-free,
/// admissible and complete sets) are materialised on first use by scanning
/// all subsets of the universe; the extensions of each order-based semantics
/// are then selected from them once and looked up by binary search. Not
/// thread-safe until prepare() has been called for the semantics in use.
class ExtensionSemantics {
public:
  explicit ExtensionSemantics(const Framework& af) : ExtensionSemantics(af, Domain::whole(af)) {}
  ExtensionSemantics(const Framework& af, Domain d) : af_(&af), d_(std::move(d)) {}

  const Framework& framework() const noexcept { return *af_; }
  const Domain& domain() const noexcept { return d_; }

  bool holds(SemanticsId sem, const ArgSet& s) const {
    switch (sem) {
    case SemanticsId::ConflictFree: return is_conflict_free(*af_, s, d_);
    case SemanticsId::Admissible: return is_admissible(*af_, s, d_);
    case SemanticsId::Complete: return is_complete(*af_, s, d_);
    case SemanticsId::Stable: return is_stable(*af_, s, d_);
    default: {
      const auto& m = members(sem);
      return std::binary_search(m.begin(), m.end(), s);
    }
    }
  }

  /// Every extension of `sem`, ascending.
  const std::vector<ArgSet>& members(SemanticsId sem) const {
    auto& slot = cache_[static_cast<std::size_t>(sem)];
    if (slot)
      return *slot;
    const ArgSet& dm = d_.members;
    auto range = [&](const ArgSet& x) { return range_of(*af_, x, d_); };
    std::vector<ArgSet> out;
    switch (sem) {
    case SemanticsId::ConflictFree: out = family(sem).members(); break;
    case SemanticsId::Admissible: out = family(sem).members(); break;
    case SemanticsId::Complete: out = family(sem).members(); break;
    case SemanticsId::Stable:
      out = select(family(SemanticsId::ConflictFree), [&](const auto&, const ArgSet& s) { return is_stable(*af_, s, d_); });
      break;
    case SemanticsId::Grounded:
      out = select(family(SemanticsId::Complete), [&](const auto& f, const ArgSet& s) { return is_minimal(f, s, Identity{}, dm); });
      break;
    case SemanticsId::Preferred:
      out = select(family(SemanticsId::Complete), [&](const auto& f, const ArgSet& s) { return is_maximal(f, s, Identity{}, dm); });
      break;
    case SemanticsId::SemiStable:
      out = select(family(SemanticsId::Complete), [&](const auto& f, const ArgSet& s) { return is_maximal(f, s, range, dm); });
      break;
    case SemanticsId::Stage:
      out = select(family(SemanticsId::ConflictFree), [&](const auto& f, const ArgSet& s) { return is_maximal(f, s, range, dm); });
      break;
    case SemanticsId::IdealSet: {
      const auto& prefs = members(SemanticsId::Preferred);
      out = select(family(SemanticsId::Admissible), [&](const auto&, const ArgSet& s) {
        return std::all_of(prefs.begin(), prefs.end(), [&](const ArgSet& e) { return subset_within(s, e, dm); });
      });
      break;
    }
    case SemanticsId::Ideal: {
      const ListFamily<ArgSet> ids(members(SemanticsId::IdealSet));
      out = select(ids, [&](const auto& f, const ArgSet& s) { return is_greatest(f, s, Identity{}, dm); });
      break;
    }
    }
    slot.emplace(std::move(out));
    return *slot;
  }

  /// Materialises whatever holds(sem, ·) will consult.
  void prepare(SemanticsId sem) const {
    if (sem != SemanticsId::ConflictFree && sem != SemanticsId::Admissible && sem != SemanticsId::Complete &&
        sem != SemanticsId::Stable)
      members(sem);
  }

  /// The conflict-free, admissible or complete family.
  const ListFamily<ArgSet>& family(SemanticsId base) const {
    auto& slot = families_[static_cast<std::size_t>(base)];
    if (slot)
      return *slot;
    std::vector<ArgSet> out;
    switch (base) {
    case SemanticsId::ConflictFree:
      out = PowersetFamily(af_->size(), [&](const ArgSet& s) { return is_conflict_free(*af_, s, d_); }).members();
      break;
    case SemanticsId::Admissible:
      out = select(family(SemanticsId::ConflictFree), [&](const auto&, const ArgSet& s) { return is_admissible(*af_, s, d_); });
      break;
    case SemanticsId::Complete:
      out = select(family(SemanticsId::Admissible), [&](const auto&, const ArgSet& s) { return is_complete(*af_, s, d_); });
      break;
    default: throw std::invalid_argument("family() takes CF, AD or CO");
    }
    slot.emplace(std::move(out));
    return *slot;
  }

private:
  const Framework* af_;
  Domain d_;
  mutable std::array<std::optional<ListFamily<ArgSet>>, 3> families_;
  mutable std::array<std::optional<std::vector<ArgSet>>, all_semantics.size()> cache_;
};

inline bool is_extension(const Framework& af, SemanticsId sem, const ArgSet& s) {
  return ExtensionSemantics(af).holds(sem, s);
}
inline bool is_extension(const Framework& af, SemanticsId sem, const ArgSet& s, const Domain& d) {
  return ExtensionSemantics(af, d).holds(sem, s);
}

/// The order-based semantics: GR, PR, SST, STG, IDS, ID.
inline bool is_order_extension(const Framework& af, SemanticsId sem, const ArgSet& s) {
  return is_extension(af, sem, s);
}

// ---------------------------------------------------------------------------
// Enumeration

enum class Strategy {
  Naive,  ///< test every subset against the definition; the reference path
  Pruned, ///< generate conflict-free candidates only, then filter
};

struct EnumerationOptions {
  Strategy strategy = Strategy::Naive;
  std::size_t threads = 0; ///< 0: ARGON_THREADS or hardware concurrency
};

namespace detail {

inline std::vector<ArgSet> naive_extensions(const Framework& af, SemanticsId sem, std::size_t threads) {
  const std::size_t n = af.size();
  if (n > max_powerset_universe)
    throw BudgetError("naive enumeration over more than 30 arguments");
  ExtensionSemantics ev(af);
  ev.prepare(sem);
  const std::size_t workers = n >= 16 ? worker_count(threads) : 1;
  return parallel_collect(
      0, std::uint64_t{1} << n, workers, [&](std::uint64_t m) { return ev.holds(sem, ArgSet::from_mask(n, m)); },
      [&](std::uint64_t m) { return ArgSet::from_mask(n, m); });
}

/// All conflict-free sets, by include/exclude recursion that never adds an
/// argument conflicting with the current set.
inline std::vector<ArgSet> conflict_free_sets(const Framework& af) {
  std::vector<ArgSet> out;
  ArgSet current = af.empty_set();
  ArgSet blocked = af.empty_set(); // attacks or is attacked by a member
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == af.size()) {
      out.push_back(current);
      return;
    }
    self(self, i + 1);
    if (!af.attacks(i, i) && !blocked.contains(i)) {
      const ArgSet saved = blocked;
      current.insert(i);
      blocked |= af.targets_of(i);
      blocked |= af.attackers_of(i);
      self(self, i + 1);
      current.erase(i);
      blocked = saved;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ArgSet> pruned_extensions(const Framework& af, SemanticsId sem) {
  if (sem == SemanticsId::Grounded)
    return {grounded_extension(af)};

  const ListFamily<ArgSet> cf(conflict_free_sets(af));
  auto keep = [](const ListFamily<ArgSet>& from, auto&& pred) {
    std::vector<ArgSet> out;
    for (const auto& s : from.members())
      if (pred(s))
        out.push_back(s);
    return ListFamily<ArgSet>(std::move(out));
  };
  auto range = [&](const ArgSet& s) { return range_of(af, s); };

  switch (sem) {
  case SemanticsId::ConflictFree: return cf.members();
  case SemanticsId::Stable:
    return keep(cf, [&](const ArgSet& s) { return range_of(af, s) == af.universe(); }).members();
  case SemanticsId::Stage: return keep(cf, [&](const ArgSet& s) { return is_maximal(cf, s, range); }).members();
  default: break;
  }

  const auto ad = keep(cf, [&](const ArgSet& s) { return s.subset_of(characteristic(af, s)); });
  if (sem == SemanticsId::Admissible)
    return ad.members();
  const auto co = keep(ad, [&](const ArgSet& s) { return characteristic(af, s) == s; });
  switch (sem) {
  case SemanticsId::Complete: return co.members();
  case SemanticsId::SemiStable: return keep(co, [&](const ArgSet& s) { return is_maximal(co, s, range); }).members();
  default: break;
  }
  const auto pr = keep(co, [&](const ArgSet& s) { return is_maximal(co, s); });
  if (sem == SemanticsId::Preferred)
    return pr.members();

  ArgSet common = af.universe();
  for (const auto& e : pr.members())
    common &= e;
  const auto ids = keep(ad, [&](const ArgSet& s) { return s.subset_of(common); });
  if (sem == SemanticsId::IdealSet)
    return ids.members();
  return keep(ids, [&](const ArgSet& s) { return is_greatest(ids, s); }).members();
}

} // namespace detail

/// Every extension of `sem`, ascending by bit pattern, without duplicates.
inline std::vector<ArgSet> enumerate_extensions(const Framework& af, SemanticsId sem,
                                                EnumerationOptions opts = {}) {
  if (opts.strategy == Strategy::Pruned)
    return detail::pruned_extensions(af, sem);
  return detail::naive_extensions(af, sem, opts.threads);
}

/// `a` belongs to at least one extension.
inline bool credulous(const Framework& af, SemanticsId sem, std::size_t a, EnumerationOptions opts = {}) {
  if (sem == SemanticsId::Grounded)
    return grounded_extension(af).contains(a);
  const auto exts = enumerate_extensions(af, sem, opts);
  return std::any_of(exts.begin(), exts.end(), [&](const ArgSet& e) { return e.contains(a); });
}

/// `a` belongs to every extension; vacuously true when there are none.
inline bool skeptical(const Framework& af, SemanticsId sem, std::size_t a, EnumerationOptions opts = {}) {
  if (sem == SemanticsId::Grounded)
    return grounded_extension(af).contains(a);
  const auto exts = enumerate_extensions(af, sem, opts);
  return std::all_of(exts.begin(), exts.end(), [&](const ArgSet& e) { return e.contains(a); });
}

} // namespace argon
