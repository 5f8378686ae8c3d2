#pragma once

#include "argon/extensions.hpp"
#include "argon/framework.hpp"
#include "argon/labelling.hpp"
#include "argon/orders.hpp"
#include "argon/parallel.hpp"
#include "argon/semantics.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace argon {

/// Largest framework whose 3^n labellings we are willing to scan.
inline constexpr std::size_t max_labelling_universe = 20;

// ---------------------------------------------------------------------------
// Legal labels. Attackers are only considered inside the domain.

/// Every attacker of `a` is Out.
inline bool legally_in(const Framework& af, const Labelling& l, std::size_t a, const Domain& d) {
  return (af.attackers_of(a) & d.members).subset_of(l.out_set());
}
inline bool legally_in(const Framework& af, const Labelling& l, std::size_t a) {
  return legally_in(af, l, a, Domain::whole(af));
}

/// Some attacker of `a` is In.
inline bool legally_out(const Framework& af, const Labelling& l, std::size_t a, const Domain& d) {
  return (af.attackers_of(a) & d.members).intersects(l.in_set());
}
inline bool legally_out(const Framework& af, const Labelling& l, std::size_t a) {
  return legally_out(af, l, a, Domain::whole(af));
}

inline bool legally_undec(const Framework& af, const Labelling& l, std::size_t a, const Domain& d) {
  return !legally_in(af, l, a, d) && !legally_out(af, l, a, d);
}
inline bool legally_undec(const Framework& af, const Labelling& l, std::size_t a) {
  return legally_undec(af, l, a, Domain::whole(af));
}

/// All legally-in arguments.
inline ArgSet legally_in_set(const Framework& af, const Labelling& l, const Domain& d) {
  ArgSet out = af.empty_set();
  for (std::size_t a = 0; a < af.size(); ++a)
    if (legally_in(af, l, a, d))
      out.insert(a);
  return out;
}

/// All legally-out arguments: those attacked by an In argument.
inline ArgSet legally_out_set(const Framework& af, const Labelling& l, const Domain& d) {
  return attacked_set(af, l.in_set(), d);
}

// ---------------------------------------------------------------------------
// Base labelling semantics.

/// In arguments are not legally out; Out arguments are legally out.
inline bool is_conflict_free_lab(const Framework& af, const Labelling& l, const Domain& d) {
  const ArgSet lo = legally_out_set(af, l, d);
  return !(l.in_set() & d.members).intersects(lo) && subset_within(l.out_set(), lo, d.members);
}
inline bool is_conflict_free_lab(const Framework& af, const Labelling& l) {
  return is_conflict_free_lab(af, l, Domain::whole(af));
}

/// In arguments are legally in; Out arguments are legally out.
inline bool is_admissible_lab(const Framework& af, const Labelling& l, const Domain& d) {
  if (!subset_within(l.out_set(), legally_out_set(af, l, d), d.members))
    return false;
  for (auto a : l.in_set() & d.members)
    if (!legally_in(af, l, a, d))
      return false;
  return true;
}
inline bool is_admissible_lab(const Framework& af, const Labelling& l) {
  return is_admissible_lab(af, l, Domain::whole(af));
}

/// Admissible, and Undec arguments are legally undec.
inline bool is_complete_lab(const Framework& af, const Labelling& l, const Domain& d) {
  if (!is_admissible_lab(af, l, d))
    return false;
  for (auto a : l.undec_set() & d.members)
    if (!legally_undec(af, l, a, d))
      return false;
  return true;
}
inline bool is_complete_lab(const Framework& af, const Labelling& l) {
  return is_complete_lab(af, l, Domain::whole(af));
}

struct InSet {
  const ArgSet& operator()(const Labelling& l) const noexcept { return l.in_set(); }
};
struct OutSet {
  const ArgSet& operator()(const Labelling& l) const noexcept { return l.out_set(); }
};
struct UndecSet {
  ArgSet operator()(const Labelling& l) const { return l.undec_set(); }
};
struct Commitment {
  ArgSet operator()(const Labelling& l) const { return commitment(l); }
};

// ---------------------------------------------------------------------------

/// Decides every labelling semantics on one framework and domain, the
/// labelling counterpart of ExtensionSemantics. The conflict-free family is
/// found by scanning all 3^n labellings.
class LabellingSemantics {
public:
  explicit LabellingSemantics(const Framework& af) : LabellingSemantics(af, Domain::whole(af)) {}
  LabellingSemantics(const Framework& af, Domain d) : af_(&af), d_(std::move(d)) {
    if (af.size() > max_labelling_universe)
      throw BudgetError("labelling semantics over more than 20 arguments");
  }

  const Framework& framework() const noexcept { return *af_; }
  const Domain& domain() const noexcept { return d_; }

  bool holds(SemanticsId sem, const Labelling& l) const {
    switch (sem) {
    case SemanticsId::ConflictFree: return is_conflict_free_lab(*af_, l, d_);
    case SemanticsId::Admissible: return is_admissible_lab(*af_, l, d_);
    case SemanticsId::Complete: return is_complete_lab(*af_, l, d_);
    case SemanticsId::Stable: return is_complete_lab(*af_, l, d_) && !l.undec_set().intersects(d_.members);
    default: {
      const auto& m = members(sem);
      return std::binary_search(m.begin(), m.end(), l);
    }
    }
  }

  /// Every labelling of `sem`, in lexicographic order.
  const std::vector<Labelling>& members(SemanticsId sem) const {
    auto& slot = cache_[static_cast<std::size_t>(sem)];
    if (slot)
      return *slot;
    const ArgSet& dm = d_.members;
    std::vector<Labelling> out;
    switch (sem) {
    case SemanticsId::ConflictFree:
    case SemanticsId::Admissible:
    case SemanticsId::Complete: out = family(sem).members(); break;
    case SemanticsId::Stable:
      out = select(family(SemanticsId::Complete),
                   [&](const auto&, const Labelling& l) { return !l.undec_set().intersects(dm); });
      break;
    case SemanticsId::Grounded:
      out = select(family(SemanticsId::Complete),
                   [&](const auto& f, const Labelling& l) { return is_minimal(f, l, InSet{}, dm); });
      break;
    case SemanticsId::Preferred:
      out = select(family(SemanticsId::Complete),
                   [&](const auto& f, const Labelling& l) { return is_maximal(f, l, InSet{}, dm); });
      break;
    case SemanticsId::SemiStable:
      out = select(family(SemanticsId::Complete),
                   [&](const auto& f, const Labelling& l) { return is_minimal(f, l, UndecSet{}, dm); });
      break;
    case SemanticsId::Stage:
      out = select(family(SemanticsId::ConflictFree),
                   [&](const auto& f, const Labelling& l) { return is_minimal(f, l, UndecSet{}, dm); });
      break;
    case SemanticsId::IdealSet: {
      const auto& prefs = members(SemanticsId::Preferred);
      out = select(family(SemanticsId::Admissible), [&](const auto&, const Labelling& l) {
        return std::all_of(prefs.begin(), prefs.end(), [&](const Labelling& p) { return leq_committed(l, p, dm); });
      });
      break;
    }
    case SemanticsId::Ideal: {
      const ListFamily<Labelling> quasi(members(SemanticsId::IdealSet));
      const ArgSet cd = commitment_domain(dm);
      out = select(quasi, [&](const auto& f, const Labelling& l) { return is_greatest(f, l, Commitment{}, cd); });
      break;
    }
    }
    slot.emplace(std::move(out));
    return *slot;
  }

  void prepare(SemanticsId sem) const { members(sem); }

  /// The conflict-free, admissible or complete family.
  const ListFamily<Labelling>& family(SemanticsId base) const {
    auto& slot = families_[static_cast<std::size_t>(base)];
    if (slot)
      return *slot;
    std::vector<Labelling> out;
    switch (base) {
    case SemanticsId::ConflictFree: {
      const std::size_t n = af_->size();
      const std::uint64_t total = labelling_count(n);
      for (std::uint64_t r = 0; r < total; ++r) {
        const Labelling l = labelling_from_rank(n, r);
        if (is_conflict_free_lab(*af_, l, d_))
          out.push_back(l);
      }
      break;
    }
    case SemanticsId::Admissible:
      out = select(family(SemanticsId::ConflictFree),
                   [&](const auto&, const Labelling& l) { return is_admissible_lab(*af_, l, d_); });
      break;
    case SemanticsId::Complete:
      out = select(family(SemanticsId::Admissible),
                   [&](const auto&, const Labelling& l) { return is_complete_lab(*af_, l, d_); });
      break;
    default: throw std::invalid_argument("family() takes CF, AD or CO");
    }
    slot.emplace(std::move(out));
    return *slot;
  }

private:
  const Framework* af_;
  Domain d_;
  mutable std::array<std::optional<ListFamily<Labelling>>, 3> families_;
  mutable std::array<std::optional<std::vector<Labelling>>, all_semantics.size()> cache_;
};

inline bool is_labelling(const Framework& af, SemanticsId sem, const Labelling& l) {
  return LabellingSemantics(af).holds(sem, l);
}
inline bool is_labelling(const Framework& af, SemanticsId sem, const Labelling& l, const Domain& d) {
  return LabellingSemantics(af, d).holds(sem, l);
}

/// The order-based semantics: GR, PR, ST, SST, STG, IDS, ID.
inline bool is_order_labelling(const Framework& af, SemanticsId sem, const Labelling& l) {
  return is_labelling(af, sem, l);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

/// Advances to the lexicographically next labelling; false after the last.
inline bool next_labelling(Labelling& l) {
  for (std::size_t i = l.size(); i > 0; --i) {
    const Label cur = l.label(i - 1);
    if (cur != Label::Undec) {
      l.set(i - 1, static_cast<Label>(static_cast<int>(cur) + 1));
      return true;
    }
    l.set(i - 1, Label::In);
  }
  return false;
}

inline std::vector<Labelling> naive_labellings(const Framework& af, SemanticsId sem, std::size_t threads) {
  const std::size_t n = af.size();
  LabellingSemantics ev(af);
  ev.prepare(sem);
  const std::size_t workers = n >= 10 ? worker_count(threads) : 1;
  return parallel_collect(
      0, labelling_count(n), workers,
      [&](std::uint64_t r) { return ev.holds(sem, labelling_from_rank(n, r)); },
      [&](std::uint64_t r) { return labelling_from_rank(n, r); });
}

/// Labellings whose every argument satisfies the local condition of the
/// conflict-free, admissible or complete semantics, by depth-first
/// assignment in index order. An argument's condition depends on its own
/// label and its attackers' labels, so it is checked as soon as the last of
/// these is assigned. With `no_undec` only In and Out are tried.
inline std::vector<Labelling> local_labellings(const Framework& af, SemanticsId base, bool no_undec) {
  const std::size_t n = af.size();
  std::vector<std::vector<std::size_t>> ready(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t at = a;
    for (auto b : af.attackers_of(a))
      at = std::max(at, b);
    ready[at].push_back(a);
  }
  auto ok = [&](const Labelling& l, std::size_t a) {
    const ArgSet& att = af.attackers_of(a);
    const bool lo = att.intersects(l.in_set());
    const bool li = att.subset_of(l.out_set());
    switch (l.label(a)) {
    case Label::In: return base == SemanticsId::ConflictFree ? !lo : li;
    case Label::Out: return lo;
    case Label::Undec: return base != SemanticsId::Complete || (!lo && !li);
    }
    return false;
  };

  std::vector<Labelling> out;
  Labelling l = Labelling::all_undec(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(l);
      return;
    }
    for (Label lab : {Label::In, Label::Out, Label::Undec}) {
      if (lab == Label::Undec && no_undec)
        continue;
      l.set(i, lab);
      if (std::all_of(ready[i].begin(), ready[i].end(), [&](std::size_t a) { return ok(l, a); }))
        self(self, i + 1);
    }
    l.set(i, Label::Undec);
  };
  rec(rec, 0);
  return out;
}

inline std::vector<Labelling> pruned_labellings(const Framework& af, SemanticsId sem) {
  using S = SemanticsId;
  if (sem == S::ConflictFree || sem == S::Admissible || sem == S::Complete)
    return local_labellings(af, sem, false);
  if (sem == S::Stable)
    return local_labellings(af, S::Complete, true);

  auto keep = [](const ListFamily<Labelling>& from, auto&& pred) {
    std::vector<Labelling> out;
    for (const auto& l : from.members())
      if (pred(l))
        out.push_back(l);
    return ListFamily<Labelling>(std::move(out));
  };
  if (sem == S::Stage) {
    const ListFamily<Labelling> cf(local_labellings(af, S::ConflictFree, false));
    return keep(cf, [&](const Labelling& l) { return is_minimal(cf, l, UndecSet{}); }).members();
  }
  const ListFamily<Labelling> co(local_labellings(af, S::Complete, false));
  switch (sem) {
  case S::Grounded: return keep(co, [&](const Labelling& l) { return is_minimal(co, l, InSet{}); }).members();
  case S::SemiStable: return keep(co, [&](const Labelling& l) { return is_minimal(co, l, UndecSet{}); }).members();
  default: break;
  }
  const auto pr = keep(co, [&](const Labelling& l) { return is_maximal(co, l, InSet{}); });
  if (sem == S::Preferred)
    return pr.members();
  const ListFamily<Labelling> ad(local_labellings(af, S::Admissible, false));
  const auto quasi = keep(ad, [&](const Labelling& l) {
    return std::all_of(pr.members().begin(), pr.members().end(),
                       [&](const Labelling& p) { return leq_committed(l, p); });
  });
  if (sem == S::IdealSet)
    return quasi.members();
  return keep(quasi, [&](const Labelling& l) { return is_greatest(quasi, l, Commitment{}); }).members();
}

} // namespace detail

/// Every labelling of `sem`, in lexicographic order (In < Out < Undec,
/// argument 0 most significant), without duplicates.
inline std::vector<Labelling> enumerate_labellings(const Framework& af, SemanticsId sem,
                                                   EnumerationOptions opts = {}) {
  if (af.size() > max_labelling_universe)
    throw BudgetError("labelling enumeration over more than 20 arguments");
  if (opts.strategy == Strategy::Pruned)
    return detail::pruned_labellings(af, sem);
  return detail::naive_labellings(af, sem, opts.threads);
}

/// The first labelling in enumeration order that satisfies both `sem` and
/// `constraint`, if any.
template <class Constraint>
std::optional<Labelling> find_constrained_labelling(const Framework& af, SemanticsId sem, Constraint&& constraint,
                                                    EnumerationOptions opts = {}) {
  for (auto& l : enumerate_labellings(af, sem, opts))
    if (constraint(std::as_const(l)))
      return std::move(l);
  return std::nullopt;
}

/// All three labels occur.
inline bool is_surjective(const Labelling& l) {
  return !l.in_set().empty() && !l.out_set().empty() && !l.undec_set().empty();
}

} // namespace argon
