#pragma once

// Brute-force reference semantics, written directly from the textbook
// definitions over plain bitmasks. Shares no code with the library beyond
// reading the attack relation, so the two can be compared.

#include "argon/framework.hpp"
#include "argon/labelling.hpp"
#include "argon/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;

struct Graph {
  int n = 0;
  std::vector<Mask> attackers; // attackers[a]: bit b set iff b attacks a

  explicit Graph(const argon::Framework& af) : n(static_cast<int>(af.size())), attackers(af.size(), 0) {
    for (const auto& att : af.attacks())
      attackers[att.to] |= Mask{1} << att.from;
  }

  Mask all() const { return n == 0 ? 0 : (Mask{1} << n) - 1; }
  bool attacks(int b, int a) const { return (attackers[a] >> b) & 1U; }
  Mask plus(Mask s) const {
    Mask out = 0;
    for (int a = 0; a < n; ++a)
      if (attackers[a] & s)
        out |= Mask{1} << a;
    return out;
  }
};

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline bool conflict_free(const Graph& g, Mask s) {
  for (int a = 0; a < g.n; ++a)
    if (((s >> a) & 1U) && (g.attackers[a] & s))
      return false;
  return true;
}

inline bool defends(const Graph& g, Mask s, int a) {
  for (int b = 0; b < g.n; ++b)
    if (g.attacks(b, a) && (g.attackers[b] & s) == 0)
      return false;
  return true;
}

inline bool admissible(const Graph& g, Mask s) {
  if (!conflict_free(g, s))
    return false;
  for (int a = 0; a < g.n; ++a)
    if (((s >> a) & 1U) && !defends(g, s, a))
      return false;
  return true;
}

inline bool complete(const Graph& g, Mask s) {
  if (!admissible(g, s))
    return false;
  for (int a = 0; a < g.n; ++a)
    if (defends(g, s, a) && !((s >> a) & 1U))
      return false;
  return true;
}

inline bool stable(const Graph& g, Mask s) { return conflict_free(g, s) && (s | g.plus(s)) == g.all(); }

template <class P>
std::vector<Mask> all_where(const Graph& g, P p) {
  std::vector<Mask> out;
  for (Mask m = 0; m <= g.all(); ++m)
    if (p(m))
      out.push_back(m);
  return out;
}

/// Members of `fam` with no strictly larger (smaller) key inside `fam`.
template <class Key>
std::vector<Mask> extremal(const std::vector<Mask>& fam, Key key, bool maximal) {
  std::vector<Mask> out;
  for (Mask x : fam) {
    bool ok = true;
    for (Mask y : fam) {
      const Mask kx = key(x), ky = key(y);
      if (kx != ky && (maximal ? subset(kx, ky) : subset(ky, kx)))
        ok = false;
    }
    if (ok)
      out.push_back(x);
  }
  return out;
}

/// Extensions of `sem` in ascending mask order.
inline std::vector<Mask> extensions(const argon::Framework& af, argon::SemanticsId sem) {
  using S = argon::SemanticsId;
  const Graph g(af);
  auto id = [](Mask m) { return m; };
  auto range = [&](Mask m) { return m | g.plus(m); };
  const auto cf = all_where(g, [&](Mask m) { return conflict_free(g, m); });
  const auto ad = all_where(g, [&](Mask m) { return admissible(g, m); });
  const auto co = all_where(g, [&](Mask m) { return complete(g, m); });
  // Preferred as maximal admissible sets, a different route from the library.
  const auto pr = extremal(ad, id, true);
  std::vector<Mask> ids;
  for (Mask m : ad)
    if (std::all_of(pr.begin(), pr.end(), [&](Mask p) { return subset(m, p); }))
      ids.push_back(m);
  switch (sem) {
  case S::ConflictFree: return cf;
  case S::Admissible: return ad;
  case S::Complete: return co;
  case S::Grounded: return extremal(co, id, false);
  case S::Preferred: return pr;
  case S::Stable: return all_where(g, [&](Mask m) { return stable(g, m); });
  case S::SemiStable: return extremal(co, range, true);
  case S::Stage: return extremal(cf, range, true);
  case S::IdealSet: return ids;
  case S::Ideal: {
    std::vector<Mask> out;
    for (Mask x : ids)
      if (std::all_of(ids.begin(), ids.end(), [&](Mask y) { return subset(y, x); }))
        out.push_back(x);
    return out;
  }
  }
  return {};
}

// Labellings as (in, out) mask pairs.
struct Lab {
  Mask in = 0, out = 0;
  bool operator==(const Lab&) const = default;
};

inline Mask undec(const Graph& g, const Lab& l) { return g.all() & ~(l.in | l.out); }

inline bool legally_in(const Graph& g, const Lab& l, int a) { return subset(g.attackers[a], l.out); }
inline bool legally_out(const Graph& g, const Lab& l, int a) { return (g.attackers[a] & l.in) != 0; }

inline bool lab_conflict_free(const Graph& g, const Lab& l) {
  for (int a = 0; a < g.n; ++a) {
    if (((l.in >> a) & 1U) && legally_out(g, l, a))
      return false;
    if (((l.out >> a) & 1U) && !legally_out(g, l, a))
      return false;
  }
  return true;
}

inline bool lab_admissible(const Graph& g, const Lab& l) {
  for (int a = 0; a < g.n; ++a) {
    if (((l.in >> a) & 1U) && !legally_in(g, l, a))
      return false;
    if (((l.out >> a) & 1U) && !legally_out(g, l, a))
      return false;
  }
  return true;
}

inline bool lab_complete(const Graph& g, const Lab& l) {
  if (!lab_admissible(g, l))
    return false;
  for (int a = 0; a < g.n; ++a)
    if (((undec(g, l) >> a) & 1U) && (legally_in(g, l, a) || legally_out(g, l, a)))
      return false;
  return true;
}

/// All 3^n labellings, lexicographic with In < Out < Undec, index 0 first.
inline std::vector<Lab> all_labs(const Graph& g) {
  std::vector<Lab> out;
  std::vector<int> digits(static_cast<std::size_t>(g.n), 0);
  while (true) {
    Lab l;
    for (int a = 0; a < g.n; ++a) {
      if (digits[static_cast<std::size_t>(a)] == 0)
        l.in |= Mask{1} << a;
      else if (digits[static_cast<std::size_t>(a)] == 1)
        l.out |= Mask{1} << a;
    }
    out.push_back(l);
    int i = g.n - 1;
    while (i >= 0 && digits[static_cast<std::size_t>(i)] == 2)
      digits[static_cast<std::size_t>(i--)] = 0;
    if (i < 0)
      break;
    ++digits[static_cast<std::size_t>(i)];
  }
  return out;
}

template <class Key>
std::vector<Lab> lab_extremal(const std::vector<Lab>& fam, Key key, bool maximal) {
  std::vector<Lab> out;
  for (const Lab& x : fam) {
    bool ok = true;
    for (const Lab& y : fam) {
      const Mask kx = key(x), ky = key(y);
      if (kx != ky && (maximal ? subset(kx, ky) : subset(ky, kx)))
        ok = false;
    }
    if (ok)
      out.push_back(x);
  }
  return out;
}

inline bool leq(const Lab& a, const Lab& b) { return subset(a.in, b.in) && subset(a.out, b.out); }

inline std::vector<Lab> labellings(const argon::Framework& af, argon::SemanticsId sem) {
  using S = argon::SemanticsId;
  const Graph g(af);
  const auto every = all_labs(g);
  auto where = [&](auto p) {
    std::vector<Lab> out;
    for (const auto& l : every)
      if (p(l))
        out.push_back(l);
    return out;
  };
  auto in = [](const Lab& l) { return l.in; };
  auto und = [&](const Lab& l) { return undec(g, l); };
  const auto cf = where([&](const Lab& l) { return lab_conflict_free(g, l); });
  const auto ad = where([&](const Lab& l) { return lab_admissible(g, l); });
  const auto co = where([&](const Lab& l) { return lab_complete(g, l); });
  const auto pr = lab_extremal(co, in, true);
  std::vector<Lab> quasi;
  for (const auto& l : ad)
    if (std::all_of(pr.begin(), pr.end(), [&](const Lab& p) { return leq(l, p); }))
      quasi.push_back(l);
  switch (sem) {
  case S::ConflictFree: return cf;
  case S::Admissible: return ad;
  case S::Complete: return co;
  case S::Grounded: return lab_extremal(co, in, false);
  case S::Preferred: return pr;
  case S::Stable: return where([&](const Lab& l) { return lab_complete(g, l) && undec(g, l) == 0; });
  case S::SemiStable: return lab_extremal(co, und, false);
  case S::Stage: return lab_extremal(cf, und, false);
  case S::IdealSet: return quasi;
  case S::Ideal: {
    std::vector<Lab> out;
    for (const auto& x : quasi)
      if (std::all_of(quasi.begin(), quasi.end(), [&](const Lab& y) { return leq(y, x); }))
        out.push_back(x);
    return out;
  }
  }
  return {};
}

inline Lab from(const argon::Labelling& l) { return {static_cast<Mask>(l.in_set().mask()), static_cast<Mask>(l.out_set().mask())}; }

} // namespace oracle
