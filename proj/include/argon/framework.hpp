#pragma once

#include "argon/arg_set.hpp"
#include "argon/error.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace argon {

struct Attack {
  std::size_t from;
  std::size_t to;

  friend auto operator<=>(const Attack&, const Attack&) = default;
};

/// Argument names are `[A-Za-z0-9_]+`, case-sensitive.
inline bool is_identifier(std::string_view name) {
  if (name.empty())
    return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

/// A finite argumentation framework: named arguments 0..n-1 and an attack relation.
///
/// Immutable once built. Attacks are kept deduplicated and sorted by
/// (attacker, target); per-argument attacker and target sets are precomputed.
class Framework {
public:
  Framework() = default;

  /// Builds a framework from names and attacks given by name. Argument order
  /// follows `names`; duplicate attacks collapse.
  static Framework create(std::vector<std::string> names,
                          const std::vector<std::pair<std::string, std::string>>& attacks) {
    Framework af(std::move(names));
    std::vector<Attack> indexed;
    indexed.reserve(attacks.size());
    for (const auto& [from, to] : attacks) {
      auto a = af.find(from);
      auto b = af.find(to);
      if (!a)
        throw FrameworkError("attack endpoint '" + from + "' is not a declared argument");
      if (!b)
        throw FrameworkError("attack endpoint '" + to + "' is not a declared argument");
      indexed.push_back({*a, *b});
    }
    af.set_attacks(std::move(indexed));
    return af;
  }

  static Framework from_indices(std::vector<std::string> names, std::vector<Attack> attacks) {
    Framework af(std::move(names));
    for (const auto& att : attacks)
      if (att.from >= af.size() || att.to >= af.size())
        throw FrameworkError("attack index out of range");
    af.set_attacks(std::move(attacks));
    return af;
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  ArgSet empty_set() const { return ArgSet(size()); }
  ArgSet universe() const { return ArgSet::full(size()); }

  const std::vector<Attack>& attacks() const noexcept { return attacks_; }
  bool attacks(std::size_t from, std::size_t to) const { return targets_[from].contains(to); }

  /// { b | b attacks a }
  const ArgSet& attackers_of(std::size_t a) const { return attackers_[a]; }
  /// { b | a attacks b }
  const ArgSet& targets_of(std::size_t a) const { return targets_[a]; }

  friend bool operator==(const Framework& a, const Framework& b) {
    return a.names_ == b.names_ && a.attacks_ == b.attacks_;
  }

private:
  explicit Framework(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_identifier(names_[i]))
        throw FrameworkError("invalid argument name '" + names_[i] + "'");
      if (!index_.emplace(names_[i], i).second)
        throw FrameworkError("duplicate argument name '" + names_[i] + "'");
    }
  }

  void set_attacks(std::vector<Attack> attacks) {
    std::sort(attacks.begin(), attacks.end());
    attacks.erase(std::unique(attacks.begin(), attacks.end()), attacks.end());
    attacks_ = std::move(attacks);
    attackers_.assign(size(), ArgSet(size()));
    targets_.assign(size(), ArgSet(size()));
    for (const auto& att : attacks_) {
      attackers_[att.to].insert(att.from);
      targets_[att.from].insert(att.to);
    }
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Attack> attacks_;
  std::vector<ArgSet> attackers_;
  std::vector<ArgSet> targets_;
};

/// Relativisation domain: quantifiers and set comparisons only look inside it.
struct Domain {
  ArgSet members;

  static Domain whole(const Framework& af) { return {af.universe()}; }
};

inline Framework new_framework(std::vector<std::string> names,
                               const std::vector<std::pair<std::string, std::string>>& attacks) {
  return Framework::create(std::move(names), attacks);
}

inline ArgSet set_of(const Framework& af, std::initializer_list<std::string_view> names) {
  ArgSet s = af.empty_set();
  for (auto n : names) {
    auto i = af.find(n);
    if (!i)
      throw FrameworkError("unknown argument '" + std::string(n) + "'");
    s.insert(*i);
  }
  return s;
}

// S+ : arguments attacked by some member of S (attackers drawn from the domain).
inline ArgSet attacked_set(const Framework& af, const ArgSet& s, const Domain& d) {
  ArgSet out = af.empty_set();
  for (auto a : s & d.members)
    out |= af.targets_of(a);
  return out;
}
inline ArgSet attacked_set(const Framework& af, const ArgSet& s) {
  return attacked_set(af, s, Domain::whole(af));
}

// S- : arguments attacking some member of S.
inline ArgSet attacker_set(const Framework& af, const ArgSet& s, const Domain& d) {
  ArgSet out = af.empty_set();
  for (auto a : s & d.members)
    out |= af.attackers_of(a);
  return out;
}
inline ArgSet attacker_set(const Framework& af, const ArgSet& s) {
  return attacker_set(af, s, Domain::whole(af));
}

/// Every in-domain attacker of `a` is attacked by some member of S.
inline bool defends(const Framework& af, const ArgSet& s, std::size_t a, const Domain& d) {
  return (af.attackers_of(a) & d.members).subset_of(attacked_set(af, s, d));
}
inline bool defends(const Framework& af, const ArgSet& s, std::size_t a) {
  return defends(af, s, a, Domain::whole(af));
}

/// The characteristic function F(S) = { a | S defends a }.
inline ArgSet characteristic(const Framework& af, const ArgSet& s, const Domain& d) {
  ArgSet hit = attacked_set(af, s, d);
  ArgSet out = af.empty_set();
  for (std::size_t a = 0; a < af.size(); ++a)
    if ((af.attackers_of(a) & d.members).subset_of(hit))
      out.insert(a);
  return out;
}
inline ArgSet characteristic(const Framework& af, const ArgSet& s) {
  return characteristic(af, s, Domain::whole(af));
}

inline ArgSet range_of(const Framework& af, const ArgSet& s, const Domain& d) {
  return s | attacked_set(af, s, d);
}
inline ArgSet range_of(const Framework& af, const ArgSet& s) { return range_of(af, s, Domain::whole(af)); }

/// Induced sub-framework on D, reindexed in ascending order, original names kept.
inline Framework restrict(const Framework& af, const ArgSet& d) {
  std::vector<std::size_t> new_index(af.size(), af.size());
  std::vector<std::string> names;
  for (auto a : d) {
    new_index[a] = names.size();
    names.push_back(af.name(a));
  }
  std::vector<Attack> attacks;
  for (const auto& att : af.attacks())
    if (d.contains(att.from) && d.contains(att.to))
      attacks.push_back({new_index[att.from], new_index[att.to]});
  return Framework::from_indices(std::move(names), std::move(attacks));
}

/// Maps a set over `af` restricted to D onto the index space of restrict(af, D).
inline ArgSet project_onto_restriction(const ArgSet& s, const ArgSet& d) {
  ArgSet out(d.count());
  std::size_t k = 0;
  for (auto a : d) {
    if (s.contains(a))
      out.insert(k);
    ++k;
  }
  return out;
}

} // namespace argon
