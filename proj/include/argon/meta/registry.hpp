#pragma once

// The built-in property suite.

#include "argon/meta/property.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace argon::meta {

namespace detail {

using S = SemanticsId;

inline std::string name_of(S s) { return std::string(display_name(s)); }

/// Relabels a set of `af` onto the arguments of restrict(af, D).
inline Labelling project_labelling(const Labelling& l, const ArgSet& d) {
  return Labelling::from_sets(project_onto_restriction(l.in_set(), d), project_onto_restriction(l.out_set(), d));
}

/// Runs `check(family, projection, domain-free)` over every semantics
/// family with each projection the orders lemmas are stated for.
template <class Check>
bool all_families(Context& c, Check&& check) {
  auto range = [&](const ArgSet& s) { return range_of(c.af(), s); };
  for (auto sem : all_semantics) {
    const ListFamily<ArgSet> ext(c.ext().members(sem));
    if (!check(ext, Identity{}) || !check(ext, range))
      return false;
    const ListFamily<Labelling> lab(c.lab().members(sem));
    if (!check(lab, InSet{}) || !check(lab, OutSet{}) || !check(lab, UndecSet{}))
      return false;
  }
  return true;
}

/// Members of `fam` satisfying `pred(fam, x)`.
template <class Family, class Pred>
auto members_where(const Family& fam, Pred&& pred) {
  std::vector<std::decay_t<decltype(fam.members().front())>> out;
  for (const auto& x : fam.members())
    if (pred(fam, x))
      out.push_back(x);
  return out;
}

inline Labelling fundamental_rewrite(const Framework& af, const Labelling& l, std::size_t a) {
  Labelling out = l;
  for (auto x : af.attackers_of(a))
    out.set(x, Label::Out);
  out.set(a, Label::In);
  return out;
}

inline void add_core(std::vector<Property>& r) {
  r.push_back({"DefendsViaAttackSets", "S defends a iff the attackers of a are all attacked by S",
               {q::set("S"), q::argument("a")},
               [](Context& c, const Values& v) {
                 const auto& af = c.af();
                 const ArgSet& s = as_set(v, 0);
                 const std::size_t a = as_arg(v, 1);
                 return defends(af, s, a) == attacker_set(af, ArgSet::of(af.size(), {a})).subset_of(attacked_set(af, s));
               }});
  r.push_back({"CharacteristicMonotone", "A subset of B implies F(A) subset of F(B)",
               {q::set("B"), q::subset_of(0, "A")},
               [](Context& c, const Values& v) {
                 return characteristic(c.af(), as_set(v, 1)).subset_of(characteristic(c.af(), as_set(v, 0)));
               }});
  r.push_back({"CharacteristicLeastFixpoint", "the ascending iteration of F ends in a fixpoint below every fixpoint",
               {q::set("S")},
               [](Context& c, const Values& v) {
                 const ArgSet& s = as_set(v, 0);
                 const ArgSet& l = c.lfp();
                 return characteristic(c.af(), l) == l && (characteristic(c.af(), s) != s || l.subset_of(s));
               }});
  r.push_back({"CharacteristicGreatestFixpoint",
               "the descending iteration of F ends in a fixpoint above every fixpoint",
               {q::set("S")},
               [](Context& c, const Values& v) {
                 const ArgSet& s = as_set(v, 0);
                 const ArgSet& g = c.gfp();
                 return characteristic(c.af(), g) == g && (characteristic(c.af(), s) != s || s.subset_of(g));
               }});
  r.push_back({"LeastFixpointBelowGreatest", "lfp(F) is a subset of gfp(F)", {},
               [](Context& c, const Values&) { return c.lfp().subset_of(c.gfp()); }});
  r.push_back({"RestrictionCoherenceExt",
               "each extension predicate relativised to D agrees with it on the framework induced by D",
               {q::set("D"), q::subset_of(0, "S")},
               [](Context& c, const Values& v) {
                 const ArgSet& d = as_set(v, 0);
                 const ArgSet& s = as_set(v, 1);
                 const auto& sub = c.restricted(d);
                 const auto& rel = c.ext_within(d);
                 const ArgSet ps = project_onto_restriction(s, d);
                 for (auto sem : all_semantics)
                   if (sub.ext.holds(sem, ps) != rel.holds(sem, s))
                     return false;
                 return true;
               }});
  r.push_back({"RestrictionCoherenceLab",
               "each labelling predicate relativised to D agrees with it on the framework induced by D",
               {q::set("D"), q::labelling_within(0, "L")},
               [](Context& c, const Values& v) {
                 const ArgSet& d = as_set(v, 0);
                 const Labelling& l = as_lab(v, 1);
                 const auto& sub = c.restricted(d);
                 const auto& rel = c.lab_within(d);
                 const Labelling pl = project_labelling(l, d);
                 for (auto sem : all_semantics)
                   if (sub.lab.holds(sem, pl) != rel.holds(sem, l))
                     return false;
                 return true;
               }});
}

inline void add_orders(std::vector<Property>& r) {
  r.push_back({"LeastUnique", "least members of a family have equal projections", {},
               [](Context& c, const Values&) {
                 return all_families(c, [](const auto& fam, auto proj) {
                   const auto least = members_where(fam, [&](const auto& f, const auto& x) { return is_least(f, x, proj); });
                   for (const auto& x : least)
                     if (proj(x) != proj(least.front()))
                       return false;
                   return true;
                 });
               }});
  r.push_back({"GreatestUnique", "greatest members of a family have equal projections", {},
               [](Context& c, const Values&) {
                 return all_families(c, [](const auto& fam, auto proj) {
                   const auto top = members_where(fam, [&](const auto& f, const auto& x) { return is_greatest(f, x, proj); });
                   for (const auto& x : top)
                     if (proj(x) != proj(top.front()))
                       return false;
                   return true;
                 });
               }});
  r.push_back({"MinimalCollapse", "if a family has a least member, every minimal member is least", {},
               [](Context& c, const Values&) {
                 return all_families(c, [](const auto& fam, auto proj) {
                   bool has_least = false;
                   for (const auto& x : fam.members())
                     has_least = has_least || is_least(fam, x, proj);
                   if (!has_least)
                     return true;
                   for (const auto& y : fam.members())
                     if (is_minimal(fam, y, proj) && !is_least(fam, y, proj))
                       return false;
                   return true;
                 });
               }});
  r.push_back({"MaximalCollapse", "if a family has a greatest member, every maximal member is greatest", {},
               [](Context& c, const Values&) {
                 return all_families(c, [](const auto& fam, auto proj) {
                   bool has_top = false;
                   for (const auto& x : fam.members())
                     has_top = has_top || is_greatest(fam, x, proj);
                   if (!has_top)
                     return true;
                   for (const auto& y : fam.members())
                     if (is_maximal(fam, y, proj) && !is_greatest(fam, y, proj))
                       return false;
                   return true;
                 });
               }});
  r.push_back({"AdmissibleDirectedComplete", "the admissible sets are closed under directed unions", {},
               [](Context& c, const Values&) {
                 return is_directed_complete(c.size(), c.ext().members(S::Admissible));
               }});
}

inline void add_extension_lemmas(std::vector<Property>& r) {
  r.push_back({"NoSelfAttackInConflictFree", "no member of a conflict-free set attacks itself",
               {q::set_of(S::ConflictFree, "E"), q::argument("a")},
               [](Context& c, const Values& v) {
                 const std::size_t a = as_arg(v, 1);
                 return !as_set(v, 0).contains(a) || !c.af().attacks(a, a);
               }});
  r.push_back({"CharacteristicPreservesConflictFree", "F maps conflict-free sets to conflict-free sets",
               {q::set_of(S::ConflictFree, "E")},
               [](Context& c, const Values& v) {
                 return is_conflict_free(c.af(), characteristic(c.af(), as_set(v, 0)));
               }});
  r.push_back({"AdmissibleIffSubsetOfCharacteristic", "a conflict-free E is admissible iff E is a subset of F(E)",
               {q::set_of(S::ConflictFree, "E")},
               [](Context& c, const Values& v) {
                 const ArgSet& e = as_set(v, 0);
                 return is_admissible(c.af(), e) == e.subset_of(characteristic(c.af(), e));
               }});
  r.push_back({"CompleteIffConflictFreeFixpoint", "a conflict-free E is complete iff F(E) = E",
               {q::set_of(S::ConflictFree, "E")},
               [](Context& c, const Values& v) {
                 const ArgSet& e = as_set(v, 0);
                 return is_complete(c.af(), e) == (characteristic(c.af(), e) == e);
               }});
  for (auto sem : {S::Complete, S::Preferred, S::Grounded})
    r.push_back({name_of(sem) + "ExtExists", "every framework has a " + name_of(sem) + " extension", {},
                 [sem](Context& c, const Values&) { return !c.ext().members(sem).empty(); }});
  r.push_back({"GroundedExtUnique", "there is exactly one grounded extension and it is lfp(F)", {},
               [](Context& c, const Values&) {
                 const auto& gr = c.ext().members(S::Grounded);
                 return gr.size() == 1 && gr.front() == grounded_extension(c.af());
               }});
  r.push_back({"GroundedIsLeastComplete", "grounded extensions are exactly the least complete extensions",
               {q::set("S")},
               [](Context& c, const Values& v) {
                 const ArgSet& s = as_set(v, 0);
                 return c.ext().holds(S::Grounded, s) == is_least(c.ext().family(S::Complete), s);
               }});
  r.push_back({"ExtensionFundamental", "if admissible E defends a then E with a is admissible",
               {q::set_of(S::Admissible, "E"), q::argument("a")},
               [](Context& c, const Values& v) {
                 const ArgSet& e = as_set(v, 0);
                 const std::size_t a = as_arg(v, 1);
                 return !defends(c.af(), e, a) || is_admissible(c.af(), e.with(a));
               }});
  r.push_back({"ExtensionFundamentalDefence",
               "if admissible E defends a and b then E with a still defends b",
               {q::set_of(S::Admissible, "E"), q::argument("a"), q::argument("b")},
               [](Context& c, const Values& v) {
                 const ArgSet& e = as_set(v, 0);
                 const std::size_t a = as_arg(v, 1);
                 const std::size_t b = as_arg(v, 2);
                 return !(defends(c.af(), e, a) && defends(c.af(), e, b)) || defends(c.af(), e.with(a), b);
               }});
  r.push_back({"PreferredCompletion", "every admissible set is contained in a preferred extension",
               {q::set_of(S::Admissible, "S")},
               [](Context& c, const Values& v) {
                 const ArgSet& s = as_set(v, 0);
                 const auto& pr = c.ext().members(S::Preferred);
                 return std::any_of(pr.begin(), pr.end(), [&](const ArgSet& e) { return s.subset_of(e); });
               }});
}

inline void add_labelling_lemmas(std::vector<Property>& r) {
  r.push_back({"AdmissibleLabExists", "the all-Undec labelling is admissible", {},
               [](Context& c, const Values&) { return is_admissible_lab(c.af(), Labelling::all_undec(c.size())); }});

  struct LegalCase {
    const char* id;
    const char* statement;
    S sem;
    bool (*body)(const Framework&, const Labelling&, std::size_t);
    Expectation expect;
  };
  static constexpr LegalCase legal[] = {
      {"AdmissibleLabLegallyUndecImpliesUndec", "in an admissible labelling legally undec arguments are Undec",
       S::Admissible,
       [](const Framework& af, const Labelling& l, std::size_t x) {
         return !legally_undec(af, l, x) || l.label(x) == Label::Undec;
       },
       Expectation::Holds},
      {"AdmissibleLabUndecImpliesLegallyUndec", "in an admissible labelling Undec arguments are legally undec",
       S::Admissible,
       [](const Framework& af, const Labelling& l, std::size_t x) {
         return l.label(x) != Label::Undec || legally_undec(af, l, x);
       },
       Expectation::Refuted},
      {"AdmissibleLabLegallyInImpliesIn", "in an admissible labelling legally in arguments are In", S::Admissible,
       [](const Framework& af, const Labelling& l, std::size_t x) {
         return !legally_in(af, l, x) || l.label(x) == Label::In;
       },
       Expectation::Refuted},
      {"AdmissibleLabLegallyOutImpliesOut", "in an admissible labelling legally out arguments are Out",
       S::Admissible,
       [](const Framework& af, const Labelling& l, std::size_t x) {
         return !legally_out(af, l, x) || l.label(x) == Label::Out;
       },
       Expectation::Refuted},
      {"CompleteLabLegallyInImpliesIn", "in a complete labelling legally in arguments are In", S::Complete,
       [](const Framework& af, const Labelling& l, std::size_t x) {
         return !legally_in(af, l, x) || l.label(x) == Label::In;
       },
       Expectation::Holds},
      {"CompleteLabLegallyOutImpliesOut", "in a complete labelling legally out arguments are Out", S::Complete,
       [](const Framework& af, const Labelling& l, std::size_t x) {
         return !legally_out(af, l, x) || l.label(x) == Label::Out;
       },
       Expectation::Holds},
  };
  for (const auto& lc : legal) {
    auto body = lc.body;
    r.push_back({lc.id, lc.statement, {q::labelling_of(lc.sem, "L"), q::argument("x")},
                 [body](Context& c, const Values& v) { return body(c.af(), as_lab(v, 0), as_arg(v, 1)); },
                 lc.expect});
  }

  r.push_back({"CompleteLabCharacterisation",
               "L is complete iff In coincides with legally in and Out with legally out",
               {q::labelling("L")},
               [](Context& c, const Values& v) {
                 const auto& af = c.af();
                 const Labelling& l = as_lab(v, 0);
                 bool tight = true;
                 for (std::size_t x = 0; x < af.size() && tight; ++x)
                   tight = (l.label(x) == Label::In) == legally_in(af, l, x) &&
                           (l.label(x) == Label::Out) == legally_out(af, l, x);
                 return is_complete_lab(af, l) == tight;
               }});

  struct Determines {
    const char* id;
    const char* what;
    ArgSet (*proj)(const Labelling&);
    Expectation expect;
  };
  static constexpr Determines determines[] = {
      {"CompleteLabDeterminedByInSet", "in-set", [](const Labelling& l) { return l.in_set(); }, Expectation::Holds},
      {"CompleteLabDeterminedByOutSet", "out-set", [](const Labelling& l) { return l.out_set(); },
       Expectation::Holds},
      {"CompleteLabDeterminedByUndecSet", "undec-set", [](const Labelling& l) { return l.undec_set(); },
       Expectation::Refuted},
  };
  for (const auto& dc : determines) {
    auto proj = dc.proj;
    r.push_back({dc.id, std::string("complete labellings with the same ") + dc.what + " are equal",
                 {q::labelling_of(S::Complete, "L1"), q::labelling_of(S::Complete, "L2")},
                 [proj](Context&, const Values& v) {
                   return proj(as_lab(v, 0)) != proj(as_lab(v, 1)) || as_lab(v, 0) == as_lab(v, 1);
                 },
                 dc.expect});
  }

  r.push_back({"GroundedLabMinimalInIffMinimalOut",
               "among complete labellings, minimal in-set iff minimal out-set",
               {q::labelling_of(S::Complete, "L")},
               [](Context& c, const Values& v) {
                 const auto& co = c.lab().family(S::Complete);
                 const Labelling& l = as_lab(v, 0);
                 return is_minimal(co, l, InSet{}) == is_minimal(co, l, OutSet{});
               }});
  r.push_back({"PreferredLabMaximalInIffMaximalOut",
               "among complete labellings, maximal in-set iff maximal out-set",
               {q::labelling_of(S::Complete, "L")},
               [](Context& c, const Values& v) {
                 const auto& co = c.lab().family(S::Complete);
                 const Labelling& l = as_lab(v, 0);
                 return is_maximal(co, l, InSet{}) == is_maximal(co, l, OutSet{});
               }});
  r.push_back({"PreferredLabMaximalInIffMinimalOut",
               "among complete labellings, maximal in-set iff minimal out-set",
               {q::labelling_of(S::Complete, "L")},
               [](Context& c, const Values& v) {
                 const auto& co = c.lab().family(S::Complete);
                 const Labelling& l = as_lab(v, 0);
                 return is_maximal(co, l, InSet{}) == is_minimal(co, l, OutSet{});
               },
               Expectation::Refuted});
  r.push_back({"GroundedLabIsLeastComplete",
               "grounded labellings are exactly the complete labellings with least in-set",
               {q::labelling("L")},
               [](Context& c, const Values& v) {
                 const Labelling& l = as_lab(v, 0);
                 return c.lab().holds(S::Grounded, l) == is_least(c.lab().family(S::Complete), l, InSet{});
               }});
  for (auto sem : {S::Complete, S::Preferred, S::Grounded})
    r.push_back({name_of(sem) + "LabExists", "every framework has a " + name_of(sem) + " labelling", {},
                 [sem](Context& c, const Values&) { return !c.lab().members(sem).empty(); }});
  r.push_back({"GroundedLabUnique", "there is exactly one grounded labelling", {},
               [](Context& c, const Values&) { return c.lab().members(S::Grounded).size() == 1; }});
}

inline void add_fundamental(std::vector<Property>& r) {
  r.push_back({"NaiveLabellingFundamental",
               "if in(L) of an admissible L defends a, relabelling a to In keeps L admissible",
               {q::labelling_of(S::Admissible, "L"), q::argument("a")},
               [](Context& c, const Values& v) {
                 const Labelling& l = as_lab(v, 0);
                 const std::size_t a = as_arg(v, 1);
                 return !defends(c.af(), l.in_set(), a) || is_admissible_lab(c.af(), l.with(a, Label::In));
               },
               Expectation::Refuted});
  r.push_back({"LabellingFundamental",
               "if in(L) of an admissible L defends a, relabelling a to In and its attackers to Out keeps L "
               "admissible",
               {q::labelling_of(S::Admissible, "L"), q::argument("a")},
               [](Context& c, const Values& v) {
                 const Labelling& l = as_lab(v, 0);
                 const std::size_t a = as_arg(v, 1);
                 return !defends(c.af(), l.in_set(), a) ||
                        is_admissible_lab(c.af(), fundamental_rewrite(c.af(), l, a));
               }});
}

/// The inclusion lattice between semantics: each edge holds, each converse
/// is refuted.
inline constexpr std::array<std::pair<S, S>, 9> inclusion_edges{{
    {S::Stable, S::SemiStable},
    {S::SemiStable, S::Preferred},
    {S::Preferred, S::Complete},
    {S::Complete, S::Admissible},
    {S::Admissible, S::ConflictFree},
    {S::Stable, S::Stage},
    {S::Stage, S::ConflictFree},
    {S::Grounded, S::Complete},
    {S::Ideal, S::Complete},
}};

inline void add_inclusion(std::vector<Property>& r) {
  for (const auto& [from, to] : inclusion_edges) {
    for (bool converse : {false, true}) {
      const S a = converse ? to : from;
      const S b = converse ? from : to;
      const Expectation e = converse ? Expectation::Refuted : Expectation::Holds;
      r.push_back({name_of(a) + "ExtImplies" + name_of(b) + "Ext",
                   "every " + name_of(a) + " extension is a " + name_of(b) + " extension",
                   {q::set_of(a, "S")},
                   [b](Context& c, const Values& v) { return c.ext().holds(b, as_set(v, 0)); }, e});
      r.push_back({name_of(a) + "LabImplies" + name_of(b) + "Lab",
                   "every " + name_of(a) + " labelling is a " + name_of(b) + " labelling",
                   {q::labelling_of(a, "L")},
                   [b](Context& c, const Values& v) { return c.lab().holds(b, as_lab(v, 0)); }, e});
    }
  }
}

inline void add_correspondence(std::vector<Property>& r) {
  for (auto sem : all_semantics) {
    const Expectation e = correspondence_asserted(sem) ? Expectation::Holds : Expectation::Advisory;
    r.push_back({name_of(sem) + "LabToExt", "the in-set of a " + name_of(sem) + " labelling is an extension",
                 {q::labelling_of(sem, "L")},
                 [sem](Context& c, const Values& v) { return c.ext().holds(sem, lab_to_ext(as_lab(v, 0))); }, e});
    r.push_back({name_of(sem) + "ExtToLab", "the labelling of a " + name_of(sem) + " extension is a labelling",
                 {q::set_of(sem, "S")},
                 [sem](Context& c, const Values& v) {
                   return c.lab().holds(sem, ext_to_lab(c.af(), as_set(v, 0)));
                 },
                 e});
    r.push_back({name_of(sem) + "ExtFromLab",
                 "S is a " + name_of(sem) + " extension whenever its labelling is a labelling",
                 {q::set("S")},
                 [sem](Context& c, const Values& v) {
                   const ArgSet& s = as_set(v, 0);
                   return !c.lab().holds(sem, ext_to_lab(c.af(), s)) || c.ext().holds(sem, s);
                 },
                 e});
  }
  r.push_back({"PreferredLabToExtConverse", "L is a preferred labelling whenever its in-set is a preferred extension",
               {q::labelling("L")},
               [](Context& c, const Values& v) {
                 const Labelling& l = as_lab(v, 0);
                 return !c.ext().holds(S::Preferred, lab_to_ext(l)) || c.lab().holds(S::Preferred, l);
               },
               Expectation::Refuted});
  r.push_back({"ExtToLabRoundTrip", "the in-set of the labelling of S is S", {q::set("S")},
               [](Context& c, const Values& v) {
                 return lab_to_ext(ext_to_lab(c.af(), as_set(v, 0))) == as_set(v, 0);
               }});
}

} // namespace detail

/// Every built-in property, in a fixed order.
inline const std::vector<Property>& builtin_properties() {
  static const std::vector<Property> registry = [] {
    std::vector<Property> r;
    detail::add_core(r);
    detail::add_orders(r);
    detail::add_extension_lemmas(r);
    detail::add_labelling_lemmas(r);
    detail::add_fundamental(r);
    detail::add_inclusion(r);
    detail::add_correspondence(r);
    return r;
  }();
  return registry;
}

inline const Property* find_property(std::string_view id) {
  for (const auto& p : builtin_properties())
    if (p.id == id)
      return &p;
  return nullptr;
}

} // namespace argon::meta
