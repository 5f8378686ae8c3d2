#pragma once

#include "argon/extensions.hpp"
#include "argon/labellings.hpp"

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace argon {

inline ArgSet lab_to_ext(const Labelling& l) { return l.in_set(); }

/// In for members of E, Out for arguments E attacks, Undec otherwise.
inline Labelling ext_to_lab(const Framework& af, const ArgSet& e, const Domain& d) {
  const ArgSet in = e;
  const ArgSet out = attacked_set(af, e, d) - e;
  return Labelling::from_sets(in, out);
}
inline Labelling ext_to_lab(const Framework& af, const ArgSet& e) { return ext_to_lab(af, e, Domain::whole(af)); }

enum class Direction {
  LabToExt,   ///< L is a labelling ⟹ lab_to_ext(L) is an extension
  ExtToLab,   ///< S is an extension ⟹ ext_to_lab(S) is a labelling
  ExtFromLab, ///< ext_to_lab(S) is a labelling ⟹ S is an extension
};

inline constexpr std::string_view direction_name(Direction d) {
  switch (d) {
  case Direction::LabToExt: return "Lab->Ext";
  case Direction::ExtToLab: return "Ext->Lab";
  case Direction::ExtFromLab: return "Ext<-LabOfExt";
  }
  return "?";
}

/// The semantics whose correspondence is asserted; IDS and ID only run in
/// advisory mode.
inline constexpr bool correspondence_asserted(SemanticsId s) {
  return s != SemanticsId::IdealSet && s != SemanticsId::Ideal;
}

struct CorrespondenceReport {
  SemanticsId semantics;
  Direction direction;
  /// Empty when the direction holds; otherwise the offending labelling
  /// (Lab->Ext) or set (the other two directions).
  std::optional<std::variant<ArgSet, Labelling>> witness;

  bool holds() const noexcept { return !witness.has_value(); }
};

/// Checks the three directions by full enumeration of sets and labellings.
/// Each report carries the first witness in enumeration order.
inline std::vector<CorrespondenceReport> check_correspondence(const ExtensionSemantics& ext,
                                                              const LabellingSemantics& lab, SemanticsId sem) {
  const Framework& af = ext.framework();
  std::vector<CorrespondenceReport> out{{sem, Direction::LabToExt, std::nullopt},
                                        {sem, Direction::ExtToLab, std::nullopt},
                                        {sem, Direction::ExtFromLab, std::nullopt}};
  for (const auto& l : lab.members(sem))
    if (!ext.holds(sem, lab_to_ext(l))) {
      out[0].witness = l;
      break;
    }
  const std::uint64_t total = std::uint64_t{1} << af.size();
  for (std::uint64_t m = 0; m < total && (out[1].holds() || out[2].holds()); ++m) {
    const ArgSet s = ArgSet::from_mask(af.size(), m);
    const bool is_ext = ext.holds(sem, s);
    const bool is_lab = lab.holds(sem, ext_to_lab(af, s, ext.domain()));
    if (is_ext && !is_lab && out[1].holds())
      out[1].witness = s;
    if (is_lab && !is_ext && out[2].holds())
      out[2].witness = s;
  }
  return out;
}

inline std::vector<CorrespondenceReport> check_correspondence(const Framework& af, SemanticsId sem) {
  if (af.size() > max_powerset_universe)
    throw BudgetError("correspondence check over more than 30 arguments");
  const ExtensionSemantics ext(af);
  const LabellingSemantics lab(af);
  return check_correspondence(ext, lab, sem);
}

} // namespace argon
