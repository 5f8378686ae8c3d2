#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace argon {

enum class SemanticsId {
  ConflictFree, // CF
  Admissible,   // AD
  Complete,     // CO
  Grounded,     // GR
  Preferred,    // PR
  Stable,       // ST
  SemiStable,   // SST
  Stage,        // STG
  IdealSet,     // IDS (quasi-ideal for labellings)
  Ideal,        // ID
};

inline constexpr std::array<SemanticsId, 10> all_semantics{
    SemanticsId::ConflictFree, SemanticsId::Admissible, SemanticsId::Complete, SemanticsId::Grounded,
    SemanticsId::Preferred,    SemanticsId::Stable,     SemanticsId::SemiStable, SemanticsId::Stage,
    SemanticsId::IdealSet,     SemanticsId::Ideal,
};

inline constexpr std::string_view abbreviation(SemanticsId s) {
  switch (s) {
  case SemanticsId::ConflictFree: return "CF";
  case SemanticsId::Admissible: return "AD";
  case SemanticsId::Complete: return "CO";
  case SemanticsId::Grounded: return "GR";
  case SemanticsId::Preferred: return "PR";
  case SemanticsId::Stable: return "ST";
  case SemanticsId::SemiStable: return "SST";
  case SemanticsId::Stage: return "STG";
  case SemanticsId::IdealSet: return "IDS";
  case SemanticsId::Ideal: return "ID";
  }
  return "?";
}

/// CamelCase name used in property identifiers, e.g. "SemiStable".
inline constexpr std::string_view display_name(SemanticsId s) {
  switch (s) {
  case SemanticsId::ConflictFree: return "ConflictFree";
  case SemanticsId::Admissible: return "Admissible";
  case SemanticsId::Complete: return "Complete";
  case SemanticsId::Grounded: return "Grounded";
  case SemanticsId::Preferred: return "Preferred";
  case SemanticsId::Stable: return "Stable";
  case SemanticsId::SemiStable: return "SemiStable";
  case SemanticsId::Stage: return "Stage";
  case SemanticsId::IdealSet: return "IdealSet";
  case SemanticsId::Ideal: return "Ideal";
  }
  return "?";
}

inline std::optional<SemanticsId> parse_semantics(std::string_view text) {
  for (auto s : all_semantics)
    if (abbreviation(s) == text)
      return s;
  return std::nullopt;
}

/// Semantics whose extensions (labellings) may fail to exist.
inline constexpr bool may_be_empty(SemanticsId s) { return s == SemanticsId::Stable; }

} // namespace argon
