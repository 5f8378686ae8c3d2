#pragma once

#include "argon/framework.hpp"
#include "argon/labelling.hpp"

#include <optional>
#include <string>

namespace argon::io {

namespace detail {

inline std::string name_list(const Framework& af, const ArgSet& s, bool quoted) {
  std::string out;
  bool first = true;
  for (auto a : s) {
    if (!first)
      out += ',';
    first = false;
    if (quoted)
      out += '"' + af.name(a) + '"';
    else
      out += af.name(a);
  }
  return out;
}

} // namespace detail

/// `[A,C]`, names in index order.
inline std::string serialize_extension(const Framework& af, const ArgSet& e) {
  return "[" + detail::name_list(af, e, false) + "]";
}

/// `NO` when there is no extension.
inline std::string serialize_extension(const Framework& af, const std::optional<ArgSet>& e) {
  return e ? serialize_extension(af, *e) : std::string("NO");
}

/// `{"in":["A","C"],"out":["B","D"],"undec":[]}`
inline std::string serialize_labelling(const Framework& af, const Labelling& l) {
  return "{\"in\":[" + detail::name_list(af, l.in_set(), true) + "],\"out\":[" +
         detail::name_list(af, l.out_set(), true) + "],\"undec\":[" +
         detail::name_list(af, l.undec_set(), true) + "]}";
}

inline std::string to_apx(const Framework& af) {
  std::string out;
  for (const auto& n : af.names())
    out += "arg(" + n + ").\n";
  for (const auto& att : af.attacks())
    out += "att(" + af.name(att.from) + "," + af.name(att.to) + ").\n";
  return out;
}

inline std::string to_tgf(const Framework& af) {
  std::string out;
  for (const auto& n : af.names())
    out += n + "\n";
  out += "#\n";
  for (const auto& att : af.attacks())
    out += af.name(att.from) + " " + af.name(att.to) + "\n";
  return out;
}

/// Arguments are written by 1-based position; names are not preserved.
inline std::string to_afdimacs(const Framework& af) {
  std::string out = "p af " + std::to_string(af.size()) + "\n";
  for (const auto& att : af.attacks())
    out += std::to_string(att.from + 1) + " " + std::to_string(att.to + 1) + "\n";
  return out;
}

} // namespace argon::io
