#pragma once

#include "argon/error.hpp"
#include "argon/framework.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace argon::io {

enum class InputFormat { Apx, Tgf, AfDimacs };

inline std::optional<InputFormat> parse_format(std::string_view name) {
  if (name == "apx")
    return InputFormat::Apx;
  if (name == "tgf")
    return InputFormat::Tgf;
  if (name == "af" || name == "dimacs")
    return InputFormat::AfDimacs;
  return std::nullopt;
}

/// By file extension: .apx, .tgf, .af.
inline std::optional<InputFormat> detect_format(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos)
    return std::nullopt;
  return parse_format(path.substr(dot + 1));
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line = 1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view l = text.substr(0, nl);
    if (!l.empty() && l.back() == '\r')
      l.remove_suffix(1);
    f(line, l);
    if (nl == std::string_view::npos)
      break;
    text.remove_prefix(nl + 1);
    ++line;
  }
}

struct PendingAttack {
  std::string from, to;
  std::size_t line;
};

class Builder {
public:
  void add_argument(std::string_view name, std::size_t line) {
    if (!is_identifier(name))
      throw ParseError(line, "invalid argument name '" + std::string(name) + "'");
    if (!seen_.insert(std::string(name)).second)
      throw ParseError(line, "duplicate argument '" + std::string(name) + "'");
    names_.emplace_back(name);
  }

  void add_attack(std::string_view from, std::string_view to, std::size_t line) {
    for (auto n : {from, to})
      if (!is_identifier(n))
        throw ParseError(line, "invalid argument name '" + std::string(n) + "'");
    attacks_.push_back({std::string(from), std::string(to), line});
  }

  Framework build() {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (auto& a : attacks_) {
      for (const auto* n : {&a.from, &a.to})
        if (!seen_.count(*n))
          throw ParseError(a.line, "attack endpoint '" + *n + "' is not a declared argument");
      pairs.emplace_back(std::move(a.from), std::move(a.to));
    }
    return Framework::create(std::move(names_), pairs);
  }

private:
  std::vector<std::string> names_;
  std::unordered_set<std::string> seen_;
  std::vector<PendingAttack> attacks_;
};

inline std::size_t parse_index(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

} // namespace detail

/// `arg(x).` and `att(x,y).` statements; any amount of whitespace between
/// tokens, several statements per line, `%` starts a comment.
inline Framework parse_apx(std::string_view text) {
  detail::Builder b;
  detail::for_each_line(text, [&](std::size_t line, std::string_view l) {
    if (auto pct = l.find('%'); pct != std::string_view::npos)
      l = l.substr(0, pct);
    std::size_t i = 0;
    auto skip = [&] {
      while (i < l.size() && std::isspace(static_cast<unsigned char>(l[i])))
        ++i;
    };
    auto word = [&] {
      skip();
      const std::size_t from = i;
      while (i < l.size() && (std::isalnum(static_cast<unsigned char>(l[i])) || l[i] == '_'))
        ++i;
      if (i == from)
        throw ParseError(line, "expected a name");
      return l.substr(from, i - from);
    };
    auto expect = [&](char c) {
      skip();
      if (i >= l.size() || l[i] != c)
        throw ParseError(line, std::string("expected '") + c + "'");
      ++i;
    };
    for (skip(); i < l.size(); skip()) {
      const auto kind = word();
      if (kind != "arg" && kind != "att")
        throw ParseError(line, "expected arg(...). or att(...). statement");
      expect('(');
      const auto first = word();
      if (kind == "arg") {
        expect(')');
        b.add_argument(first, line);
      } else {
        expect(',');
        const auto second = word();
        expect(')');
        b.add_attack(first, second, line);
      }
      expect('.');
    }
  });
  return b.build();
}

/// One argument name per line, a `#` line, then one `from to` pair per line.
inline Framework parse_tgf(std::string_view text) {
  detail::Builder b;
  bool edges = false;
  detail::for_each_line(text, [&](std::size_t line, std::string_view l) {
    const auto tok = detail::split_ws(l);
    if (tok.empty())
      return;
    if (!edges && tok.size() == 1 && tok[0] == "#") {
      edges = true;
      return;
    }
    if (!edges) {
      if (tok.size() != 1)
        throw ParseError(line, "node line must hold exactly one name");
      b.add_argument(tok[0], line);
    } else {
      if (tok.size() != 2)
        throw ParseError(line, "edge line must hold exactly two names");
      b.add_attack(tok[0], tok[1], line);
    }
  });
  return b.build();
}

/// `p af <n>` header, then 1-based `i j` attack lines; `#` starts a comment
/// line. Arguments are named by their decimal index.
inline Framework parse_afdimacs(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Attack> attacks;
  detail::for_each_line(text, [&](std::size_t line, std::string_view l) {
    const auto tok = detail::split_ws(l);
    if (tok.empty() || tok[0].front() == '#')
      return;
    if (!n) {
      if (tok.size() != 3 || tok[0] != "p" || tok[1] != "af")
        throw ParseError(line, "expected header 'p af <n>'");
      n = detail::parse_index(tok[2], line);
      return;
    }
    if (tok.size() != 2)
      throw ParseError(line, "attack line must hold exactly two indices");
    const std::size_t i = detail::parse_index(tok[0], line);
    const std::size_t j = detail::parse_index(tok[1], line);
    if (i < 1 || i > *n || j < 1 || j > *n)
      throw ParseError(line, "argument index out of range 1.." + std::to_string(*n));
    attacks.push_back({i - 1, j - 1});
  });
  if (!n)
    throw ParseError(1, "missing header 'p af <n>'");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= *n; ++i)
    names.push_back(std::to_string(i));
  return Framework::from_indices(std::move(names), std::move(attacks));
}

inline Framework parse(std::string_view text, InputFormat format) {
  switch (format) {
  case InputFormat::Apx: return parse_apx(text);
  case InputFormat::Tgf: return parse_tgf(text);
  case InputFormat::AfDimacs: return parse_afdimacs(text);
  }
  throw std::invalid_argument("unknown input format");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace argon::io
