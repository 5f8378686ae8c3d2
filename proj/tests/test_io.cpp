#include "argon/io/parse.hpp"
#include "argon/io/serialize.hpp"
#include "argon/meta/enumerate.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace argon;
using namespace argon::io;
using fixtures::lab;

namespace {

std::size_t error_line(const std::string& text, InputFormat fmt) {
  try {
    parse(text, fmt);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

/// Same attack structure under names "1".."n".
Framework index_named(const Framework& af) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= af.size(); ++i)
    names.push_back(std::to_string(i));
  return Framework::from_indices(names, af.attacks());
}

} // namespace

TEST(Format, Names) {
  EXPECT_EQ(parse_format("apx"), InputFormat::Apx);
  EXPECT_EQ(parse_format("tgf"), InputFormat::Tgf);
  EXPECT_EQ(parse_format("af"), InputFormat::AfDimacs);
  EXPECT_FALSE(parse_format("xml"));
  EXPECT_EQ(detect_format("dir.v2/chain.apx"), InputFormat::Apx);
  EXPECT_EQ(detect_format("x.tgf"), InputFormat::Tgf);
  EXPECT_EQ(detect_format("x.af"), InputFormat::AfDimacs);
  EXPECT_FALSE(detect_format("noext"));
}

TEST(Apx, Chain) {
  const auto af = parse_apx("arg(a). arg(b). arg(c). att(a,b). att(b,c).");
  EXPECT_EQ(af, new_framework({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
}

TEST(Apx, WhitespaceAndComments) {
  const auto af = parse_apx("% header\n  arg( a ) .\narg(b).%trailing\n att ( a , b ).\n\n");
  EXPECT_EQ(af, new_framework({"a", "b"}, {{"a", "b"}}));
}

TEST(Apx, Errors) {
  EXPECT_EQ(error_line("arg(a).\natt(a,b).\n", InputFormat::Apx), 2u);
  EXPECT_EQ(error_line("arg(a).\narg(a).\n", InputFormat::Apx), 2u);
  EXPECT_EQ(error_line("arg(a).\n\narg(b)\n", InputFormat::Apx), 3u);
  EXPECT_EQ(error_line("arg(a b).\n", InputFormat::Apx), 1u);
  EXPECT_EQ(error_line("node(a).\n", InputFormat::Apx), 1u);
  EXPECT_EQ(error_line("arg(a-b).\n", InputFormat::Apx), 1u);
}

TEST(Tgf, TwoCycle) {
  const auto af = parse_tgf("1\n2\n#\n1 2\n2 1\n");
  EXPECT_EQ(af, new_framework({"1", "2"}, {{"1", "2"}, {"2", "1"}}));
}

TEST(Tgf, Errors) {
  EXPECT_EQ(error_line("1\n#\n1 2\n", InputFormat::Tgf), 3u);
  EXPECT_EQ(error_line("1 x\n#\n", InputFormat::Tgf), 1u);
  EXPECT_EQ(error_line("1\n2\n#\n1\n", InputFormat::Tgf), 4u);
  EXPECT_EQ(error_line("1\n1\n", InputFormat::Tgf), 2u);
}

TEST(AfDimacs, Empty) { EXPECT_EQ(parse_afdimacs("p af 0\n"), fixtures::empty()); }

TEST(AfDimacs, ChainWithComments) {
  const auto af = parse_afdimacs("# comment\np af 3\n1 2\n# more\n2 3\n");
  EXPECT_EQ(af, new_framework({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}));
}

TEST(AfDimacs, Errors) {
  EXPECT_EQ(error_line("1 2\n", InputFormat::AfDimacs), 1u);
  EXPECT_EQ(error_line("p af 2\n1 3\n", InputFormat::AfDimacs), 2u);
  EXPECT_EQ(error_line("p af 2\n0 1\n", InputFormat::AfDimacs), 2u);
  EXPECT_EQ(error_line("p af 2\n1 x\n", InputFormat::AfDimacs), 2u);
  EXPECT_EQ(error_line("p af 2\n1 2 3\n", InputFormat::AfDimacs), 2u);
  EXPECT_EQ(error_line("# nothing\n", InputFormat::AfDimacs), 1u);
}

TEST(Serialize, Extension) {
  const auto chain = fixtures::chain();
  EXPECT_EQ(serialize_extension(chain, set_of(chain, {"C", "A"})), "[A,C]");
  EXPECT_EQ(serialize_extension(chain, chain.empty_set()), "[]");
  EXPECT_EQ(serialize_extension(chain, std::optional<ArgSet>{}), "NO");
}

TEST(Serialize, Labelling) {
  EXPECT_EQ(serialize_labelling(fixtures::simple4(), lab("IOIO")), R"({"in":["A","C"],"out":["B","D"],"undec":[]})");
  EXPECT_EQ(serialize_labelling(fixtures::chain(), lab("IUU")), R"({"in":["A"],"out":[],"undec":["B","C"]})");
}

TEST(Serialize, Formats) {
  const auto chain = fixtures::chain();
  EXPECT_EQ(to_apx(chain), "arg(A).\narg(B).\narg(C).\natt(A,B).\natt(B,C).\n");
  EXPECT_EQ(to_tgf(chain), "A\nB\nC\n#\nA B\nB C\n");
  EXPECT_EQ(to_afdimacs(chain), "p af 3\n1 2\n2 3\n");
}

TEST(RoundTrip, Fixtures) {
  for (const auto& [name, af] : fixtures::all()) {
    EXPECT_EQ(parse_apx(to_apx(af)), af) << name;
    EXPECT_EQ(parse_tgf(to_tgf(af)), af) << name;
    EXPECT_EQ(parse_afdimacs(to_afdimacs(af)), index_named(af)) << name;
  }
}

TEST(RoundTrip, RandomFrameworks) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(t % 11);
    std::bernoulli_distribution edge(0.3);
    std::vector<Attack> attacks;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (edge(rng))
          attacks.push_back({i, j});
    const auto af = Framework::from_indices(meta::default_names(n), attacks);
    ASSERT_EQ(parse_apx(to_apx(af)), af);
    ASSERT_EQ(parse_tgf(to_tgf(af)), af);
    ASSERT_EQ(parse_afdimacs(to_afdimacs(af)), index_named(af));
  }
}
