#include "argon/extensions.hpp"
#include "argon/meta/enumerate.hpp"
#include "argon/orders.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace argon;

namespace {

ArgSet S(const Framework& af, std::initializer_list<std::string_view> names) { return set_of(af, names); }

ListFamily<ArgSet> family(const Framework& af, SemanticsId sem) { return ListFamily<ArgSet>(enumerate_extensions(af, sem)); }

auto all_subsets(std::size_t n) {
  return PowersetFamily(n, [](const ArgSet&) { return true; });
}

auto F(const Framework& af) {
  return [&af](const ArgSet& s) { return characteristic(af, s); };
}

} // namespace

TEST(Orders, Minimal) {
  const auto chain = fixtures::chain();
  const auto cyc = fixtures::cycle3();
  EXPECT_TRUE(is_minimal(family(chain, SemanticsId::Complete), S(chain, {"A", "C"})));
  EXPECT_TRUE(is_minimal(all_subsets(3), ArgSet(3)));
  EXPECT_FALSE(is_minimal(family(cyc, SemanticsId::ConflictFree), S(cyc, {"A"})));
}

TEST(Orders, Maximal) {
  const auto cyc = fixtures::cycle3();
  const auto s4 = fixtures::simple4();
  EXPECT_TRUE(is_maximal(family(cyc, SemanticsId::ConflictFree), S(cyc, {"A"})));
  EXPECT_TRUE(is_maximal(all_subsets(3), ArgSet::full(3)));
  EXPECT_FALSE(is_maximal(family(s4, SemanticsId::Complete), s4.empty_set()));
}

TEST(Orders, Least) {
  const auto chain = fixtures::chain();
  const auto cyc = fixtures::cycle3();
  EXPECT_TRUE(is_least(family(chain, SemanticsId::Complete), S(chain, {"A", "C"})));
  EXPECT_TRUE(is_least(all_subsets(3), ArgSet(3)));
  EXPECT_FALSE(is_least(family(cyc, SemanticsId::Stage), S(cyc, {"A"})));
}

TEST(Orders, Greatest) {
  const auto chain = fixtures::chain();
  const auto cyc = fixtures::cycle3();
  const auto fl = fixtures::floating();
  EXPECT_TRUE(is_greatest(family(chain, SemanticsId::Complete), S(chain, {"A", "C"})));
  EXPECT_TRUE(is_greatest(all_subsets(3), ArgSet::full(3)));
  EXPECT_FALSE(is_greatest(family(cyc, SemanticsId::Stage), S(cyc, {"A"})));
  EXPECT_FALSE(is_greatest(family(fl, SemanticsId::Admissible), S(fl, {"A", "D"})));
}

TEST(Orders, NonMemberIsNeverExtremal) {
  const auto chain = fixtures::chain();
  const auto co = family(chain, SemanticsId::Complete);
  EXPECT_FALSE(is_minimal(co, chain.empty_set()));
  EXPECT_FALSE(is_least(co, chain.empty_set()));
}

TEST(Orders, Projection) {
  // Among the stage extensions of the 3-cycle every range has two members,
  // none contained in another, so each is maximal under range.
  const auto cyc = fixtures::cycle3();
  auto range = [&](const ArgSet& s) { return range_of(cyc, s); };
  for (const auto& e : enumerate_extensions(cyc, SemanticsId::Stage))
    EXPECT_TRUE(is_maximal(family(cyc, SemanticsId::ConflictFree), e, range));
  EXPECT_FALSE(is_maximal(family(cyc, SemanticsId::ConflictFree), cyc.empty_set(), range));
}

TEST(Orders, RelativisedToDomain) {
  // {A} and {A,B} agree on D = {A}, so inside D neither is strictly above
  // the other.
  const ListFamily<ArgSet> fam({ArgSet::of(2, {0}), ArgSet::of(2, {0, 1})});
  const ArgSet d = ArgSet::of(2, {0});
  EXPECT_TRUE(is_maximal(fam, ArgSet::of(2, {0}), Identity{}, d));
  EXPECT_FALSE(is_maximal(fam, ArgSet::of(2, {0})));
  EXPECT_TRUE(is_least(fam, ArgSet::of(2, {0, 1}), Identity{}, d));
}

TEST(Orders, Monotone) {
  const auto chain = fixtures::chain();
  const auto m = is_monotone(3, F(chain));
  EXPECT_TRUE(m.holds);
  EXPECT_TRUE(m.exhaustive());
  EXPECT_TRUE(is_monotone(5, [](const ArgSet& s) { return s; }));
  EXPECT_FALSE(is_monotone(1, [](const ArgSet& s) { return s.complement(); }));
}

TEST(Orders, MonotoneSampledAboveTwelve) {
  const auto m = is_monotone(20, [](const ArgSet& s) { return s; });
  EXPECT_TRUE(m.holds);
  EXPECT_FALSE(m.exhaustive());
  EXPECT_FALSE(is_monotone(20, [](const ArgSet& s) { return s.complement(); }).holds);
}

TEST(Orders, Fixpoint) {
  const auto chain = fixtures::chain();
  EXPECT_TRUE(is_fixpoint(F(chain), S(chain, {"A", "C"})));
  EXPECT_TRUE(is_fixpoint([](const ArgSet& s) { return s; }, S(chain, {"B"})));
  EXPECT_FALSE(is_fixpoint(F(chain), chain.empty_set()));
}

TEST(Orders, LeastFixpoint) {
  const auto chain = fixtures::chain();
  const auto cyc = fixtures::cycle3();
  EXPECT_EQ(least_fixpoint(3, F(chain)), S(chain, {"A", "C"}));
  EXPECT_EQ(least_fixpoint(3, [](const ArgSet& s) { return s; }), ArgSet(3));
  EXPECT_EQ(least_fixpoint(3, F(cyc)), ArgSet(3));
}

TEST(Orders, GreatestFixpoint) {
  const auto chain = fixtures::chain();
  const auto self = fixtures::self();
  EXPECT_EQ(greatest_fixpoint(3, [](const ArgSet& s) { return s; }), ArgSet::full(3));
  EXPECT_EQ(greatest_fixpoint(3, F(chain)), S(chain, {"A", "C"}));
  // A's only attacker is A itself, which {A} attacks, so F({A}) = {A}.
  EXPECT_EQ(characteristic(self, self.universe()), self.universe());
  EXPECT_EQ(greatest_fixpoint(1, F(self)), self.universe());
  EXPECT_EQ(least_fixpoint(1, F(self)), self.empty_set());
}

TEST(Orders, FixpointRejectsNonMonotone) {
  EXPECT_THROW(least_fixpoint(2, [](const ArgSet& s) { return s.complement(); }), NotMonotoneError);
  EXPECT_THROW(greatest_fixpoint(2, [](const ArgSet& s) { return s.complement(); }), NotMonotoneError);
}

TEST(Orders, FixpointsAreLeastAndGreatestByBruteForce) {
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& af : meta::enumerate_frameworks(n, false)) {
      const auto fixpoints = PowersetFamily(n, [&](const ArgSet& s) { return is_fixpoint(F(af), s); });
      const ArgSet lfp = least_fixpoint(n, F(af));
      const ArgSet gfp = greatest_fixpoint(n, F(af));
      ASSERT_TRUE(is_least(fixpoints, lfp));
      ASSERT_TRUE(is_greatest(fixpoints, gfp));
      ASSERT_TRUE(lfp.subset_of(gfp));
    }
}

TEST(Orders, DirectedComplete) {
  const auto chain = fixtures::chain();
  EXPECT_TRUE(is_directed_complete(3, enumerate_extensions(chain, SemanticsId::Admissible)));
  EXPECT_TRUE(is_directed_complete(3, all_subsets(3).members()));
  // {A} and {B} have no upper bound in the family, so they do not form a
  // directed subfamily and nothing forces {A,B} in.
  EXPECT_TRUE(is_directed_complete(2, {ArgSet(2), ArgSet::of(2, {0}), ArgSet::of(2, {1})}));
  // The empty subfamily is directed; its union ∅ must be a member.
  EXPECT_FALSE(is_directed_complete(2, {ArgSet::of(2, {0}), ArgSet::of(2, {1})}));
  EXPECT_FALSE(is_directed_complete(6, {ArgSet::of(6, {0})}));
  EXPECT_TRUE(is_directed_complete(6, {ArgSet(6), ArgSet::of(6, {0})}));
}

TEST(Orders, Select) {
  const ListFamily<ArgSet> fam({ArgSet::of(2, {0}), ArgSet::of(2, {0, 1}), ArgSet::of(2, {1})});
  const auto mins = select(fam, [](const auto& f, const ArgSet& x) { return is_minimal(f, x); });
  EXPECT_EQ(mins, (std::vector<ArgSet>{ArgSet::of(2, {0}), ArgSet::of(2, {1})}));
}
