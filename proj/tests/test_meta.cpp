#include "argon/meta/enumerate.hpp"
#include "argon/meta/registry.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace argon;
using namespace argon::meta;

namespace {

const Property& prop(std::string_view id) {
  const Property* p = find_property(id);
  if (!p)
    throw std::runtime_error("missing property " + std::string(id));
  return *p;
}

CheckOptions quick(std::size_t max_n) {
  CheckOptions o;
  o.max_n = max_n;
  o.threads = 1;
  return o;
}

} // namespace

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_frameworks(0, false).size(), 1u);
  EXPECT_EQ(enumerate_frameworks(1, false).size(), 2u);
  EXPECT_EQ(enumerate_frameworks(2, false).size(), 16u);
  EXPECT_EQ(framework_codes(3).size(), 512u);
}

TEST(Enumerate, DedupCountsMatchDigraphsWithLoops) {
  // Unlabelled directed graphs with loops allowed on n nodes.
  const std::size_t expected[] = {1, 2, 10, 104, 3044};
  for (std::size_t n = 0; n <= 4; ++n)
    EXPECT_EQ(framework_codes(n, {true, false}).size(), expected[n]) << n;
}

TEST(Enumerate, CodeOrderAndRoundTrip) {
  const auto codes = framework_codes(3);
  EXPECT_TRUE(std::is_sorted(codes.begin(), codes.end()));
  for (auto c : codes)
    ASSERT_EQ(code_of(framework_from_code(3, c)), c);
  // Bit (0,0) is the most significant.
  EXPECT_EQ(code_of(fixtures::self()), 1u);
  EXPECT_EQ(code_bit(3, 0, 0), std::uint64_t{1} << 8);
  EXPECT_EQ(framework_from_code(3, code_bit(3, 0, 1) | code_bit(3, 1, 2)), fixtures::chain());
}

TEST(Enumerate, CanonicalRepresentativesAreMinimal) {
  const auto reps = framework_codes(3, {true, false});
  const std::set<std::uint64_t> rep_set(reps.begin(), reps.end());
  std::set<std::uint64_t> canon;
  for (std::uint64_t c = 0; c < 512; ++c) {
    const auto k = canonical_code(3, c);
    ASSERT_LE(k, c);
    canon.insert(k);
  }
  EXPECT_EQ(canon, rep_set);
}

TEST(Enumerate, PermutationApply) {
  const PermutationTable t(3);
  EXPECT_EQ(t.size(), 5u);
  const std::uint64_t chain = code_of(fixtures::chain());
  for (std::size_t k = 0; k < t.size(); ++k) {
    const auto& p = t.permutation(k);
    const std::uint64_t img = t.apply(k, chain);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        ASSERT_EQ((img & code_bit(3, i, j)) != 0, (chain & code_bit(3, p[i], p[j])) != 0);
  }
}

TEST(Enumerate, BudgetGuard) {
  EXPECT_THROW(framework_codes(6), BudgetError);
  EXPECT_THROW(framework_codes(9, {false, true}), BudgetError);
  CheckOptions o = quick(5);
  EXPECT_THROW(check_property(prop("GroundedExtUnique"), o), BudgetError);
}

TEST(Registry, IdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& p : builtin_properties())
    EXPECT_TRUE(ids.insert(p.id).second) << p.id;
}

TEST(Registry, ContainsRequiredProperties) {
  for (auto id : {"DefendsViaAttackSets", "CharacteristicMonotone", "CharacteristicLeastFixpoint",
                  "CharacteristicGreatestFixpoint", "LeastUnique", "GreatestUnique", "MinimalCollapse",
                  "MaximalCollapse", "NoSelfAttackInConflictFree", "CharacteristicPreservesConflictFree",
                  "AdmissibleIffSubsetOfCharacteristic", "CompleteIffConflictFreeFixpoint", "CompleteExtExists",
                  "PreferredExtExists", "GroundedExtExists", "AdmissibleDirectedComplete", "PreferredCompletion",
                  "AdmissibleLabImpliesConflictFreeLab", "CompleteLabCharacterisation",
                  "CompleteLabDeterminedByInSet", "CompleteLabDeterminedByOutSet",
                  "GroundedLabMinimalInIffMinimalOut", "PreferredLabMaximalInIffMaximalOut",
                  "GroundedIsLeastComplete", "GroundedLabIsLeastComplete", "ExtensionFundamental",
                  "NaiveLabellingFundamental", "LabellingFundamental", "RestrictionCoherenceExt",
                  "RestrictionCoherenceLab", "StageLabImpliesStableLab", "PreferredLabToExtConverse"})
    EXPECT_NE(find_property(id), nullptr) << id;
  for (const auto& [from, to] : meta::detail::inclusion_edges)
    for (auto kind : {"Ext", "Lab"}) {
      const std::string a(display_name(from)), b(display_name(to));
      EXPECT_NE(find_property(a + kind + "Implies" + b + kind), nullptr);
      EXPECT_NE(find_property(b + kind + "Implies" + a + kind), nullptr);
    }
}

TEST(Registry, StatementsAndSignatures) {
  const auto& p = prop("NaiveLabellingFundamental");
  EXPECT_EQ(p.signature(), "framework L:labelling a:argument");
  EXPECT_FALSE(p.statement.empty());
}

TEST(Check, NaiveLabellingFundamentalCounterexample) {
  const auto& p = prop("NaiveLabellingFundamental");
  const auto v = check_property(p, quick(3));
  ASSERT_TRUE(v.refuted());
  const auto& c = v.counterexample();
  EXPECT_EQ(c.af, fixtures::chain());
  EXPECT_EQ(std::get<Labelling>(c.binding("L")), fixtures::lab("IUU"));
  EXPECT_EQ(std::get<Argument>(c.binding("a")).index, 2u);
  EXPECT_TRUE(refutes(p, c));
  EXPECT_EQ(format_verdict(p, v), "PROPERTY NaiveLabellingFundamental REFUTED\n"
                                  "arg(A).\narg(B).\narg(C).\natt(A,B).\natt(B,C).\n"
                                  "% L = {\"in\":[\"A\"],\"out\":[],\"undec\":[\"B\",\"C\"]}\n"
                                  "% a = C\n");
}

TEST(Check, LabellingFundamentalVerified) {
  const auto v = check_property(prop("LabellingFundamental"), quick(3));
  ASSERT_TRUE(v.verified());
  EXPECT_EQ(v.as_verified().max_n, 3u);
  EXPECT_EQ(v.as_verified().frameworks, 1u + 2u + 16u + 512u);
  EXPECT_EQ(format_verdict(prop("LabellingFundamental"), v), "PROPERTY LabellingFundamental VERIFIED n<=3 frameworks=531\n");
}

TEST(Check, StageLabellingNeedNotBeStable) {
  const auto& p = prop("StageLabImpliesStableLab");
  const auto v = check_property(p, quick(3));
  ASSERT_TRUE(v.refuted());
  EXPECT_TRUE(refutes(p, v.counterexample()));
  EXPECT_LE(v.counterexample().af.size(), 3u);
}

TEST(Check, PreferredProseVariantIsFalse) {
  const auto& p = prop("PreferredLabMaximalInIffMinimalOut");
  EXPECT_EQ(p.expectation, Expectation::Refuted);
  const auto v = check_property(p, quick(3));
  ASSERT_TRUE(v.refuted());
  EXPECT_TRUE(refutes(p, v.counterexample()));
  EXPECT_TRUE(check_property(prop("PreferredLabMaximalInIffMaximalOut"), quick(3)).verified());
}

TEST(Check, EveryPropertyMeetsExpectationUpToThree) {
  std::vector<const Property*> props;
  for (const auto& p : builtin_properties())
    props.push_back(&p);
  const auto verdicts = check_properties(props, quick(3));
  for (std::size_t i = 0; i < props.size(); ++i) {
    EXPECT_TRUE(meets_expectation(*props[i], verdicts[i])) << format_verdict(*props[i], verdicts[i]);
    if (verdicts[i].refuted()) {
      EXPECT_TRUE(refutes(*props[i], verdicts[i].counterexample())) << props[i]->id;
    }
  }
}

TEST(Check, ParallelMatchesSequential) {
  std::vector<const Property*> props{&prop("NaiveLabellingFundamental"), &prop("StageLabImpliesStableLab"),
                                     &prop("PreferredLabToExtConverse"), &prop("ExtensionFundamental")};
  CheckOptions par = quick(3);
  par.threads = 4;
  par.minimise = false;
  CheckOptions seq = quick(3);
  seq.minimise = false;
  const auto a = check_properties(props, seq);
  const auto b = check_properties(props, par);
  for (std::size_t i = 0; i < props.size(); ++i)
    EXPECT_EQ(format_verdict(*props[i], a[i]), format_verdict(*props[i], b[i]));
}

TEST(Check, MinimiserShrinksCounterexamples) {
  // A refutation found on a padded framework shrinks back to three arguments.
  const auto& p = prop("NaiveLabellingFundamental");
  const auto big = Framework::from_indices(default_names(5), {{0, 1}, {1, 2}, {3, 4}, {4, 3}, {2, 3}});
  const auto w = find_witness(p, big);
  ASSERT_TRUE(w);
  const auto small = minimise(p, make_counterexample(p, big, *w));
  EXPECT_LE(small.af.size(), 3u);
  EXPECT_TRUE(refutes(p, small));
}

TEST(Check, SampledVerdictRecordsSeed) {
  CheckOptions o = quick(5);
  o.samples = 50;
  o.seed = 99;
  const auto& p = prop("GroundedExtUnique");
  const auto v = check_property(p, o);
  ASSERT_TRUE(v.verified());
  EXPECT_TRUE(v.as_verified().sampled);
  EXPECT_EQ(v.as_verified().seed, 99u);
  EXPECT_NE(format_verdict(p, v).find("seed=99"), std::string::npos);
}

TEST(Check, DedupAtFive) {
  CheckOptions o = quick(5);
  o.dedup = true;
  const auto v = check_property(prop("GroundedExtUnique"), o);
  ASSERT_TRUE(v.verified());
  EXPECT_EQ(v.as_verified().frameworks, 1u + 2u + 10u + 104u + 3044u + 291968u);
}
