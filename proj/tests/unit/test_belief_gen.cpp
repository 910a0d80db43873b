#include <gtest/gtest.h>

#include <set>

#include "goalxai/belief_gen.hpp"
#include "support/cleaner_world.hpp"

using namespace goalxai;

namespace {

GoalAF cleaner_sc() { return apply_successful_attacks(derive_goal_af(fixture::cleaner_world())); }

std::multiset<std::string> texts(const std::vector<Belief>& bs) {
  std::multiset<std::string> out;
  for (const auto& b : bs) out.insert(b.text());
  return out;
}

}  // namespace

TEST(Comps, CleanerWorld) { EXPECT_EQ(comps(cleaner_sc()), (IdSet{"g5"})); }

TEST(Comps, DisconnectedAndConnected) {
  const auto lonely = apply_successful_attacks(goal_af_from_conflicts({{"a", "a", 1}, {"b", "b", 1}}, {}));
  EXPECT_EQ(comps(lonely), (IdSet{"a", "b"}));
  const auto pair = apply_successful_attacks(
      goal_af_from_conflicts({{"a", "a", 1}, {"b", "b", Rational(1, 2)}}, {{{"a", "b"}, {Incompatibility::terminal}}}));
  EXPECT_TRUE(comps(pair).empty());
}

TEST(EvalPref, CleanerWorld) {
  EXPECT_EQ(eval_pref(cleaner_sc()), (IdPairSet{{"g3", "g2"}, {"g1", "g4"}, {"g3", "g4"}, {"g2", "g4"}}));
}

TEST(EvalPref, SymmetricOnlyAndSingleDirected) {
  const auto tie = apply_successful_attacks(
      goal_af_from_conflicts({{"a", "a", 1}, {"b", "b", 1}}, {{{"a", "b"}, {Incompatibility::terminal}}}));
  EXPECT_TRUE(eval_pref(tie).empty());
  const auto directed = apply_successful_attacks(
      goal_af_from_conflicts({{"a", "a", 1}, {"b", "b", Rational(1, 2)}}, {{{"a", "b"}, {Incompatibility::terminal}}}));
  EXPECT_EQ(eval_pref(directed), (IdPairSet{{"a", "b"}}));
}

TEST(GenerateBeliefs, CleanerWorldMatchesWorkedExample) {
  const auto sc = cleaner_sc();
  const auto beliefs = generate_beliefs(sc, select(sc));
  const std::multiset<std::string> expected = {
      "¬incomp(g5)",       "incompat(g3,g2,'s')", "incompat(g3,g4,'t')", "incompat(g1,g4,'t,r')",
      "incompat(g2,g4,'t,r')", "max_util(g1)",    "max_util(g3)",        "max_util(g5)",
      "¬max_util(g2)",     "¬max_util(g4)",       "pref(g3,g4)",         "¬pref(g4,g3)",
      "pref(g1,g4)",       "¬pref(g4,g1)",        "pref(g2,g4)",         "¬pref(g4,g2)",
      "pref(g3,g2)",       "¬pref(g2,g3)",
  };
  EXPECT_EQ(texts(beliefs), expected);
  for (std::size_t i = 0; i < beliefs.size(); ++i) EXPECT_EQ(beliefs[i].id, "b" + std::to_string(i + 1));
}

TEST(GenerateBeliefs, Empty) {
  const auto sc = apply_successful_attacks(goal_af_from_conflicts({}, {}));
  EXPECT_TRUE(generate_beliefs(sc, select(sc)).empty());
}

TEST(GenerateBeliefs, IsolatedPursuedGoal) {
  const auto sc = apply_successful_attacks(goal_af_from_conflicts({{"g", "g", Rational(1, 2)}}, {}));
  EXPECT_EQ(texts(generate_beliefs(sc, select(sc))), (std::multiset<std::string>{"¬incomp(g)", "max_util(g)"}));
}

TEST(GenerateBeliefs, EqualPreferenceGivesBothDirections) {
  const auto sc = apply_successful_attacks(
      goal_af_from_conflicts({{"a", "a", Rational(1, 2)}, {"b", "b", Rational(1, 2)}}, {{{"a", "b"}, {Incompatibility::resource}}}));
  const auto t = texts(generate_beliefs(sc, select(sc)));
  EXPECT_EQ(t.count("eq_pref(a,b)"), 1u);
  EXPECT_EQ(t.count("eq_pref(b,a)"), 1u);
  EXPECT_EQ(t.count("incompat(a,b,'r')"), 1u);
  EXPECT_EQ(t.count("incompat(b,a,'r')"), 1u);
}

TEST(GenerateBeliefs, CardinalityFormula) {
  const auto sc = cleaner_sc();
  const auto bs = generate_beliefs(sc, select(sc));
  const std::size_t eq_pairs = sc.attacks().size() - eval_pref(sc).size();
  EXPECT_EQ(bs.size(), comps(sc).size() + 2 * eval_pref(sc).size() + eq_pairs + sc.attacks().size() + sc.goals().size());
}

TEST(GenerateBeliefs, NoBeliefWithItsNegation) {
  const auto sc = cleaner_sc();
  const auto t = texts(generate_beliefs(sc, select(sc)));
  for (const auto& s : t) {
    if (s.rfind("¬", 0) == 0) EXPECT_EQ(t.count(s.substr(std::string("¬").size())), 0u) << s;
  }
  EXPECT_EQ(t.count("pref(g4,g3)"), 0u);
}

TEST(GenerateBeliefs, RequiresFilteredStage) {
  const auto raw = derive_goal_af(fixture::cleaner_world());
  EXPECT_THROW(generate_beliefs(raw, SelectionResult{}), InputError);
}
