#include <gtest/gtest.h>

#include "goalxai/goal_graph.hpp"
#include "support/cleaner_world.hpp"
#include "support/oracle.hpp"

using namespace goalxai;

namespace {

const KindSet kS{Incompatibility::superfluity};
const KindSet kT{Incompatibility::terminal};
const KindSet kTR{Incompatibility::terminal, Incompatibility::resource};

}  // namespace

TEST(DeriveGoalAF, CleanerWorldConflictPairs) {
  const auto raw = derive_goal_af(fixture::cleaner_world());
  EXPECT_EQ(raw.stage(), GoalAF::Stage::raw);
  EXPECT_EQ(raw.conflict_pairs(), (IdPairSet{{"g1", "g4"}, {"g2", "g3"}, {"g2", "g4"}, {"g3", "g4"}}));
  EXPECT_EQ(raw.attacks().size(), 8u);
  EXPECT_FALSE(raw.attacks("g1", "g5"));  // (A,F) is unattacked
}

TEST(DeriveGoalAF, MatchesBruteForceDefinition) {
  const auto gaf = fixture::cleaner_world();
  const auto expected = oracle::goal_attacks(gaf);
  const auto raw = derive_goal_af(gaf);
  ASSERT_EQ(raw.incomp().size(), expected.size());
  for (const auto& [pair, kinds] : expected) EXPECT_EQ(raw.incompatibility(pair.first, pair.second), kinds);
}

TEST(DeriveGoalAF, IncompatibilityLabels) {
  const auto raw = derive_goal_af(fixture::cleaner_world());
  EXPECT_EQ(raw.incompatibility("g1", "g4"), kTR);
  EXPECT_EQ(raw.incompatibility("g2", "g4"), kTR);
  EXPECT_EQ(raw.incompatibility("g3", "g2"), kS);
  EXPECT_EQ(raw.incompatibility("g3", "g4"), kT);
  EXPECT_THROW(raw.incompatibility("g1", "g5"), InputError);
}

TEST(DeriveGoalAF, NoAttacks) {
  auto gaf = fixture::cleaner_world();
  gaf.attacks.clear();
  EXPECT_TRUE(derive_goal_af(gaf).attacks().empty());
}

TEST(DeriveGoalAF, PlanlessGoalHasNoAttacks) {
  auto gaf = fixture::cleaner_world();
  gaf.goals.push_back({"g6", "charge", Rational(1, 2)});
  const auto raw = derive_goal_af(gaf);
  for (const auto& [from, to] : raw.attacks()) {
    EXPECT_NE(from, "g6");
    EXPECT_NE(to, "g6");
  }
}

TEST(DeriveGoalAF, RawStageIsSymmetric) {
  const auto raw = derive_goal_af(fixture::cleaner_world());
  for (const auto& [from, to] : raw.attacks()) {
    EXPECT_TRUE(raw.attacks(to, from));
    EXPECT_EQ(raw.incompatibility(from, to), raw.incompatibility(to, from));
  }
}

TEST(DeriveGoalAF, InvalidInputThrows) {
  auto gaf = fixture::cleaner_world();
  gaf.attacks[{"A", "Q"}] = kT;
  EXPECT_THROW(derive_goal_af(gaf), ValidationError);
}

TEST(SuccessfulAttacks, CleanerWorld) {
  const auto sc = apply_successful_attacks(derive_goal_af(fixture::cleaner_world()));
  EXPECT_EQ(sc.stage(), GoalAF::Stage::successful);
  EXPECT_EQ(sc.attacks(), (IdPairSet{{"g3", "g2"}, {"g1", "g4"}, {"g3", "g4"}, {"g2", "g4"}}));
  EXPECT_EQ(sc.incompatibility("g1", "g4"), kTR);
}

TEST(SuccessfulAttacks, FixturePreferenceOrderings) {
  const auto gaf = fixture::cleaner_world();
  auto pref = [&](const char* g) { return gaf.find_goal(g)->preference; };
  EXPECT_GT(pref("g3"), pref("g2"));
  EXPECT_GT(pref("g1"), pref("g4"));
  EXPECT_GT(pref("g2"), pref("g4"));
  EXPECT_GT(pref("g3"), pref("g4"));
}

TEST(SuccessfulAttacks, EqualPreferenceKeepsBothDirections) {
  const auto raw = goal_af_from_conflicts({{"a", "a", Rational(1, 2)}, {"b", "b", Rational(1, 2)}}, {{{"a", "b"}, kT}});
  const auto sc = apply_successful_attacks(raw);
  EXPECT_TRUE(sc.attacks("a", "b"));
  EXPECT_TRUE(sc.attacks("b", "a"));
}

TEST(SuccessfulAttacks, FilteringKeepsConflictPairs) {
  const auto raw = derive_goal_af(fixture::cleaner_world());
  const auto sc = apply_successful_attacks(raw);
  for (const auto& p : sc.attacks()) EXPECT_TRUE(raw.attacks(p.first, p.second));
  EXPECT_EQ(sc.conflict_pairs(), raw.conflict_pairs());
}

TEST(SuccessfulAttacks, InvariantUnderMonotoneRescaling) {
  auto gaf = fixture::cleaner_world();
  const auto base = apply_successful_attacks(derive_goal_af(gaf)).attacks();
  for (auto& g : gaf.goals) g.preference = g.preference * g.preference / 2;  // increasing on (0, 1]
  EXPECT_EQ(apply_successful_attacks(derive_goal_af(gaf)).attacks(), base);
}

TEST(SuccessfulAttacks, RejectsFilteredInput) {
  const auto sc = apply_successful_attacks(derive_goal_af(fixture::cleaner_world()));
  EXPECT_THROW(apply_successful_attacks(sc), InputError);
}

TEST(DirectPath, ConflictsAreSymmetrisedAndMerged) {
  const auto raw = goal_af_from_conflicts({{"a", "a", Rational(1)}, {"b", "b", Rational(1, 2)}},
                                          {{{"a", "b"}, kT}, {{"b", "a"}, kS}});
  EXPECT_EQ(raw.incompatibility("a", "b"), kT | kS);
  EXPECT_EQ(raw.incompatibility("b", "a"), kT | kS);
  EXPECT_THROW(goal_af_from_conflicts({{"a", "a", Rational(1)}}, {{{"a", "z"}, kT}}), InputError);
}
