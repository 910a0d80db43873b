#pragma once

// Goal-level framework: goals attack each other when every pair of their
// plans conflicts; preferences then break the symmetry of those attacks.

#include <map>
#include <string>
#include <vector>

#include "goalxai/af_core.hpp"
#include "goalxai/instrumental.hpp"

namespace goalxai {

class GoalAF {
 public:
  enum class Stage { raw, successful };

  GoalAF() = default;

  /// Throws InputError on unknown endpoints, self-attacks or empty labels.
  GoalAF(std::vector<GoalDecl> goals, std::map<IdPair, KindSet, PairLess> attacks, Stage stage)
      : stage_(stage), incomp_(std::move(attacks)) {
    for (auto& g : goals) {
      const Id id = g.id;
      if (!goals_.emplace(id, std::move(g)).second) throw InputError("duplicate goal '" + id + "'");
    }
    for (const auto& [pair, kinds] : incomp_) {
      if (!goals_.count(pair.first)) throw InputError("attack references unknown goal '" + pair.first + "'");
      if (!goals_.count(pair.second)) throw InputError("attack references unknown goal '" + pair.second + "'");
      if (pair.first == pair.second) throw InputError("self-attack on goal '" + pair.first + "'");
      if (kinds.empty()) throw InputError("empty incompatibility set on (" + pair.first + "," + pair.second + ")");
    }
  }

  Stage stage() const { return stage_; }
  const std::map<Id, GoalDecl, NaturalLess>& goals() const { return goals_; }
  const std::map<IdPair, KindSet, PairLess>& incomp() const { return incomp_; }

  IdSet goal_ids() const {
    IdSet out;
    for (const auto& [id, g] : goals_) out.insert(id);
    return out;
  }

  IdPairSet attacks() const {
    IdPairSet out;
    for (const auto& [pair, kinds] : incomp_) out.insert(pair);
    return out;
  }

  bool attacks(const Id& from, const Id& to) const { return incomp_.count({from, to}) != 0; }

  const GoalDecl& goal(const Id& id) const {
    auto it = goals_.find(id);
    if (it == goals_.end()) throw InputError("unknown goal '" + id + "'");
    return it->second;
  }

  const Rational& pref(const Id& id) const { return goal(id).preference; }

  /// INCOMP_G(g, g'); throws when (g, g') is not an attack.
  KindSet incompatibility(const Id& from, const Id& to) const {
    auto it = incomp_.find({from, to});
    if (it == incomp_.end()) throw InputError("no attack (" + from + "," + to + ")");
    return it->second;
  }

  /// Unordered conflict pairs, each stored as (smaller id, larger id).
  IdPairSet conflict_pairs() const {
    IdPairSet out;
    NaturalLess less;
    for (const auto& [pair, kinds] : incomp_) {
      out.insert(less(pair.first, pair.second) ? pair : IdPair{pair.second, pair.first});
    }
    return out;
  }

  af::AbstractAF to_abstract_af() const {
    std::vector<Id> nodes;
    for (const auto& [id, g] : goals_) nodes.push_back(id);
    std::vector<IdPair> edges(incomp_.size());
    std::transform(incomp_.begin(), incomp_.end(), edges.begin(), [](const auto& kv) { return kv.first; });
    return af::AbstractAF(nodes, edges);
  }

 private:
  Stage stage_ = Stage::raw;
  std::map<Id, GoalDecl, NaturalLess> goals_;
  std::map<IdPair, KindSet, PairLess> incomp_;
};

/// Raw goal framework from the plan-level one. Goals without any plan take part
/// in no attack.
inline GoalAF derive_goal_af(const GeneralAF& gaf) {
  require_valid(gaf);

  std::map<Id, std::vector<Id>> plans;
  for (const auto& a : gaf.args) plans[a.claim].push_back(a.id);

  auto label = [&](const Id& a, const Id& b) {
    auto it = gaf.attacks.find({a, b});
    return it == gaf.attacks.end() ? std::optional<KindSet>{} : std::optional<KindSet>{it->second};
  };

  std::map<IdPair, KindSet, PairLess> attacks;
  for (std::size_t i = 0; i < gaf.goals.size(); ++i) {
    for (std::size_t j = i + 1; j < gaf.goals.size(); ++j) {
      const auto& g = gaf.goals[i].id;
      const auto& h = gaf.goals[j].id;
      const auto& pg = plans[g];
      const auto& ph = plans[h];
      if (pg.empty() || ph.empty()) continue;

      bool all_conflict = true;
      KindSet kinds;
      for (const auto& a : pg) {
        for (const auto& b : ph) {
          auto ab = label(a, b);
          auto ba = label(b, a);
          if (!ab && !ba) {
            all_conflict = false;
            break;
          }
          if (ab) kinds |= *ab;
          if (ba) kinds |= *ba;
        }
        if (!all_conflict) break;
      }
      if (all_conflict) {
        attacks[{g, h}] = kinds;
        attacks[{h, g}] = kinds;
      }
    }
  }
  return GoalAF(gaf.goals, std::move(attacks), GoalAF::Stage::raw);
}

/// Raw goal framework declared directly over goal ids. Each listed pair is a
/// conflict: both directions are added, labels are merged per unordered pair.
inline GoalAF goal_af_from_conflicts(std::vector<GoalDecl> goals, const std::map<IdPair, KindSet, PairLess>& declared) {
  std::map<IdPair, KindSet, PairLess> attacks;
  for (const auto& [pair, kinds] : declared) {
    attacks[pair] |= kinds;
    attacks[{pair.second, pair.first}] |= kinds;
  }
  return GoalAF(std::move(goals), std::move(attacks), GoalAF::Stage::raw);
}

/// Keeps an attack only when the attacker is at least as preferred as its target.
inline GoalAF apply_successful_attacks(const GoalAF& raw) {
  if (raw.stage() != GoalAF::Stage::raw) throw InputError("goal framework is already preference-filtered");
  std::map<IdPair, KindSet, PairLess> kept;
  for (const auto& [pair, kinds] : raw.incomp()) {
    if (!raw.attacks(pair.second, pair.first))
      throw InputError("raw goal attack (" + pair.first + "," + pair.second + ") is not symmetric");
    if (raw.pref(pair.first) >= raw.pref(pair.second)) kept.emplace(pair, kinds);
  }
  std::vector<GoalDecl> goals;
  for (const auto& [id, g] : raw.goals()) goals.push_back(g);
  return GoalAF(std::move(goals), std::move(kept), GoalAF::Stage::successful);
}

}  // namespace goalxai
