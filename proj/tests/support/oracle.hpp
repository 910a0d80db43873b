#pragma once

// Brute-force reference implementations over all 2^n subsets. Deliberately
// share nothing with the library's search code: plain index sets, direct
// transcriptions of the definitions.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "goalxai/common.hpp"
#include "goalxai/instrumental.hpp"

namespace oracle {

using Subset = std::uint32_t;

struct Graph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // attacker -> target

  bool attacks(int a, int b) const { return edges.count({a, b}) != 0; }
};

inline bool member(Subset s, int i) { return ((s >> i) & 1u) != 0; }

inline bool conflict_free(const Graph& g, Subset s) {
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (member(s, a) && member(s, b) && g.attacks(a, b)) return false;
  return true;
}

inline bool defends(const Graph& g, Subset s, int a) {
  for (int b = 0; b < g.n; ++b) {
    if (!g.attacks(b, a)) continue;
    bool countered = false;
    for (int c = 0; c < g.n; ++c)
      if (member(s, c) && g.attacks(c, b)) countered = true;
    if (!countered) return false;
  }
  return true;
}

inline bool admissible(const Graph& g, Subset s) {
  if (!conflict_free(g, s)) return false;
  for (int a = 0; a < g.n; ++a)
    if (member(s, a) && !defends(g, s, a)) return false;
  return true;
}

inline bool complete(const Graph& g, Subset s) {
  if (!conflict_free(g, s)) return false;
  for (int a = 0; a < g.n; ++a)
    if (member(s, a) != defends(g, s, a)) return false;
  return true;
}

inline bool stable(const Graph& g, Subset s) {
  if (!conflict_free(g, s)) return false;
  for (int a = 0; a < g.n; ++a) {
    if (member(s, a)) continue;
    bool hit = false;
    for (int b = 0; b < g.n; ++b)
      if (member(s, b) && g.attacks(b, a)) hit = true;
    if (!hit) return false;
  }
  return true;
}

template <typename Pred>
std::vector<Subset> all_subsets(const Graph& g, Pred pred) {
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << g.n); ++s)
    if (pred(g, s)) out.push_back(s);
  return out;
}

inline std::vector<Subset> preferred(const Graph& g) {
  const auto comp = all_subsets(g, complete);
  std::vector<Subset> out;
  for (auto s : comp) {
    bool maximal = true;
    for (auto t : comp)
      if (t != s && (s & t) == s) maximal = false;
    if (maximal) out.push_back(s);
  }
  return out;
}

/// The complete extension contained in every other complete extension.
inline Subset grounded(const Graph& g) {
  const auto comp = all_subsets(g, complete);
  for (auto s : comp) {
    bool least = true;
    for (auto t : comp)
      if ((s & t) != s) least = false;
    if (least) return s;
  }
  return 0;
}

/// Node names "n0".."n{k-1}" in index order.
inline std::string name(int i) { return "n" + std::to_string(i); }

inline goalxai::IdSet to_ids(Subset s, int n) {
  goalxai::IdSet out;
  for (int i = 0; i < n; ++i)
    if (member(s, i)) out.insert(name(i));
  return out;
}

inline std::set<goalxai::IdSet, goalxai::IdSetLess> to_family(const std::vector<Subset>& v, int n) {
  std::set<goalxai::IdSet, goalxai::IdSetLess> out;
  for (auto s : v) out.insert(to_ids(s, n));
  return out;
}

/// Goal attacks straight from the all-pairs definition, including the
/// nonemptiness requirement on both plan sets.
inline std::map<goalxai::IdPair, goalxai::KindSet> goal_attacks(const goalxai::GeneralAF& gaf) {
  std::map<goalxai::IdPair, goalxai::KindSet> out;
  for (const auto& g : gaf.goals) {
    for (const auto& h : gaf.goals) {
      if (g.id == h.id) continue;
      std::vector<std::string> pg, ph;
      for (const auto& a : gaf.args) {
        if (a.claim == g.id) pg.push_back(a.id);
        if (a.claim == h.id) ph.push_back(a.id);
      }
      if (pg.empty() || ph.empty()) continue;
      bool all = true;
      goalxai::KindSet kinds;
      for (const auto& a : pg) {
        for (const auto& b : ph) {
          auto ab = gaf.attacks.find({a, b});
          auto ba = gaf.attacks.find({b, a});
          if (ab == gaf.attacks.end() && ba == gaf.attacks.end()) all = false;
          if (ab != gaf.attacks.end()) kinds |= ab->second;
          if (ba != gaf.attacks.end()) kinds |= ba->second;
        }
      }
      if (all) out[{g.id, h.id}] = kinds;
    }
  }
  return out;
}

/// Every conflict-free goal set with maximal summed weight, plus the count of
/// conflict-free sets. Conflicts are unordered index pairs.
struct ArgmaxResult {
  std::vector<Subset> maxima;
  std::size_t cf_count = 0;
  goalxai::Rational best{0};
};

inline ArgmaxResult argmax(int n, const std::set<std::pair<int, int>>& conflicts,
                           const std::vector<goalxai::Rational>& weight) {
  ArgmaxResult r;
  bool first = true;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    bool ok = true;
    for (auto [a, b] : conflicts)
      if (member(s, a) && member(s, b)) ok = false;
    if (!ok) continue;
    ++r.cf_count;
    goalxai::Rational u{0};
    for (int i = 0; i < n; ++i)
      if (member(s, i)) u += weight[static_cast<std::size_t>(i)];
    if (first || u > r.best) {
      r.best = u;
      r.maxima.clear();
      first = false;
    }
    if (u == r.best) r.maxima.push_back(s);
  }
  return r;
}

}  // namespace oracle
