#pragma once

// General argumentation framework over instrumental arguments (plans),
// with attacks labeled by the kind of incompatibility behind them.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "goalxai/common.hpp"

namespace goalxai {

enum class Incompatibility : std::uint8_t { terminal, resource, superfluity };

inline char letter(Incompatibility k) {
  switch (k) {
    case Incompatibility::terminal: return 't';
    case Incompatibility::resource: return 'r';
    case Incompatibility::superfluity: return 's';
  }
  return '?';
}

/// Subset of {t, r, s}. Always iterates and prints in t, r, s order.
class KindSet {
 public:
  constexpr KindSet() = default;
  constexpr KindSet(std::initializer_list<Incompatibility> kinds) {
    for (auto k : kinds) insert(k);
  }

  static KindSet parse_letter(std::string_view s) {
    if (s == "t") return {Incompatibility::terminal};
    if (s == "r") return {Incompatibility::resource};
    if (s == "s") return {Incompatibility::superfluity};
    throw InputError("unknown incompatibility kind '" + std::string(s) + "' (expected t, r or s)");
  }

  constexpr void insert(Incompatibility k) { bits_ |= bit(k); }
  constexpr bool contains(Incompatibility k) const { return (bits_ & bit(k)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr KindSet& operator|=(KindSet other) {
    bits_ |= other.bits_;
    return *this;
  }
  friend constexpr KindSet operator|(KindSet a, KindSet b) { return a |= b; }
  friend constexpr bool operator==(KindSet, KindSet) = default;
  friend constexpr auto operator<=>(KindSet a, KindSet b) { return a.bits_ <=> b.bits_; }

  std::vector<Incompatibility> members() const {
    std::vector<Incompatibility> out;
    for (auto k : {Incompatibility::terminal, Incompatibility::resource, Incompatibility::superfluity}) {
      if (contains(k)) out.push_back(k);
    }
    return out;
  }

  /// "t,r"
  std::string letters() const {
    std::string out;
    for (auto k : members()) {
      if (!out.empty()) out += ',';
      out += letter(k);
    }
    return out;
  }

 private:
  static constexpr std::uint8_t bit(Incompatibility k) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k)); }
  std::uint8_t bits_ = 0;
};

struct GoalDecl {
  Id id;
  std::string predicate;  // NAME(g), rendered verbatim
  Rational preference{1};
};

struct InstrumentalArgDecl {
  Id id;
  Id claim;
  std::vector<Id> sub_args;
};

struct GeneralAF {
  std::vector<GoalDecl> goals;
  std::vector<InstrumentalArgDecl> args;
  std::map<IdPair, KindSet, PairLess> attacks;  // f_INCOMP, total on R_gen

  const GoalDecl* find_goal(const Id& id) const {
    for (const auto& g : goals) {
      if (g.id == id) return &g;
    }
    return nullptr;
  }
  const InstrumentalArgDecl* find_arg(const Id& id) const {
    for (const auto& a : args) {
      if (a.id == id) return &a;
    }
    return nullptr;
  }
};

struct Diagnostic {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  std::string location;  // e.g. "attacks[3].to"
  std::string message;
};

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;

  bool ok() const {
    return std::none_of(diagnostics.begin(), diagnostics.end(),
                        [](const Diagnostic& d) { return d.severity == Diagnostic::Severity::error; });
  }
  std::size_t count(Diagnostic::Severity s) const {
    return static_cast<std::size_t>(std::count_if(diagnostics.begin(), diagnostics.end(),
                                                  [&](const Diagnostic& d) { return d.severity == s; }));
  }
  std::string summary() const {
    std::string out;
    for (const auto& d : diagnostics) {
      out += d.severity == Diagnostic::Severity::error ? "error: " : "warning: ";
      out += d.location + ": " + d.message + "\n";
    }
    return out;
  }
};

class ValidationError : public InputError {
 public:
  explicit ValidationError(ValidationReport report)
      : InputError("invalid framework:\n" + report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Checks every structural invariant. Asymmetric attacks only produce warnings.
inline ValidationReport validate(const GeneralAF& gaf) {
  ValidationReport report;
  auto error = [&](std::string loc, std::string msg) {
    report.diagnostics.push_back({Diagnostic::Severity::error, std::move(loc), std::move(msg)});
  };
  auto warn = [&](std::string loc, std::string msg) {
    report.diagnostics.push_back({Diagnostic::Severity::warning, std::move(loc), std::move(msg)});
  };

  std::set<Id> goal_ids;
  for (std::size_t i = 0; i < gaf.goals.size(); ++i) {
    const auto& g = gaf.goals[i];
    const std::string loc = "goals[" + std::to_string(i) + "]";
    if (g.id.empty()) error(loc + ".id", "empty goal id");
    if (!goal_ids.insert(g.id).second) error(loc + ".id", "duplicate goal id '" + g.id + "'");
    if (g.predicate.empty()) error(loc + ".predicate", "empty predicate for goal '" + g.id + "'");
    if (g.preference <= 0 || g.preference > 1)
      error(loc + ".preference", "preference of '" + g.id + "' must lie in (0, 1], got " + to_string(g.preference));
  }

  std::map<Id, std::size_t> arg_index;
  for (std::size_t i = 0; i < gaf.args.size(); ++i) {
    const auto& a = gaf.args[i];
    const std::string loc = "arguments[" + std::to_string(i) + "]";
    if (a.id.empty()) error(loc + ".id", "empty argument id");
    if (!arg_index.emplace(a.id, i).second) error(loc + ".id", "duplicate argument id '" + a.id + "'");
    if (goal_ids.count(a.id) != 0) error(loc + ".id", "id '" + a.id + "' is used for both a goal and an argument");
    if (goal_ids.count(a.claim) == 0) error(loc + ".claim", "claim references undeclared goal '" + a.claim + "'");
  }
  for (std::size_t i = 0; i < gaf.args.size(); ++i) {
    const auto& a = gaf.args[i];
    for (std::size_t k = 0; k < a.sub_args.size(); ++k) {
      if (arg_index.count(a.sub_args[k]) == 0)
        error("arguments[" + std::to_string(i) + "].sub_args[" + std::to_string(k) + "]",
              "sub-argument references undeclared argument '" + a.sub_args[k] + "'");
    }
  }

  // sub-argument cycles: colour-marking DFS
  std::map<Id, int> colour;
  std::function<bool(const Id&)> cyclic = [&](const Id& id) {
    auto& c = colour[id];
    if (c == 1) return true;
    if (c == 2) return false;
    c = 1;
    auto it = arg_index.find(id);
    if (it != arg_index.end()) {
      for (const auto& sub : gaf.args[it->second].sub_args) {
        if (arg_index.count(sub) != 0 && cyclic(sub)) return true;
      }
    }
    colour[id] = 2;
    return false;
  };
  for (const auto& a : gaf.args) {
    if (colour[a.id] == 0 && cyclic(a.id)) {
      error("arguments", "cyclic sub-argument relation through '" + a.id + "'");
      break;
    }
  }

  for (const auto& [pair, kinds] : gaf.attacks) {
    const auto& [from, to] = pair;
    const std::string loc = "attacks(" + from + "," + to + ")";
    if (arg_index.count(from) == 0) error(loc + ".from", "attack references undeclared argument '" + from + "'");
    if (arg_index.count(to) == 0) error(loc + ".to", "attack references undeclared argument '" + to + "'");
    if (from == to) error(loc, "self-attack on '" + from + "'");
    if (kinds.empty()) error(loc + ".kinds", "empty incompatibility label set");
    if (gaf.attacks.count({to, from}) == 0) warn(loc, "attack has no reverse pair (" + to + "," + from + ")");
  }
  return report;
}

inline void require_valid(const GeneralAF& gaf) {
  auto report = validate(gaf);
  if (!report.ok()) throw ValidationError(std::move(report));
}

/// ARG_INS(g): every argument whose claim is `goal`.
inline IdSet args_for_goal(const GeneralAF& gaf, const Id& goal) {
  if (gaf.find_goal(goal) == nullptr) throw InputError("unknown goal '" + goal + "'");
  IdSet out;
  for (const auto& a : gaf.args) {
    if (a.claim == goal) out.insert(a.id);
  }
  return out;
}

/// R_t, R_r or R_s: the attacks whose label contains `kind`.
inline IdPairSet attacks_of_kind(const GeneralAF& gaf, Incompatibility kind) {
  IdPairSet out;
  for (const auto& [pair, kinds] : gaf.attacks) {
    if (kinds.contains(kind)) out.insert(pair);
  }
  return out;
}

/// Goals that are not the claim of any sub-argument.
inline IdSet main_goals(const GeneralAF& gaf) {
  std::set<Id> sub_claims;
  for (const auto& a : gaf.args) {
    for (const auto& sub : a.sub_args) {
      if (const auto* s = gaf.find_arg(sub)) sub_claims.insert(s->claim);
    }
  }
  IdSet out;
  for (const auto& g : gaf.goals) {
    if (sub_claims.count(g.id) == 0) out.insert(g.id);
  }
  return out;
}

}  // namespace goalxai
