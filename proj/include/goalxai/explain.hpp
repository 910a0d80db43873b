#pragma once

// Explanatory rules, explanatory arguments, defeat, per-goal explanatory
// frameworks, and WHY / WHY_NOT queries over them.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "goalxai/af_core.hpp"
#include "goalxai/belief_gen.hpp"

namespace goalxai {

enum class RuleSchema { r1, r2, r3, r4, r5, r6 };

inline constexpr std::array<RuleSchema, 6> kRuleSchemas = {RuleSchema::r1, RuleSchema::r2, RuleSchema::r3,
                                                           RuleSchema::r4, RuleSchema::r5, RuleSchema::r6};

inline std::string_view to_string(RuleSchema r) {
  static constexpr std::array<std::string_view, 6> names = {"r1", "r2", "r3", "r4", "r5", "r6"};
  return names[static_cast<std::size_t>(r)];
}

/// The max-utility rules. Arguments built on them win rebuttals against others.
inline constexpr bool is_decisive(RuleSchema r) { return r == RuleSchema::r5 || r == RuleSchema::r6; }

inline std::string_view schema_text(RuleSchema r) {
  switch (r) {
    case RuleSchema::r1: return "¬incomp(x) → pursued(x)";
    case RuleSchema::r2: return "incompat(x,y,ls) ∧ pref(x,y) → pursued(x)";
    case RuleSchema::r3: return "incompat(x,y,ls) ∧ ¬pref(y,x) → ¬pursued(y)";
    case RuleSchema::r4: return "incompat(x,y,ls) ∧ eq_pref(x,y) → pursued(x)";
    case RuleSchema::r5: return "max_util(x) → pursued(x)";
    case RuleSchema::r6: return "¬max_util(x) → ¬pursued(x)";
  }
  return {};
}

/// pursued(goal) or ¬pursued(goal).
struct Literal {
  Id goal;
  bool pursued = true;

  friend bool operator==(const Literal&, const Literal&) = default;
  Literal negated() const { return {goal, !pursued}; }
  std::string text() const { return (pursued ? "pursued(" : "¬pursued(") + goal + ")"; }
};

struct RuleInstance {
  Id id;  // r1, r2, ... in trigger order
  RuleSchema schema = RuleSchema::r1;
  Id x;
  Id y;  // empty for unary schemas
  KindSet ls;
  std::vector<Id> body;  // belief ids, in schema body order
  Literal head;

  std::string text(const std::map<Id, const Belief*>& beliefs) const {
    std::string out;
    for (const auto& b : body) {
      if (!out.empty()) out += " ∧ ";
      out += beliefs.at(b)->text();
    }
    return out + " → " + head.text();
  }
};

struct ExplanatoryArgument {
  Id id;                      // A1, A2, ...
  std::vector<Id> beliefs;    // belief part of the support
  Id rule;                    // the rule-instance part of the support
  Literal claim;

  std::vector<Id> support() const {
    auto out = beliefs;
    out.push_back(rule);
    return out;
  }
};

namespace detail {

struct BeliefIndex {
  std::map<std::tuple<BeliefKind, Id, Id>, const Belief*> by_shape;

  explicit BeliefIndex(const std::vector<Belief>& beliefs) {
    for (const auto& b : beliefs) by_shape.emplace(std::tuple(b.kind, b.x, b.y), &b);
  }
  const Belief* find(BeliefKind kind, const Id& x, const Id& y = {}) const {
    auto it = by_shape.find(std::tuple(kind, x, y));
    return it == by_shape.end() ? nullptr : it->second;
  }
};

}  // namespace detail

/// Every ground instance of r1..r6 whose body is contained in `beliefs`.
/// Numbered by schema, then by natural order of (x, y).
inline std::vector<RuleInstance> trigger_rules(const std::vector<Belief>& beliefs) {
  const detail::BeliefIndex index(beliefs);
  std::vector<Belief> incompat, unary;
  for (const auto& b : beliefs) {
    if (b.kind == BeliefKind::incompat) incompat.push_back(b);
  }
  NaturalLess less;
  auto by_args = [&](const Belief& a, const Belief& b) {
    if (a.x != b.x) return less(a.x, b.x);
    if (a.y != b.y) return less(a.y, b.y);
    return a.labels < b.labels;
  };
  std::sort(incompat.begin(), incompat.end(), by_args);

  std::vector<RuleInstance> out;
  auto emit = [&](RuleSchema schema, const Id& x, const Id& y, KindSet ls, std::vector<Id> body, Literal head) {
    out.push_back({"r" + std::to_string(out.size() + 1), schema, x, y, ls, std::move(body), std::move(head)});
  };
  auto unary_rule = [&](RuleSchema schema, BeliefKind kind, bool pursued) {
    std::vector<const Belief*> matches;
    for (const auto& b : beliefs) {
      if (b.kind == kind) matches.push_back(&b);
    }
    std::sort(matches.begin(), matches.end(), [&](const Belief* a, const Belief* b) { return less(a->x, b->x); });
    for (const auto* b : matches) emit(schema, b->x, {}, {}, {b->id}, {b->x, pursued});
  };

  unary_rule(RuleSchema::r1, BeliefKind::not_incomp, true);
  for (const auto& inc : incompat) {
    if (const auto* p = index.find(BeliefKind::pref, inc.x, inc.y))
      emit(RuleSchema::r2, inc.x, inc.y, inc.labels, {inc.id, p->id}, {inc.x, true});
  }
  for (const auto& inc : incompat) {
    if (const auto* p = index.find(BeliefKind::not_pref, inc.y, inc.x))
      emit(RuleSchema::r3, inc.x, inc.y, inc.labels, {inc.id, p->id}, {inc.y, false});
  }
  for (const auto& inc : incompat) {
    if (const auto* p = index.find(BeliefKind::eq_pref, inc.x, inc.y))
      emit(RuleSchema::r4, inc.x, inc.y, inc.labels, {inc.id, p->id}, {inc.x, true});
  }
  unary_rule(RuleSchema::r5, BeliefKind::max_util, true);
  unary_rule(RuleSchema::r6, BeliefKind::not_max_util, false);
  return out;
}

/// Literals derivable from `support` by one forward application of a rule
/// instance whose body beliefs all belong to `support`.
inline std::vector<Literal> derivable(const std::vector<Id>& support, const std::vector<RuleInstance>& instances) {
  auto in_support = [&](const Id& id) { return std::find(support.begin(), support.end(), id) != support.end(); };
  std::vector<Literal> out;
  for (const auto& r : instances) {
    if (!in_support(r.id)) continue;
    if (std::all_of(r.body.begin(), r.body.end(), in_support)) out.push_back(r.head);
  }
  return out;
}

inline bool derives(const std::vector<Id>& support, const Literal& h, const std::vector<RuleInstance>& instances) {
  const auto lits = derivable(support, instances);
  return std::find(lits.begin(), lits.end(), h) != lits.end();
}

/// No removal of a single element keeps the claim derivable.
inline bool is_minimal(const ExplanatoryArgument& a, const std::vector<RuleInstance>& instances) {
  const auto support = a.support();
  for (std::size_t i = 0; i < support.size(); ++i) {
    auto reduced = support;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
    if (derives(reduced, a.claim, instances)) return false;
  }
  return true;
}

/// The support never derives both pursued(g) and ¬pursued(g).
inline bool is_consistent(const ExplanatoryArgument& a, const std::vector<RuleInstance>& instances) {
  const auto lits = derivable(a.support(), instances);
  return std::none_of(lits.begin(), lits.end(), [&](const Literal& l) {
    return std::find(lits.begin(), lits.end(), l.negated()) != lits.end();
  });
}

/// One argument per rule instance: support = its body beliefs plus the instance.
inline std::vector<ExplanatoryArgument> construct_arguments(const std::vector<Belief>& beliefs,
                                                            const std::vector<RuleInstance>& instances) {
  std::set<Id> known;
  for (const auto& b : beliefs) known.insert(b.id);
  std::vector<ExplanatoryArgument> out;
  out.reserve(instances.size());
  for (const auto& r : instances) {
    for (const auto& b : r.body) {
      if (known.count(b) == 0) throw InputError("rule instance " + r.id + " uses unknown belief " + b);
    }
    ExplanatoryArgument a{"A" + std::to_string(out.size() + 1), r.body, r.id, r.head};
    if (!derives(a.support(), a.claim, instances) || !is_minimal(a, instances) || !is_consistent(a, instances))
      throw std::logic_error("argument " + a.id + " violates derivability, minimality or consistency");
    out.push_back(std::move(a));
  }
  return out;
}

/// Contradictory claims about the same goal.
inline bool rebuts(const ExplanatoryArgument& a, const ExplanatoryArgument& b) {
  return a.claim.goal == b.claim.goal && a.claim.pursued != b.claim.pursued;
}

/// a defeats b when they rebut each other and b is not strictly stronger:
/// a decisive argument beats a non-decisive one outright, equally ranked
/// pairs keep both directions.
inline bool defeats(const ExplanatoryArgument& a, const ExplanatoryArgument& b,
                    const std::map<Id, RuleSchema>& schema_of_rule) {
  if (!rebuts(a, b)) return false;
  const bool da = is_decisive(schema_of_rule.at(a.rule));
  const bool db = is_decisive(schema_of_rule.at(b.rule));
  return da || !db;
}

inline std::map<Id, RuleSchema> schema_lookup(const std::vector<RuleInstance>& instances) {
  std::map<Id, RuleSchema> out;
  for (const auto& r : instances) out.emplace(r.id, r.schema);
  return out;
}

struct ExplanatoryAF {
  Id goal;
  std::vector<ExplanatoryArgument> arguments;  // in argument-id order
  IdPairSet defeats;

  IdSet argument_ids() const {
    IdSet out;
    for (const auto& a : arguments) out.insert(a.id);
    return out;
  }

  af::AbstractAF to_abstract_af() const {
    std::vector<Id> nodes;
    for (const auto& a : arguments) nodes.push_back(a.id);
    return af::AbstractAF(nodes, {defeats.begin(), defeats.end()});
  }
};

/// XAF_g: the arguments about `goal` and the defeats among them.
inline ExplanatoryAF build_xaf(const Id& goal, const std::vector<ExplanatoryArgument>& arguments,
                               const std::vector<RuleInstance>& instances) {
  const auto schemas = schema_lookup(instances);
  ExplanatoryAF out{goal, {}, {}};
  for (const auto& a : arguments) {
    if (a.claim.goal == goal) out.arguments.push_back(a);
  }
  for (const auto& a : out.arguments) {
    for (const auto& b : out.arguments) {
      if (defeats(a, b, schemas)) out.defeats.insert({a.id, b.id});
    }
  }
  return out;
}

enum class QueryKind { why, why_not };
enum class ExplanationKind { partial, complete };

inline std::string_view to_string(QueryKind q) { return q == QueryKind::why ? "WHY" : "WHY_NOT"; }
inline std::string_view to_string(ExplanationKind k) { return k == ExplanationKind::partial ? "partial" : "complete"; }

/// Raised when WHY is asked about a goal that was not pursued, or the reverse.
class QueryDirectionError : public InputError {
 public:
  using InputError::InputError;
};

struct Explanation {
  ExplanationKind kind = ExplanationKind::partial;
  QueryKind query = QueryKind::why;
  Id goal;
  af::Semantics semantics = af::Semantics::grounded;
  ExplanatoryAF xaf;                 // the complete explanation; also kept for partial ones
  af::Extensions extensions;         // partial content: one for grounded, possibly several otherwise

  /// Arguments of the first extension, for the common single-extension case.
  std::vector<const ExplanatoryArgument*> members(std::size_t which = 0) const {
    std::vector<const ExplanatoryArgument*> out;
    if (which >= extensions.size()) return out;
    for (const auto& a : xaf.arguments) {
      if (extensions[which].count(a.id) != 0) out.push_back(&a);
    }
    return out;
  }
};

struct ExplainOptions {
  ExplanationKind kind = ExplanationKind::partial;
  af::Semantics semantics = af::Semantics::grounded;
};

/// Stage outputs from goal selection through per-goal explanatory frameworks.
class Explainer {
 public:
  Explainer(GoalAF filtered, SelectionResult selection)
      : filtered_(std::move(filtered)), selection_(std::move(selection)) {
    beliefs_ = generate_beliefs(filtered_, selection_);
    instances_ = trigger_rules(beliefs_);
    arguments_ = construct_arguments(beliefs_, instances_);
    for (const auto& [g, decl] : filtered_.goals()) xafs_.emplace(g, build_xaf(g, arguments_, instances_));
  }

  const GoalAF& goal_af() const { return filtered_; }
  const SelectionResult& selection() const { return selection_; }
  const std::vector<Belief>& beliefs() const { return beliefs_; }
  const std::vector<RuleInstance>& rule_instances() const { return instances_; }
  const std::vector<ExplanatoryArgument>& arguments() const { return arguments_; }
  const std::map<Id, ExplanatoryAF, NaturalLess>& xafs() const { return xafs_; }

  const ExplanatoryAF& xaf(const Id& goal) const {
    auto it = xafs_.find(goal);
    if (it == xafs_.end()) throw InputError("unknown goal '" + goal + "'");
    return it->second;
  }

  const RuleInstance& rule_of(const ExplanatoryArgument& a) const {
    for (const auto& r : instances_) {
      if (r.id == a.rule) return r;
    }
    throw std::logic_error("argument " + a.id + " has no rule instance");
  }

  bool is_pursued(const Id& goal) const {
    filtered_.goal(goal);
    return selection_.pursued.count(goal) != 0;
  }

  Explanation why(const Id& goal, const ExplainOptions& opts = {}) const {
    if (!is_pursued(goal))
      throw QueryDirectionError("goal '" + goal + "' was not pursued; ask WHY_NOT(" + goal + ") instead");
    return explain(goal, QueryKind::why, opts);
  }

  Explanation why_not(const Id& goal, const ExplainOptions& opts = {}) const {
    if (is_pursued(goal))
      throw QueryDirectionError("goal '" + goal + "' was pursued; ask WHY(" + goal + ") instead");
    return explain(goal, QueryKind::why_not, opts);
  }

  /// CE_g, answered in whichever direction fits the goal's status.
  Explanation complete_explanation(const Id& goal) const {
    return explain(goal, is_pursued(goal) ? QueryKind::why : QueryKind::why_not, {ExplanationKind::complete});
  }

  /// Grounded-semantics extension of every goal's XAF.
  std::map<Id, af::Extension, NaturalLess> grounded_extensions() const {
    std::map<Id, af::Extension, NaturalLess> out;
    for (const auto& [g, x] : xafs_) out.emplace(g, af::grounded_extension(x.to_abstract_af()));
    return out;
  }

 private:
  Explanation explain(const Id& goal, QueryKind query, const ExplainOptions& opts) const {
    Explanation e;
    e.kind = opts.kind;
    e.query = query;
    e.goal = goal;
    e.semantics = opts.semantics;
    e.xaf = xaf(goal);
    if (opts.kind == ExplanationKind::partial) e.extensions = af::extensions(e.xaf.to_abstract_af(), opts.semantics);
    return e;
  }

  GoalAF filtered_;
  SelectionResult selection_;
  std::vector<Belief> beliefs_;
  std::vector<RuleInstance> instances_;
  std::vector<ExplanatoryArgument> arguments_;
  std::map<Id, ExplanatoryAF, NaturalLess> xafs_;
};

}  // namespace goalxai
