#pragma once

// Pseudo-natural sentences for explanatory arguments, and DOT exports.

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "goalxai/explain.hpp"

namespace goalxai {

/// Sentence template per rule schema. Slots: {x}, {y} (goal names) and {ls}.
inline constexpr std::array<std::string_view, 6> kSentenceTemplates = {
    "{x} has no incompatibility, so it became pursued.",
    "{x} and {y} have the following conflicts: '{ls}'. Since {x} is more preferable than {y}, {x} became pursued.",
    "{x} and {y} have the following conflicts: '{ls}'. Since {y} is less preferable than {x}, {y} did not become "
    "pursued.",
    "{x} and {y} have the following conflicts: '{ls}'. Since {x} and {y} have the same preference value, {x} became "
    "pursued.",
    "Since {x} belonged to the set of goals that maximizes the utility, it became pursued.",
    "Since {x} did not belong to the set of goals that maximizes the utility, it did not become pursued.",
};

class UnsupportedFormatError : public InputError {
 public:
  using InputError::InputError;
};

struct ExplanatorySentence {
  Id argument;
  RuleSchema scheme = RuleSchema::r1;
  std::string text;
};

inline std::string fill_template(std::string_view tmpl, const std::string& x, const std::string& y,
                                 const std::string& ls) {
  std::string out;
  out.reserve(tmpl.size() + 64);
  for (std::size_t i = 0; i < tmpl.size();) {
    if (tmpl.compare(i, 3, "{x}") == 0) {
      out += x;
      i += 3;
    } else if (tmpl.compare(i, 3, "{y}") == 0) {
      out += y;
      i += 3;
    } else if (tmpl.compare(i, 4, "{ls}") == 0) {
      out += ls;
      i += 4;
    } else {
      out += tmpl[i++];
    }
  }
  return out;
}

inline ExplanatorySentence render_argument(const ExplanatoryArgument& a, const RuleInstance& rule, const GoalAF& goals) {
  if (rule.id != a.rule) throw InputError("rule instance " + rule.id + " does not belong to argument " + a.id);
  const std::string x = goals.goal(rule.x).predicate;
  const std::string y = rule.y.empty() ? std::string{} : goals.goal(rule.y).predicate;
  const auto tmpl = kSentenceTemplates[static_cast<std::size_t>(rule.schema)];
  return {a.id, rule.schema, fill_template(tmpl, x, y, rule.ls.letters())};
}

/// One sentence per member of the chosen extension, in argument-id order.
inline std::vector<ExplanatorySentence> render_partial_explanation(const Explanation& e, const Explainer& ctx,
                                                                   std::size_t extension = 0) {
  if (e.kind != ExplanationKind::partial)
    throw UnsupportedFormatError("complete explanations have no sentence form; export them as dot or structured output");
  std::vector<ExplanatorySentence> out;
  for (const auto* a : e.members(extension)) out.push_back(render_argument(*a, ctx.rule_of(*a), ctx.goal_af()));
  return out;
}

namespace detail {

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string export_dot(const af::AbstractAF& af, std::string_view name = "af") {
  std::ostringstream os;
  os << "digraph " << detail::dot_quote(name) << " {\n";
  for (const auto& n : af.nodes()) os << "  " << detail::dot_quote(n) << ";\n";
  for (const auto& [from, to] : af.attacks()) os << "  " << detail::dot_quote(from) << " -> " << detail::dot_quote(to) << ";\n";
  os << "}\n";
  return os.str();
}

/// Goal nodes labeled "id: predicate (preference)"; edges labeled with their kinds.
inline std::string export_dot(const GoalAF& goals, std::string_view name = "goals") {
  std::ostringstream os;
  os << "digraph " << detail::dot_quote(name) << " {\n";
  for (const auto& [id, g] : goals.goals()) {
    os << "  " << detail::dot_quote(id) << " [label="
       << detail::dot_quote(id + ": " + g.predicate + " (" + to_string(g.preference) + ")") << "];\n";
  }
  for (const auto& [pair, kinds] : goals.incomp()) {
    os << "  " << detail::dot_quote(pair.first) << " -> " << detail::dot_quote(pair.second)
       << " [label=" << detail::dot_quote(kinds.letters()) << "];\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string export_dot(const GeneralAF& gaf, std::string_view name = "general") {
  std::ostringstream os;
  os << "digraph " << detail::dot_quote(name) << " {\n";
  for (const auto& a : gaf.args) {
    const auto* g = gaf.find_goal(a.claim);
    os << "  " << detail::dot_quote(a.id) << " [label=" << detail::dot_quote(a.id + ": " + (g ? g->predicate : a.claim))
       << "];\n";
  }
  for (const auto& [pair, kinds] : gaf.attacks) {
    os << "  " << detail::dot_quote(pair.first) << " -> " << detail::dot_quote(pair.second)
       << " [label=" << detail::dot_quote(kinds.letters()) << "];\n";
  }
  os << "}\n";
  return os.str();
}

/// Argument nodes labeled with their claims; edges are defeats.
inline std::string export_dot(const ExplanatoryAF& xaf) {
  std::ostringstream os;
  os << "digraph " << detail::dot_quote("xaf_" + xaf.goal) << " {\n";
  for (const auto& a : xaf.arguments)
    os << "  " << detail::dot_quote(a.id) << " [label=" << detail::dot_quote(a.id + ": " + a.claim.text()) << "];\n";
  for (const auto& [from, to] : xaf.defeats)
    os << "  " << detail::dot_quote(from) << " -> " << detail::dot_quote(to) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace goalxai
