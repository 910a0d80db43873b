#pragma once

// The cleaner-world scenario built in code, independently of the JSON fixture.

#include <string>
#include <vector>

#include "goalxai/instrumental.hpp"

namespace fixture {

inline std::vector<goalxai::IdPair> parse_pairs(const std::string& text) {
  // "(A,B), (B,A)" -> {{A,B},{B,A}}
  std::vector<goalxai::IdPair> out;
  std::size_t i = 0;
  while ((i = text.find('(', i)) != std::string::npos) {
    const auto comma = text.find(',', i);
    const auto close = text.find(')', comma);
    out.push_back({text.substr(i + 1, comma - i - 1), text.substr(comma + 1, close - comma - 1)});
    i = close;
  }
  return out;
}

inline const char* kTerminal =
    "(A,B), (B,A), (E,B), (B,E), (E,H), (H,E),(A,H),(H,A), (C,B),(B,C), (D,B),(B,D), (D,H), (H,D), (C,H),(H,C)";
inline const char* kResource = "(A,B), (B,A), (E,B), (B,E), (A,H),(H,A),(E,H),(H,E)";
inline const char* kSuperfluity =
    "(C,A), (A,C), (E,D), (D,E), (C,E), (E,C), (A,D), (D,A), (F,B), (B,F), (F,H),(H,F)";

inline goalxai::GeneralAF cleaner_world() {
  using goalxai::Incompatibility;
  using goalxai::Rational;
  goalxai::GeneralAF gaf;
  gaf.goals = {
      {"g1", "clean(5,5)", Rational(8, 10)},      {"g2", "pickup(5,5)", Rational(6, 10)},
      {"g3", "mop(5,5)", Rational(7, 10)},        {"g4", "be(in_workshop)", Rational(5, 10)},
      {"g5", "be(fixed)", Rational(9, 10)},
  };
  gaf.args = {
      {"A", "g1", {"E"}}, {"B", "g5", {"H"}}, {"C", "g1", {"D"}}, {"D", "g3", {}},
      {"E", "g2", {}},    {"F", "g5", {}},    {"H", "g4", {}},
  };
  for (auto p : parse_pairs(kTerminal)) gaf.attacks[p].insert(Incompatibility::terminal);
  for (auto p : parse_pairs(kResource)) gaf.attacks[p].insert(Incompatibility::resource);
  for (auto p : parse_pairs(kSuperfluity)) gaf.attacks[p].insert(Incompatibility::superfluity);
  return gaf;
}

inline std::string scenario_path(const std::string& name) {
  return std::string(GOALXAI_SOURCE_DIR) + "/scenarios/" + name;
}

inline std::string golden_path(const std::string& name) {
  return std::string(GOALXAI_SOURCE_DIR) + "/tests/golden/" + name;
}

}  // namespace fixture
