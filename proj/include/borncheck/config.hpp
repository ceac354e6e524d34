#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "borncheck/axioms.hpp"

namespace borncheck {

// Parsed run configuration. The file format is line oriented:
//
//   # comment
//   observable = 0 1
//   state two = 0:1 1:1
//   game main = two canonical
//   game bet = two 0:3 1:0
//   k_grid = -1 0 1
//   family = maxabs            (born | maxabs | selectors | weights <bound>)
//   axioms = ZeroSum PayoffDisplacement
//   format = markdown          (markdown | json)
//   witness_cap = 10
//
// All numbers are exact rationals ("1/2", "-3", "0.25"); unknown keys and
// duplicate definitions are rejected.
struct RunConfig {
  enum class Family { Born, MaxAbs, Selectors, Weights };
  enum class Format { Markdown, Json };

  std::optional<Observable> observable;
  std::vector<std::pair<std::string, State>> states;
  std::vector<std::pair<std::string, Game>> games;
  std::vector<Rational> k_grid;  // empty = use per-game default grid
  std::optional<Family> family;
  unsigned weights_bound = 0;  // set when family == Weights
  std::vector<Axiom> axioms;
  std::optional<Format> format;
  std::optional<std::size_t> witness_cap;

  const State& state_named(const std::string& name) const;
  const Game& game_named(const std::string& name) const;
};

const char* family_name(RunConfig::Family family);

RunConfig parse_config(std::istream& in);
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace borncheck
