#pragma once

#include <optional>
#include <string>
#include <vector>

#include "borncheck/config.hpp"
#include "borncheck/search.hpp"

namespace borncheck {

// One row of an axiom-check table: which axiom, on which named game, at
// which displacement offset (when the axiom takes one), and the result.
struct CheckRow {
  Axiom axiom;
  std::string game;
  std::optional<Rational> k;
  CheckResult result;
};

// Renderers. Each returns the complete report text, newline terminated; two
// calls with equal inputs return identical bytes. JSON output is key-sorted
// and carries "schema": "borncheck/1".
std::string render_eval_markdown(const Rational& value);
std::string render_eval_json(const std::string& game_name, const Game& game,
                             const std::string& valuation,
                             const Rational& value);

std::string render_check_markdown(const std::string& valuation,
                                  const std::vector<CheckRow>& rows);
std::string render_check_json(const std::string& valuation,
                              const std::vector<CheckRow>& rows);

std::string render_reference_markdown(const ReferenceReport& report);
std::string render_reference_json(const ReferenceReport& report);

std::string render_search_markdown(const GameUniverse& universe,
                                   const SearchOutcome& outcome);
std::string render_search_json(const GameUniverse& universe,
                               const SearchOutcome& outcome);

}  // namespace borncheck
