#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "borncheck/axioms.hpp"

namespace borncheck {

// A finite arena of games to quantify axioms over: the canonical games of
// the given states together with every combination of one optional payoff
// swap, one optional negation, and one payoff shift from the k-grid,
// deduplicated and canonically ordered. Axiom instances whose partner game
// falls outside this set are skipped during a search rather than
// constructed on the fly, which keeps searches finite and reproducible.
class GameUniverse {
 public:
  const Observable& observable() const { return observable_; }
  const std::vector<State>& states() const { return states_; }
  const std::vector<Game>& games() const { return games_; }
  const std::vector<Rational>& k_grid() const { return k_grid_; }

  bool contains(const Game& game) const;

 private:
  friend GameUniverse build_universe(Observable, std::vector<State>,
                                     std::vector<Rational>, std::size_t);
  Observable observable_{{Rational(0)}};
  std::vector<State> states_;
  std::vector<Game> games_;
  std::vector<Rational> k_grid_;
};

inline constexpr std::size_t kDefaultUniverseCap = 1'000'000;

// Throws UniverseTooLarge when the closure would exceed `cap` games, and
// ObservableMismatch when a state lives on a different observable.
GameUniverse build_universe(Observable observable, std::vector<State> states,
                            std::vector<Rational> k_grid,
                            std::size_t cap = kDefaultUniverseCap);

// All fractions p/q in [0, 1] with q <= bound, in lowest terms, ascending.
std::vector<Rational> farey_fractions(unsigned bound);

// Every deterministic outcome assignment: one supported eigenvalue per
// distinct state of the universe. Count is the product of the support sizes;
// order is the odometer over states (sorted) and outcomes (ascending).
std::vector<Valuation> enumerate_selectors(const GameUniverse& universe);

// Every assignment of outcome weights per state, where each weight is a
// lowest-terms fraction with denominator <= bound and each state's weights
// sum to 1. bound = 1 yields exactly the deterministic assignments.
std::vector<Valuation> enumerate_weight_valuations(const GameUniverse& universe,
                                                   unsigned denominator_bound);

// The expectation rule written as the convex-weight valuation with q equal
// to the normalized state weights, over the universe's states.
Valuation born_as_convex_weights(const GameUniverse& universe);

struct Witness {
  std::string valuation;
  std::string game;
  Rational value;
  Rational born;
};

struct SearchOutcome {
  std::string family;
  std::vector<Axiom> axioms;  // canonical order
  std::size_t total_candidates = 0;
  std::size_t survivors = 0;
  std::size_t born_agreeing_survivors = 0;
  bool born_forced = false;
  std::vector<std::string> survivor_sample;  // capped descriptors
  std::vector<Witness> witnesses;  // survivor vs born disagreements, capped
};

inline constexpr std::size_t kDefaultWitnessCap = 10;

// Filters the family down to valuations that pass every applicable axiom
// instance over the universe, then asks whether all survivors agree with the
// expectation rule on the canonical games of the equal-weight states.
// Skipped (inapplicable) instances never disqualify a candidate. A cap of 0
// means unlimited witnesses. Throws EmptyAxiomSet, and InapplicableAxiom
// when an axiom has no applicable instance at all.
SearchOutcome run_search(const GameUniverse& universe,
                         const std::vector<Valuation>& family,
                         const std::vector<Axiom>& axioms,
                         std::size_t witness_cap = kDefaultWitnessCap,
                         std::string family_label = "");

}  // namespace borncheck
