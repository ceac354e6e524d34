#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "borncheck/game.hpp"

namespace borncheck {

// Weight-normalized expectation of the payoffs: sum(w_i * u_i) / sum(w_i)
// over the supported outcomes. The reference rule every other valuation is
// compared against.
Rational born_value(const Game& game);

// A deterministic choice of outcome per state. The rule sees only the state,
// never the payoffs: the chosen outcome is a property of the measurement,
// fixed before any wager is attached. Rules may be partial and signal that by
// throwing (TieUndefined, SelectorDomain).
class Selector {
 public:
  using Rule = std::function<Rational(const State&)>;

  Selector(std::string name, Rule rule);

  const std::string& name() const { return name_; }

  // Applies the rule and verifies the choice lies in the support.
  Rational choose(const State& state) const;

 private:
  std::string name_;
  Rule rule_;
};

// Picks the supported eigenvalue of strictly largest absolute value. Defined
// only when that maximum is unique; a tie throws TieUndefined at application
// time.
Selector maxabs_selector();

// Selector backed by an explicit state -> outcome table. States outside the
// table throw SelectorDomain.
Selector table_selector(std::string name, std::map<State, Rational> choices);

// Value of a game under a selector: the payoff attached to the chosen
// outcome.
Rational selector_value(const Selector& selector, const Game& game);

// Value of a game under explicit outcome weights q: sum(q_x * u_x). The
// weights must be keyed by exactly the game's support, nonnegative, and sum
// to 1. Born is the special case q = normalized state weights.
Rational convex_weight_value(const std::map<Rational, Rational>& weights,
                             const Game& game);

// A value functional on games. Four kinds:
//   Born          - the expectation rule;
//   Selector      - value = payoff at a deterministically chosen outcome;
//   ConvexWeights - per-state outcome weights, value = weighted payoff sum;
//   Table         - explicit game -> value map, partial by construction.
class Valuation {
 public:
  enum class Kind { Born, Selector, ConvexWeights, Table };

  static Valuation born();
  static Valuation from_selector(Selector selector);
  static Valuation convex_weights(
      std::string name, std::map<State, std::map<Rational, Rational>> weights);
  static Valuation table(std::string name, std::map<Game, Rational> values);

  Kind kind() const { return kind_; }
  const std::string& descriptor() const { return descriptor_; }

  Rational value(const Game& game) const;
  Rational operator()(const Game& game) const { return value(game); }

 private:
  Valuation(Kind kind, std::string descriptor) noexcept
      : kind_(kind), descriptor_(std::move(descriptor)) {}

  Kind kind_;
  std::string descriptor_;
  // Engaged according to kind_; shared so Valuation stays cheap to copy
  // during enumeration.
  std::shared_ptr<const Selector> selector_;
  std::shared_ptr<const std::map<State, std::map<Rational, Rational>>>
      convex_;
  std::shared_ptr<const std::map<Game, Rational>> table_;
};

}  // namespace borncheck
