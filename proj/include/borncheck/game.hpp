#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "borncheck/rational.hpp"

namespace borncheck {

// Finite spectrum of an observable: distinct eigenvalues, kept sorted
// ascending. Construction order never matters downstream.
class Observable {
 public:
  explicit Observable(std::vector<Rational> eigenvalues);

  const std::vector<Rational>& spectrum() const { return spectrum_; }
  bool contains(const Rational& eigenvalue) const;

  std::string str() const;  // "{-1, 0, 1}"

  friend bool operator==(const Observable&, const Observable&) = default;
  friend std::strong_ordering operator<=>(const Observable&,
                                          const Observable&) = default;

 private:
  std::vector<Rational> spectrum_;
};

// Measurement state at the squared-amplitude level: nonnegative weights over
// a subset of the spectrum. Zero-weight entries are dropped on construction,
// so the stored keys are exactly the support. States compare equal when their
// normalized weights agree (overall scale carries no information).
class State {
 public:
  State(Observable observable, std::map<Rational, Rational> weights);

  const Observable& observable() const { return observable_; }
  const std::map<Rational, Rational>& weights() const { return weights_; }
  const std::map<Rational, Rational>& normalized() const {
    return normalized_;
  }

  std::vector<Rational> support() const;
  std::size_t support_size() const { return weights_.size(); }
  bool equal_weights() const;  // all supported weights identical

  std::string str() const;  // "{0:1/2, 1:1/2}", normalized

  friend bool operator==(const State& a, const State& b) {
    return a.observable_ == b.observable_ && a.normalized_ == b.normalized_;
  }
  friend std::strong_ordering operator<=>(const State& a, const State& b);

 private:
  Observable observable_;
  std::map<Rational, Rational> weights_;     // as given, zeros removed
  std::map<Rational, Rational> normalized_;  // scaled to sum 1
};

// A wager on a measurement: a state plus one payoff per supported outcome.
// The payoff domain must equal the support exactly; payoffs on impossible
// outcomes would be unobservable and would split games that cannot be told
// apart.
class Game {
 public:
  Game(State state, std::map<Rational, Rational> payoffs);

  const State& state() const { return state_; }
  const std::map<Rational, Rational>& payoffs() const { return payoffs_; }
  const Rational& payoff(const Rational& eigenvalue) const;
  std::size_t support_size() const { return payoffs_.size(); }

  // Payoff numerically equal to the measured eigenvalue, everywhere.
  bool is_canonical() const;

  std::string str() const;  // "[{0:1/2, 1:1/2}; 0->0, 1->1]"

  friend bool operator==(const Game& a, const Game& b) {
    return a.state_ == b.state_ && a.payoffs_ == b.payoffs_;
  }
  friend std::strong_ordering operator<=>(const Game& a, const Game& b);

 private:
  State state_;
  std::map<Rational, Rational> payoffs_;
};

// The game whose payoff map sends every supported eigenvalue to itself.
Game canonical_game(const State& state);

// Same state, every payoff increased by k.
Game shift_payoffs(const Game& game, const Rational& k);

// Same state, every payoff negated.
Game negate_payoffs(const Game& game);

// Exchange the two payoffs of a two-outcome game. Throws ArityError
// otherwise.
Game swap_payoffs(const Game& game);

// Result of attempting to shift the state itself: move each supported weight
// from eigenvalue x to x + k. The shifted state only exists when every x + k
// is in the spectrum; when it does, the result carries the canonical game on
// that state. Non-existence is a finding, not an error, so it is reported as
// a value.
struct StateShiftResult {
  std::optional<Game> game;
  std::optional<Rational> missing_eigenvalue;  // first x + k not in spectrum

  bool exists() const { return game.has_value(); }
};

StateShiftResult shift_state(const Game& game, const Rational& k);

enum class CheckStatus { Holds, Violated, Inapplicable };

const char* check_status_name(CheckStatus status);

// Outcome of a single axiom check. Exactly one of two shapes:
//   - a comparison, carrying both sides; Holds iff they are equal;
//   - Inapplicable, carrying only a note saying why the instance could not
//     be posed (required game does not exist, or the valuation is undefined
//     on it).
class CheckResult {
 public:
  CheckResult() = default;  // Inapplicable with an empty note

  static CheckResult compare(Rational lhs, Rational rhs,
                             std::string note = "");
  static CheckResult inapplicable(std::string note);

  CheckStatus status() const { return status_; }
  bool holds() const { return status_ == CheckStatus::Holds; }
  bool violated() const { return status_ == CheckStatus::Violated; }
  bool applicable() const { return status_ != CheckStatus::Inapplicable; }

  const std::optional<Rational>& lhs() const { return lhs_; }
  const std::optional<Rational>& rhs() const { return rhs_; }
  const std::string& note() const { return note_; }

 private:
  CheckStatus status_ = CheckStatus::Inapplicable;
  std::optional<Rational> lhs_;
  std::optional<Rational> rhs_;
  std::string note_;
};

}  // namespace borncheck
