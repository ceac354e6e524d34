#include "borncheck/game.hpp"

#include <algorithm>

namespace borncheck {

Observable::Observable(std::vector<Rational> eigenvalues)
    : spectrum_(std::move(eigenvalues)) {
  if (spectrum_.empty()) fail(Errc::EmptySpectrum, "spectrum must be nonempty");
  std::sort(spectrum_.begin(), spectrum_.end());
  auto dup = std::adjacent_find(spectrum_.begin(), spectrum_.end());
  if (dup != spectrum_.end()) {
    fail(Errc::DuplicateEigenvalue,
         "eigenvalue " + dup->str() + " listed twice");
  }
}

bool Observable::contains(const Rational& eigenvalue) const {
  return std::binary_search(spectrum_.begin(), spectrum_.end(), eigenvalue);
}

std::string Observable::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < spectrum_.size(); ++i) {
    if (i > 0) out += ", ";
    out += spectrum_[i].str();
  }
  out += '}';
  return out;
}

State::State(Observable observable, std::map<Rational, Rational> weights)
    : observable_(std::move(observable)) {
  Rational total;
  for (const auto& [eigenvalue, weight] : weights) {
    if (!observable_.contains(eigenvalue)) {
      fail(Errc::UnknownEigenvalue,
           "weight on " + eigenvalue.str() + " outside spectrum " +
               observable_.str());
    }
    if (weight.sign() < 0) {
      fail(Errc::NegativeWeight,
           "weight " + weight.str() + " on eigenvalue " + eigenvalue.str());
    }
    if (weight.sign() > 0) {
      weights_.emplace(eigenvalue, weight);
      total += weight;
    }
  }
  if (weights_.empty()) fail(Errc::ZeroState, "all weights are zero");
  for (const auto& [eigenvalue, weight] : weights_) {
    normalized_.emplace(eigenvalue, weight / total);
  }
}

std::vector<Rational> State::support() const {
  std::vector<Rational> out;
  out.reserve(weights_.size());
  for (const auto& [eigenvalue, weight] : weights_) out.push_back(eigenvalue);
  return out;
}

bool State::equal_weights() const {
  const Rational& first = weights_.begin()->second;
  for (const auto& [eigenvalue, weight] : weights_) {
    if (weight != first) return false;
  }
  return true;
}

std::string State::str() const {
  std::string out = "{";
  bool sep = false;
  for (const auto& [eigenvalue, weight] : normalized_) {
    if (sep) out += ", ";
    out += eigenvalue.str() + ":" + weight.str();
    sep = true;
  }
  out += '}';
  return out;
}

std::strong_ordering operator<=>(const State& a, const State& b) {
  if (auto c = a.observable_ <=> b.observable_; c != 0) return c;
  return a.normalized_ <=> b.normalized_;
}

Game::Game(State state, std::map<Rational, Rational> payoffs)
    : state_(std::move(state)), payoffs_(std::move(payoffs)) {
  const auto& weights = state_.weights();
  if (payoffs_.size() != weights.size() ||
      !std::equal(payoffs_.begin(), payoffs_.end(), weights.begin(),
                  [](const auto& p, const auto& w) {
                    return p.first == w.first;
                  })) {
    fail(Errc::PayoffDomainMismatch,
         "payoff domain must be exactly the support " + state_.str());
  }
}

const Rational& Game::payoff(const Rational& eigenvalue) const {
  auto it = payoffs_.find(eigenvalue);
  if (it == payoffs_.end()) {
    fail(Errc::PayoffDomainMismatch,
         "no payoff for eigenvalue " + eigenvalue.str());
  }
  return it->second;
}

bool Game::is_canonical() const {
  for (const auto& [eigenvalue, payoff] : payoffs_) {
    if (payoff != eigenvalue) return false;
  }
  return true;
}

std::string Game::str() const {
  std::string out = "[" + state_.str() + "; ";
  bool sep = false;
  for (const auto& [eigenvalue, payoff] : payoffs_) {
    if (sep) out += ", ";
    out += eigenvalue.str() + "->" + payoff.str();
    sep = true;
  }
  out += ']';
  return out;
}

std::strong_ordering operator<=>(const Game& a, const Game& b) {
  if (auto c = a.state_ <=> b.state_; c != 0) return c;
  return a.payoffs_ <=> b.payoffs_;
}

Game canonical_game(const State& state) {
  std::map<Rational, Rational> payoffs;
  for (const auto& [eigenvalue, weight] : state.weights()) {
    payoffs.emplace(eigenvalue, eigenvalue);
  }
  return Game(state, std::move(payoffs));
}

Game shift_payoffs(const Game& game, const Rational& k) {
  std::map<Rational, Rational> payoffs;
  for (const auto& [eigenvalue, payoff] : game.payoffs()) {
    payoffs.emplace(eigenvalue, payoff + k);
  }
  return Game(game.state(), std::move(payoffs));
}

Game negate_payoffs(const Game& game) {
  std::map<Rational, Rational> payoffs;
  for (const auto& [eigenvalue, payoff] : game.payoffs()) {
    payoffs.emplace(eigenvalue, -payoff);
  }
  return Game(game.state(), std::move(payoffs));
}

Game swap_payoffs(const Game& game) {
  if (game.support_size() != 2) {
    fail(Errc::ArityError, "payoff swap needs exactly two outcomes, game " +
                               game.str() + " has " +
                               std::to_string(game.support_size()));
  }
  auto it = game.payoffs().begin();
  const auto& [low, low_payoff] = *it;
  const auto& [high, high_payoff] = *std::next(it);
  std::map<Rational, Rational> payoffs;
  payoffs.emplace(low, high_payoff);
  payoffs.emplace(high, low_payoff);
  return Game(game.state(), std::move(payoffs));
}

StateShiftResult shift_state(const Game& game, const Rational& k) {
  const State& state = game.state();
  std::map<Rational, Rational> shifted;
  for (const auto& [eigenvalue, weight] : state.weights()) {
    Rational moved = eigenvalue + k;
    if (!state.observable().contains(moved)) {
      return {std::nullopt, moved};
    }
    shifted.emplace(moved, weight);
  }
  return {canonical_game(State(state.observable(), std::move(shifted))),
          std::nullopt};
}

const char* check_status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Holds: return "Holds";
    case CheckStatus::Violated: return "Violated";
    case CheckStatus::Inapplicable: return "Inapplicable";
  }
  return "?";
}

CheckResult CheckResult::compare(Rational lhs, Rational rhs,
                                 std::string note) {
  CheckResult out;
  out.status_ = lhs == rhs ? CheckStatus::Holds : CheckStatus::Violated;
  out.lhs_ = std::move(lhs);
  out.rhs_ = std::move(rhs);
  out.note_ = std::move(note);
  return out;
}

CheckResult CheckResult::inapplicable(std::string note) {
  CheckResult out;
  out.status_ = CheckStatus::Inapplicable;
  out.note_ = std::move(note);
  return out;
}

}  // namespace borncheck
