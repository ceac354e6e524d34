#include "borncheck/valuation.hpp"

#include <utility>

namespace borncheck {

Rational born_value(const Game& game) {
  Rational acc;
  for (const auto& [eigenvalue, weight] : game.state().normalized()) {
    acc += weight * game.payoff(eigenvalue);
  }
  return acc;
}

Selector::Selector(std::string name, Rule rule)
    : name_(std::move(name)), rule_(std::move(rule)) {}

Rational Selector::choose(const State& state) const {
  Rational chosen = rule_(state);
  if (!state.weights().contains(chosen)) {
    fail(Errc::SelectorRange, "selector " + name_ + " chose " + chosen.str() +
                                  " outside the support of " + state.str());
  }
  return chosen;
}

Selector maxabs_selector() {
  return Selector("maxabs", [](const State& state) {
    Rational best;
    Rational best_abs(-1);
    bool tied = false;
    for (const auto& [eigenvalue, weight] : state.weights()) {
      Rational mag = eigenvalue.abs();
      if (mag > best_abs) {
        best = eigenvalue;
        best_abs = mag;
        tied = false;
      } else if (mag == best_abs) {
        tied = true;
      }
    }
    if (tied) {
      fail(Errc::TieUndefined,
           "maxabs undefined on " + state.str() +
               ": two outcomes share the largest absolute value " +
               best_abs.str());
    }
    return best;
  });
}

Selector table_selector(std::string name, std::map<State, Rational> choices) {
  auto table = std::make_shared<std::map<State, Rational>>(std::move(choices));
  std::string label = name;
  return Selector(std::move(name), [table, label](const State& state) {
    auto it = table->find(state);
    if (it == table->end()) {
      fail(Errc::SelectorDomain,
           "selector " + label + " has no choice for state " + state.str());
    }
    return it->second;
  });
}

Rational selector_value(const Selector& selector, const Game& game) {
  return game.payoff(selector.choose(game.state()));
}

Rational convex_weight_value(const std::map<Rational, Rational>& weights,
                             const Game& game) {
  const auto& payoffs = game.payoffs();
  if (weights.size() != payoffs.size()) {
    fail(Errc::WeightDomainMismatch,
         "outcome weights must be keyed by the support of " +
             game.state().str());
  }
  Rational total;
  Rational acc;
  auto pit = payoffs.begin();
  for (const auto& [eigenvalue, q] : weights) {
    if (pit->first != eigenvalue) {
      fail(Errc::WeightDomainMismatch,
           "outcome weight keyed by " + eigenvalue.str() +
               " which is not in the support of " + game.state().str());
    }
    if (q.sign() < 0) {
      fail(Errc::WeightsNotNormalized,
           "negative outcome weight " + q.str() + " on " + eigenvalue.str());
    }
    total += q;
    acc += q * pit->second;
    ++pit;
  }
  if (total != Rational(1)) {
    fail(Errc::WeightsNotNormalized,
         "outcome weights sum to " + total.str() + ", expected 1");
  }
  return acc;
}

Valuation Valuation::born() { return Valuation(Kind::Born, "born"); }

Valuation Valuation::from_selector(Selector selector) {
  Valuation v(Kind::Selector, selector.name());
  v.selector_ = std::make_shared<Selector>(std::move(selector));
  return v;
}

Valuation Valuation::convex_weights(
    std::string name, std::map<State, std::map<Rational, Rational>> weights) {
  Valuation v(Kind::ConvexWeights, std::move(name));
  v.convex_ = std::make_shared<
      const std::map<State, std::map<Rational, Rational>>>(std::move(weights));
  return v;
}

Valuation Valuation::table(std::string name, std::map<Game, Rational> values) {
  Valuation v(Kind::Table, std::move(name));
  v.table_ =
      std::make_shared<const std::map<Game, Rational>>(std::move(values));
  return v;
}

Rational Valuation::value(const Game& game) const {
  switch (kind_) {
    case Kind::Born:
      return born_value(game);
    case Kind::Selector:
      return selector_value(*selector_, game);
    case Kind::ConvexWeights: {
      auto it = convex_->find(game.state());
      if (it == convex_->end()) {
        fail(Errc::WeightDomainMismatch,
             descriptor_ + " has no outcome weights for state " +
                 game.state().str());
      }
      return convex_weight_value(it->second, game);
    }
    case Kind::Table: {
      auto it = table_->find(game);
      if (it == table_->end()) {
        fail(Errc::TableMiss,
             descriptor_ + " has no entry for game " + game.str());
      }
      return it->second;
    }
  }
  fail(Errc::TableMiss, "unreachable valuation kind");
}

}  // namespace borncheck
