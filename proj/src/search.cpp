#include "borncheck/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace borncheck {

namespace {

// One posed axiom instance. `game` indexes into the universe's game list;
// displacement instances carry their offset.
struct Instance {
  Axiom axiom;
  std::size_t game;
  std::optional<Rational> k;
};

CheckResult run_instance(const Valuation& v, const GameUniverse& universe,
                         const Instance& instance) {
  const Game& game = universe.games()[instance.game];
  switch (instance.axiom) {
    case Axiom::ZeroSum:
      return check_zero_sum(v, game);
    case Axiom::NaiveDisplacement:
      return check_naive_displacement(v, game, *instance.k);
    case Axiom::PayoffDisplacement:
      return check_payoff_displacement(v, game, *instance.k);
    case Axiom::Exchange:
      return check_exchange(v, game);
    case Axiom::Pivotal:
      return check_pivotal(v, game.state());
    case Axiom::BornGeneral:
      return check_born_general(v, game);
  }
  fail(Errc::InapplicableAxiom, "unreachable axiom");
}

std::vector<Instance> build_instances(const GameUniverse& universe,
                                      const std::vector<Axiom>& axioms) {
  std::vector<Instance> out;
  const auto& games = universe.games();
  for (Axiom axiom : axioms) {
    std::size_t before = out.size();
    for (std::size_t i = 0; i < games.size(); ++i) {
      const Game& game = games[i];
      switch (axiom) {
        case Axiom::ZeroSum:
          if (universe.contains(negate_payoffs(game))) {
            out.push_back({axiom, i, std::nullopt});
          }
          break;
        case Axiom::PayoffDisplacement:
          for (const Rational& k : universe.k_grid()) {
            if (universe.contains(shift_payoffs(game, k))) {
              out.push_back({axiom, i, k});
            }
          }
          break;
        case Axiom::NaiveDisplacement:
          if (!game.is_canonical()) break;
          for (const Rational& k : universe.k_grid()) {
            StateShiftResult shifted = shift_state(game, k);
            // A shifted state that does not exist is an inapplicable
            // instance by definition; keep it so the skip is recorded per
            // candidate, but drop shifts landing outside the universe.
            if (shifted.exists() && !universe.contains(*shifted.game)) continue;
            out.push_back({axiom, i, k});
          }
          break;
        case Axiom::Exchange:
          if (game.support_size() == 2 &&
              universe.contains(swap_payoffs(game))) {
            out.push_back({axiom, i, std::nullopt});
          }
          break;
        case Axiom::Pivotal:
          // One instance per qualifying state; its canonical game is always
          // in the closure.
          if (game.is_canonical() && game.support_size() == 2 &&
              game.state().equal_weights()) {
            out.push_back({axiom, i, std::nullopt});
          }
          break;
        case Axiom::BornGeneral:
          out.push_back({axiom, i, std::nullopt});
          break;
      }
    }
    if (out.size() == before) {
      fail(Errc::InapplicableAxiom,
           std::string(axiom_name(axiom)) +
               " has no applicable instance in this universe");
    }
  }
  return out;
}

std::string join_names(const std::vector<Axiom>& axioms) {
  std::string out;
  for (Axiom axiom : axioms) {
    if (!out.empty()) out += ", ";
    out += axiom_name(axiom);
  }
  return out;
}

}  // namespace

bool GameUniverse::contains(const Game& game) const {
  return std::binary_search(games_.begin(), games_.end(), game);
}

GameUniverse build_universe(Observable observable, std::vector<State> states,
                            std::vector<Rational> k_grid, std::size_t cap) {
  GameUniverse universe;
  universe.observable_ = std::move(observable);

  for (const State& state : states) {
    if (state.observable() != universe.observable_) {
      fail(Errc::ObservableMismatch,
           "state " + state.str() + " lives on " + state.observable().str() +
               ", not on " + universe.observable_.str());
    }
  }
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  universe.states_ = std::move(states);

  k_grid.push_back(Rational(0));
  std::sort(k_grid.begin(), k_grid.end());
  k_grid.erase(std::unique(k_grid.begin(), k_grid.end()), k_grid.end());
  universe.k_grid_ = std::move(k_grid);

  std::set<Game> closure;
  auto insert = [&](const Game& game) {
    closure.insert(game);
    if (closure.size() > cap) {
      fail(Errc::UniverseTooLarge, "closure exceeds cap of " +
                                       std::to_string(cap) + " games");
    }
  };

  for (const State& state : universe.states_) {
    std::vector<Game> bases{canonical_game(state)};
    if (state.support_size() == 2) bases.push_back(swap_payoffs(bases[0]));
    std::size_t base_count = bases.size();
    for (std::size_t i = 0; i < base_count; ++i) {
      bases.push_back(negate_payoffs(bases[i]));
    }
    for (const Game& base : bases) {
      for (const Rational& k : universe.k_grid_) {
        insert(shift_payoffs(base, k));
      }
    }
  }
  universe.games_.assign(closure.begin(), closure.end());
  return universe;
}

std::vector<Rational> farey_fractions(unsigned bound) {
  if (bound < 1) fail(Errc::ConfigError, "denominator bound must be >= 1");
  std::vector<Rational> out;
  for (unsigned q = 1; q <= bound; ++q) {
    for (unsigned p = 0; p <= q; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Weight vectors over `support` with entries from the Farey set of the given
// bound, summing to 1. Lexicographic in the support order.
std::vector<std::map<Rational, Rational>> weight_vectors(
    const std::vector<Rational>& support, unsigned bound) {
  std::vector<Rational> fractions = farey_fractions(bound);
  std::vector<std::map<Rational, Rational>> out;
  std::map<Rational, Rational> current;

  auto fits = [&](const Rational& r) {
    return r.sign() >= 0 && r <= Rational(1) &&
           r.denominator() <= Rational::Int(bound);
  };

  auto recurse = [&](auto&& self, std::size_t index,
                     const Rational& remaining) -> void {
    if (index + 1 == support.size()) {
      if (fits(remaining)) {
        current[support[index]] = remaining;
        out.push_back(current);
        current.erase(support[index]);
      }
      return;
    }
    for (const Rational& q : fractions) {
      if (q > remaining) break;
      current[support[index]] = q;
      self(self, index + 1, remaining - q);
      current.erase(support[index]);
    }
  };
  recurse(recurse, 0, Rational(1));
  return out;
}

std::string describe_choice(const State& state, const Rational& outcome) {
  return state.str() + "->" + outcome.str();
}

std::string describe_weights(const State& state,
                             const std::map<Rational, Rational>& weights) {
  std::string out = state.str() + "->(";
  bool sep = false;
  for (const auto& [eigenvalue, q] : weights) {
    if (sep) out += ", ";
    out += eigenvalue.str() + ":" + q.str();
    sep = true;
  }
  out += ')';
  return out;
}

void guard_family_size(std::size_t count, std::size_t factor) {
  if (factor != 0 && count > kDefaultUniverseCap / factor) {
    fail(Errc::UniverseTooLarge, "valuation family exceeds cap of " +
                                     std::to_string(kDefaultUniverseCap));
  }
}

}  // namespace

std::vector<Valuation> enumerate_selectors(const GameUniverse& universe) {
  const auto& states = universe.states();
  std::vector<std::vector<Rational>> supports;
  std::size_t count = 1;
  for (const State& state : states) {
    supports.push_back(state.support());
    guard_family_size(count, supports.back().size());
    count *= supports.back().size();
  }

  std::vector<Valuation> out;
  out.reserve(count);
  std::vector<std::size_t> pick(states.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    std::map<State, Rational> choices;
    std::string name = "selector[";
    for (std::size_t i = 0; i < states.size(); ++i) {
      const Rational& outcome = supports[i][pick[i]];
      choices.emplace(states[i], outcome);
      if (i > 0) name += "; ";
      name += describe_choice(states[i], outcome);
    }
    name += ']';
    out.push_back(Valuation::from_selector(
        table_selector(std::move(name), std::move(choices))));
    // odometer, last state fastest
    for (std::size_t i = states.size(); i-- > 0;) {
      if (++pick[i] < supports[i].size()) break;
      pick[i] = 0;
    }
  }
  return out;
}

std::vector<Valuation> enumerate_weight_valuations(
    const GameUniverse& universe, unsigned denominator_bound) {
  const auto& states = universe.states();
  std::vector<std::vector<std::map<Rational, Rational>>> per_state;
  std::size_t count = 1;
  for (const State& state : states) {
    per_state.push_back(weight_vectors(state.support(), denominator_bound));
    guard_family_size(count, per_state.back().size());
    count *= per_state.back().size();
  }

  std::vector<Valuation> out;
  out.reserve(count);
  std::vector<std::size_t> pick(states.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    std::map<State, std::map<Rational, Rational>> table;
    std::string name = "weights[";
    for (std::size_t i = 0; i < states.size(); ++i) {
      const auto& weights = per_state[i][pick[i]];
      table.emplace(states[i], weights);
      if (i > 0) name += "; ";
      name += describe_weights(states[i], weights);
    }
    name += ']';
    out.push_back(Valuation::convex_weights(std::move(name), std::move(table)));
    for (std::size_t i = states.size(); i-- > 0;) {
      if (++pick[i] < per_state[i].size()) break;
      pick[i] = 0;
    }
  }
  return out;
}

Valuation born_as_convex_weights(const GameUniverse& universe) {
  std::map<State, std::map<Rational, Rational>> table;
  std::string name = "weights[";
  bool sep = false;
  for (const State& state : universe.states()) {
    table.emplace(state, state.normalized());
    if (sep) name += "; ";
    name += describe_weights(state, state.normalized());
    sep = true;
  }
  name += ']';
  return Valuation::convex_weights(std::move(name), std::move(table));
}

SearchOutcome run_search(const GameUniverse& universe,
                         const std::vector<Valuation>& family,
                         const std::vector<Axiom>& axioms,
                         std::size_t witness_cap, std::string family_label) {
  if (axioms.empty()) {
    fail(Errc::EmptyAxiomSet, "a search needs at least one axiom");
  }
  std::vector<Axiom> sorted_axioms = axioms;
  std::sort(sorted_axioms.begin(), sorted_axioms.end());
  sorted_axioms.erase(
      std::unique(sorted_axioms.begin(), sorted_axioms.end()),
      sorted_axioms.end());

  std::vector<Instance> instances = build_instances(universe, sorted_axioms);

  // Agreement probes: canonical games of the equal-weight states.
  std::vector<Game> probes;
  for (const State& state : universe.states()) {
    if (state.equal_weights()) probes.push_back(canonical_game(state));
  }

  SearchOutcome outcome;
  outcome.family = family_label.empty()
                       ? "(" + std::to_string(family.size()) + " valuations)"
                       : std::move(family_label);
  outcome.axioms = sorted_axioms;
  outcome.total_candidates = family.size();

  auto capped = [&](std::size_t n) {
    return witness_cap == 0 || n < witness_cap;
  };

  for (const Valuation& candidate : family) {
    bool survives = true;
    for (const Instance& instance : instances) {
      if (run_instance(candidate, universe, instance).violated()) {
        survives = false;
        break;
      }
    }
    if (!survives) continue;

    outcome.survivors += 1;
    if (capped(outcome.survivor_sample.size())) {
      outcome.survivor_sample.push_back(candidate.descriptor());
    }

    bool agrees = true;
    for (const Game& probe : probes) {
      Rational expected = born_value(probe);
      try {
        Rational got = candidate(probe);
        if (got == expected) continue;
        agrees = false;
        if (capped(outcome.witnesses.size())) {
          outcome.witnesses.push_back(
              {candidate.descriptor(), probe.str(), got, expected});
        }
      } catch (const Error& e) {
        // A probe the valuation cannot value cannot witness a disagreement;
        // skipped, like any other inapplicable instance.
        if (!is_valuation_error(e.code())) throw;
      }
    }
    if (agrees) outcome.born_agreeing_survivors += 1;
  }

  outcome.born_forced = outcome.survivors > 0 &&
                        outcome.born_agreeing_survivors == outcome.survivors;
  if (!outcome.born_forced && outcome.survivors > 0 &&
      outcome.witnesses.empty()) {
    throw std::logic_error("disagreeing survivors produced no witness ({" +
                           join_names(sorted_axioms) + "})");
  }
  return outcome;
}

}  // namespace borncheck
