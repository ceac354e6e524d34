#include "borncheck/axioms.hpp"

#include <algorithm>

namespace borncheck {

namespace {

// Runs a check body, converting valuation-application errors into
// Inapplicable: an axiom cannot constrain a game the valuation cannot value.
template <typename Fn>
CheckResult guarded(Fn&& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (is_valuation_error(e.code())) return CheckResult::inapplicable(e.what());
    throw;
  }
}

void require_two_equal_branches(const State& state) {
  if (state.support_size() != 2) {
    fail(Errc::ArityError, "state " + state.str() + " has " +
                               std::to_string(state.support_size()) +
                               " outcomes, need exactly 2");
  }
  if (!state.equal_weights()) {
    fail(Errc::UnequalWeights, "state " + state.str() +
                                   " does not have equal weights on its two "
                                   "outcomes");
  }
}

}  // namespace

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::ZeroSum: return "ZeroSum";
    case Axiom::NaiveDisplacement: return "NaiveDisplacement";
    case Axiom::PayoffDisplacement: return "PayoffDisplacement";
    case Axiom::Exchange: return "Exchange";
    case Axiom::Pivotal: return "Pivotal";
    case Axiom::BornGeneral: return "BornGeneral";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(std::string_view name) {
  for (Axiom axiom : kAllAxioms) {
    if (axiom_name(axiom) == name) return axiom;
  }
  return std::nullopt;
}

CheckResult check_zero_sum(const Valuation& v, const Game& game) {
  return guarded([&] {
    Rational a = v(game);
    Rational b = v(negate_payoffs(game));
    return CheckResult::compare(a + b, Rational(0),
                                "v(g)=" + a.str() + ", v(-g)=" + b.str());
  });
}

CheckResult check_payoff_displacement(const Valuation& v, const Game& game,
                                      const Rational& k) {
  return guarded([&] {
    Rational shifted = v(shift_payoffs(game, k));
    Rational base = v(game);
    return CheckResult::compare(shifted, k + base, "k=" + k.str());
  });
}

CheckResult check_naive_displacement(const Valuation& v, const Game& game,
                                     const Rational& k) {
  if (!game.is_canonical()) {
    fail(Errc::NonCanonicalGame,
         "naive displacement is posed for canonical payoffs only, got " +
             game.str());
  }
  StateShiftResult shifted = shift_state(game, k);
  if (!shifted.exists()) {
    return CheckResult::inapplicable(
        "eigenvalue " + shifted.missing_eigenvalue->str() +
        " not in spectrum " + game.state().observable().str());
  }
  return guarded([&] {
    Rational moved = v(*shifted.game);
    Rational base = v(game);
    return CheckResult::compare(moved, k + base, "k=" + k.str());
  });
}

CheckResult check_exchange(const Valuation& v, const Game& game) {
  Game swapped = swap_payoffs(game);  // throws ArityError if support != 2
  return guarded(
      [&] { return CheckResult::compare(v(game), v(swapped)); });
}

CheckResult check_pivotal(const Valuation& v, const State& state) {
  require_two_equal_branches(state);
  auto support = state.support();
  Rational mean = (support[0] + support[1]) / Rational(2);
  return guarded([&] {
    return CheckResult::compare(v(canonical_game(state)), mean,
                                "mean of " + support[0].str() + " and " +
                                    support[1].str());
  });
}

CheckResult check_born_general(const Valuation& v, const Game& game) {
  return guarded(
      [&] { return CheckResult::compare(v(game), born_value(game)); });
}

std::vector<Rational> default_k_grid(const Game& game) {
  std::vector<Rational> grid{Rational(-1), Rational(0), Rational(1)};
  auto support = game.state().support();
  for (const Rational& a : support) {
    for (const Rational& b : support) {
      grid.push_back(a - b);
    }
  }
  if (support.size() == 2) grid.push_back(-(support[0] + support[1]));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

DerivationReport replay_derivation(const Valuation& v, const State& state) {
  require_two_equal_branches(state);
  auto support = state.support();
  const Rational& x1 = support[0];
  const Rational& x2 = support[1];
  Rational k0 = -(x1 + x2);

  Game base = canonical_game(state);
  Game shifted = shift_payoffs(base, k0);  // payoffs x1 -> -x2, x2 -> -x1
  Game swapped = swap_payoffs(base);       // the negation of `shifted`

  DerivationReport report;
  try {
    Rational v_base = v(base);
    Rational v_shifted = v(shifted);
    Rational v_swapped = v(swapped);

    report.displacement =
        CheckResult::compare(v_shifted, k0 + v_base, "k=" + k0.str());
    report.zero_sum = CheckResult::compare(
        v_shifted + v_swapped, Rational(0),
        "v(g)=" + v_shifted.str() + ", v(-g)=" + v_swapped.str());
    report.swap_identity = CheckResult::compare(-v_swapped, k0 + v_base);
    report.values.emplace("canonical", v_base);
    report.values.emplace("shifted", v_shifted);
    report.values.emplace("swapped", v_swapped);
  } catch (const Error& e) {
    if (!is_valuation_error(e.code())) throw;
    CheckResult skipped = CheckResult::inapplicable(e.what());
    report.displacement = skipped;
    report.zero_sum = skipped;
    report.swap_identity = skipped;
    report.pivotal = skipped;
    return report;
  }

  report.pivotal = check_pivotal(v, state);

  // The swap identity is forced by the two steps above; a failure here is a
  // broken arithmetic invariant, not a property of the valuation.
  if (report.displacement.holds() && report.zero_sum.holds() &&
      !report.swap_identity.holds()) {
    throw std::logic_error(
        "swap identity must follow from displacement and zero-sum");
  }
  return report;
}

ReferenceReport reference_report() {
  Observable narrow({Rational(0), Rational(1)});
  State state(narrow, {{Rational(0), Rational(1)}, {Rational(1), Rational(1)}});
  Game game = canonical_game(state);

  Valuation born = Valuation::born();
  Valuation maxabs = Valuation::from_selector(maxabs_selector());

  Observable wide({Rational(-1), Rational(0), Rational(1)});
  State wide_state(wide,
                   {{Rational(0), Rational(1)}, {Rational(1), Rational(1)}});
  Game wide_game = canonical_game(wide_state);

  Rational k(-1);
  return ReferenceReport{
      .game = game,
      .born = born(game),
      .maxabs = maxabs(game),
      .pivotal_born = check_pivotal(born, state),
      .pivotal_maxabs = check_pivotal(maxabs, state),
      .naive_missing = check_naive_displacement(maxabs, game, k),
      .naive_violated = check_naive_displacement(maxabs, wide_game, k),
      .displacement = check_payoff_displacement(maxabs, game, k),
      .derivation = replay_derivation(maxabs, state),
      .exchange = check_exchange(maxabs, game),
  };
}

}  // namespace borncheck
