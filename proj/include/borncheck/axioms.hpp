#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "borncheck/valuation.hpp"

namespace borncheck {

// The checkable axioms. Names are part of the CLI surface.
enum class Axiom {
  ZeroSum,
  NaiveDisplacement,
  PayoffDisplacement,
  Exchange,
  Pivotal,
  BornGeneral,
};

inline constexpr std::array<Axiom, 6> kAllAxioms = {
    Axiom::ZeroSum,   Axiom::NaiveDisplacement, Axiom::PayoffDisplacement,
    Axiom::Exchange,  Axiom::Pivotal,           Axiom::BornGeneral,
};

std::string_view axiom_name(Axiom axiom);
std::optional<Axiom> axiom_from_name(std::string_view name);

// Zero-sum rule: a game and its payoff-negated partner have values summing
// to zero. Reported as the comparison v(g) + v(-g) vs 0; the note carries
// the two addends.
CheckResult check_zero_sum(const Valuation& v, const Game& game);

// Payoff displacement: adding k to every payoff adds k to the value.
// Comparison: v(g + k) vs k + v(g).
CheckResult check_payoff_displacement(const Valuation& v, const Game& game,
                                      const Rational& k);

// Naive displacement: shifting the eigenvalues themselves by k. Only posed
// for canonical games (throws NonCanonicalGame otherwise). Inapplicable when
// the shifted state does not exist in the spectrum; otherwise the comparison
// v(shifted canonical game) vs k + v(g).
CheckResult check_naive_displacement(const Valuation& v, const Game& game,
                                     const Rational& k);

// Exchange symmetry: v(g) vs v(swap(g)) on a two-outcome game. Throws
// ArityError for other support sizes.
CheckResult check_exchange(const Valuation& v, const Game& game);

// The equal-weight two-outcome canonical game is worth the mean of its
// eigenvalues: v(canonical(state)) vs (x1 + x2) / 2. Throws ArityError /
// UnequalWeights when the state does not fit.
CheckResult check_pivotal(const Valuation& v, const State& state);

// Agreement with the expectation rule: v(g) vs born_value(g).
CheckResult check_born_general(const Valuation& v, const Game& game);

// Default probe offsets for displacement checks on a game: all pairwise
// eigenvalue differences of the support, the two-outcome value -(x1 + x2),
// and {-1, 0, 1}. Sorted, deduplicated.
std::vector<Rational> default_k_grid(const Game& game);

// Replay of the two-outcome equal-weight derivation: shift the canonical
// payoffs by k0 = -(x1 + x2), apply the zero-sum rule to the shifted game,
// and combine the two into the swap identity
//     -v(swapped game) = k0 + v(canonical game),
// which holds whenever both steps do. Whether the value also equals the
// eigenvalue mean is recorded independently as the pivotal check; the replay
// never infers one from the other.
struct DerivationReport {
  CheckResult displacement;   // payoff displacement at k0
  CheckResult zero_sum;       // zero-sum rule at the shifted game
  CheckResult swap_identity;  // -v(swapped) vs k0 + v(canonical)
  CheckResult pivotal;        // v(canonical) vs (x1 + x2) / 2
  std::map<std::string, Rational> values;  // canonical / shifted / swapped
};

DerivationReport replay_derivation(const Valuation& v, const State& state);

// The bundled reference results on the two-branch game with eigenvalues 0
// and 1 at equal weights: the expectation and maxabs values disagree (1/2 vs
// 1) even though maxabs satisfies zero-sum and payoff displacement, the
// naive displacement reading either refers to a nonexistent state or is
// outright violated, and the step that actually separates the two rules is
// exchange symmetry. This bundle is what the `reproduce` command renders and
// pins byte-for-byte.
struct ReferenceReport {
  Game game;                    // canonical game on spectrum {0, 1}
  Rational born;                // 1/2
  Rational maxabs;              // 1
  CheckResult pivotal_born;     // Holds
  CheckResult pivotal_maxabs;   // Violated: 1 vs 1/2
  CheckResult naive_missing;    // spectrum {0, 1}, k = -1: Inapplicable
  CheckResult naive_violated;   // spectrum {-1, 0, 1}, k = -1: -1 vs 0
  CheckResult displacement;     // maxabs, k = -1: Holds
  DerivationReport derivation;  // maxabs
  CheckResult exchange;         // maxabs: 1 vs 0
};

ReferenceReport reference_report();

}  // namespace borncheck
