#include <doctest.h>

#include <functional>

#include "test_helpers.hpp"

using namespace borncheck;
using namespace borncheck::testing;

namespace {

Errc code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::ConfigError;
}

}  // namespace

TEST_CASE("observables sort their spectrum and reject bad input") {
  CHECK(obs({0, 1}).spectrum() == std::vector<Rational>{rat(0), rat(1)});
  CHECK(obs({1, 0}).spectrum() == std::vector<Rational>{rat(0), rat(1)});
  CHECK(obs({5}).spectrum() == std::vector<Rational>{rat(5)});
  CHECK(obs({1, 0}) == obs({0, 1}));
  CHECK(code_of([] { obs({1, 1}); }) == Errc::DuplicateEigenvalue);
  CHECK(code_of([] { Observable({}); }) == Errc::EmptySpectrum);
  CHECK(obs({-1, 0, 1}).str() == "{-1, 0, 1}");
  CHECK(obs({0, 1}).contains(rat(1)));
  CHECK_FALSE(obs({0, 1}).contains(rat(-1)));
}

TEST_CASE("states validate weights and normalize") {
  Observable o = obs({0, 1, 4});
  State equal = state(o, {{0, 1}, {1, 1}});
  CHECK(equal.normalized().at(rat(0)) == rat(1, 2));
  CHECK(equal.str() == "{0:1/2, 1:1/2}");
  CHECK(equal.equal_weights());

  State single = state(o, {{1, 7}});
  CHECK(single.support() == std::vector<Rational>{rat(1)});
  CHECK(single.normalized().at(rat(1)) == rat(1));

  CHECK(state(o, {{0, 2}, {1, 2}}) == equal);  // scale invariance

  State dropped = state(o, {{0, 0}, {1, 7}});
  CHECK(dropped == single);  // zero weights dropped
  CHECK(dropped.support_size() == 1);

  CHECK(code_of([&] { state(o, {{2, 1}}); }) == Errc::UnknownEigenvalue);
  CHECK(code_of([&] { state(o, {{0, -1}}); }) == Errc::NegativeWeight);
  CHECK(code_of([&] { state(o, {{0, 0}}); }) == Errc::ZeroState);
}

TEST_CASE("canonical games pay the measured eigenvalue") {
  Observable o = obs({-1, 0, 1, 5});
  Game g = canonical_game(state(o, {{0, 1}, {1, 1}}));
  CHECK(g.payoff(rat(0)) == rat(0));
  CHECK(g.payoff(rat(1)) == rat(1));
  CHECK(g.is_canonical());

  CHECK(canonical_game(state(o, {{5, 1}})).payoff(rat(5)) == rat(5));

  Game negative_branch = canonical_game(state(o, {{-1, 1}, {0, 1}}));
  CHECK(negative_branch.payoff(rat(-1)) == rat(-1));
  CHECK(negative_branch.payoff(rat(0)) == rat(0));
}

TEST_CASE("payoff domain must match the support exactly") {
  Observable o = obs({0, 1});
  State s = state(o, {{0, 1}, {1, 1}});
  CHECK(code_of([&] { game(s, {{0, 3}}); }) == Errc::PayoffDomainMismatch);
  CHECK(code_of([&] {
          Game(s, {{rat(0), rat(1)}, {rat(1), rat(0)}, {rat(2), rat(2)}});
        }) == Errc::PayoffDomainMismatch);
}

TEST_CASE("shift_payoffs adds k pointwise") {
  Observable o = obs({0, 1});
  Game g = canonical_game(state(o, {{0, 1}, {1, 1}}));

  Game shifted = shift_payoffs(g, rat(-1));
  CHECK(shifted.payoff(rat(0)) == rat(-1));
  CHECK(shifted.payoff(rat(1)) == rat(0));
  CHECK(shifted.state() == g.state());

  CHECK(shift_payoffs(g, rat(0)) == g);

  Game by_three = shift_payoffs(g, rat(3));
  CHECK(by_three.payoff(rat(0)) == rat(3));
  CHECK(by_three.payoff(rat(1)) == rat(4));
}

TEST_CASE("negate_payoffs flips signs and is an involution") {
  Observable o = obs({0, 1});
  Game g = canonical_game(state(o, {{0, 1}, {1, 1}}));

  Game negated = negate_payoffs(g);
  CHECK(negated.payoff(rat(0)) == rat(0));
  CHECK(negated.payoff(rat(1)) == rat(-1));

  Game zeros = game(state(o, {{0, 1}, {1, 1}}), {{0, 0}, {1, 0}});
  CHECK(negate_payoffs(zeros) == zeros);
}

TEST_CASE("swap_payoffs exchanges the two payoffs") {
  Observable o = obs({0, 1, 2});
  Game g = canonical_game(state(o, {{0, 1}, {1, 1}}));

  Game swapped = swap_payoffs(g);
  CHECK(swapped.payoff(rat(0)) == rat(1));
  CHECK(swapped.payoff(rat(1)) == rat(0));

  Game constant = game(state(o, {{0, 1}, {1, 1}}), {{0, 9}, {1, 9}});
  CHECK(swap_payoffs(constant) == constant);

  Game three = canonical_game(state(o, {{0, 1}, {1, 1}, {2, 1}}));
  CHECK(code_of([&] { swap_payoffs(three); }) == Errc::ArityError);
}

TEST_CASE("shift_state reports a missing eigenvalue or moves the weights") {
  Observable narrow = obs({0, 1});
  Game g = canonical_game(state(narrow, {{0, 1}, {1, 1}}));

  StateShiftResult missing = shift_state(g, rat(-1));
  CHECK_FALSE(missing.exists());
  CHECK(missing.missing_eigenvalue == rat(-1));

  Observable wide = obs({-1, 0, 1});
  Game wide_game = canonical_game(state(wide, {{0, 1}, {1, 1}}));
  StateShiftResult moved = shift_state(wide_game, rat(-1));
  REQUIRE(moved.exists());
  CHECK(moved.game->state() == state(wide, {{-1, 1}, {0, 1}}));
  CHECK(moved.game->is_canonical());

  StateShiftResult same = shift_state(wide_game, rat(0));
  REQUIRE(same.exists());
  CHECK(*same.game == wide_game);
}

TEST_CASE("check results keep values and status consistent") {
  CheckResult holds = CheckResult::compare(rat(1, 2), rat(1, 2));
  CHECK(holds.holds());
  CHECK(holds.lhs() == rat(1, 2));
  CHECK(holds.rhs() == rat(1, 2));

  CheckResult violated = CheckResult::compare(rat(1), rat(1, 2), "why");
  CHECK(violated.violated());
  CHECK(violated.note() == "why");

  CheckResult skipped = CheckResult::inapplicable("missing eigenvalue");
  CHECK_FALSE(skipped.applicable());
  CHECK_FALSE(skipped.lhs().has_value());
  CHECK_FALSE(skipped.rhs().has_value());
}

TEST_CASE("property: scaling weights never changes a state or any transform") {
  Gen gen(4001);
  for (int i = 0; i < 100; ++i) {
    Observable o = gen.observable(2, 4);
    State s = gen.state_on(o);
    Rational c = gen.positive_rational();

    std::map<Rational, Rational> scaled;
    for (const auto& [eigenvalue, weight] : s.weights()) {
      scaled.emplace(eigenvalue, weight * c);
    }
    State t(o, scaled);
    CHECK(s == t);

    Game gs = canonical_game(s);
    Game gt = canonical_game(t);
    CHECK(gs == gt);
    Rational k = gen.rational();
    CHECK(shift_payoffs(gs, k) == shift_payoffs(gt, k));
    CHECK(negate_payoffs(gs) == negate_payoffs(gt));
    if (s.support_size() == 2) CHECK(swap_payoffs(gs) == swap_payoffs(gt));
    CHECK(shift_state(gs, k).game == shift_state(gt, k).game);
  }
}

TEST_CASE("property: transformation algebra") {
  Gen gen(4002);
  for (int i = 0; i < 100; ++i) {
    Observable o = gen.observable(2, 4);
    Game g = gen.game_on(gen.state_on(o));
    Rational a = gen.rational();
    Rational b = gen.rational();

    CHECK(shift_payoffs(shift_payoffs(g, a), b) == shift_payoffs(g, a + b));
    CHECK(negate_payoffs(negate_payoffs(g)) == g);
    if (g.support_size() == 2) CHECK(swap_payoffs(swap_payoffs(g)) == g);
  }
}

TEST_CASE("property: constructor input order never matters") {
  Gen gen(4003);
  for (int i = 0; i < 50; ++i) {
    Observable o = gen.observable(2, 5);
    std::vector<Rational> reversed(o.spectrum().rbegin(), o.spectrum().rend());
    CHECK(Observable(reversed) == o);

    State s = gen.state_on(o);
    CHECK(canonical_game(s).str() == canonical_game(State(o, s.weights())).str());
  }
}
