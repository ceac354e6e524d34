#include <doctest.h>

#include "borncheck/config.hpp"
#include "test_helpers.hpp"

using namespace borncheck;
using namespace borncheck::testing;

TEST_CASE("a full config parses") {
  RunConfig config = parse_config_text(R"(# demo
observable = 0 1
state two = 0:1 1:1
state lone = 1:7
game main = two canonical
game bet = two 0:3 1:0
k_grid = -1 0 1
family = weights 4
axioms = ZeroSum PayoffDisplacement Exchange
format = json
witness_cap = 5
)");

  REQUIRE(config.observable.has_value());
  CHECK(*config.observable == obs({0, 1}));
  CHECK(config.states.size() == 2);
  CHECK(config.state_named("two") == state(obs({0, 1}), {{0, 1}, {1, 1}}));
  CHECK(config.state_named("lone").support_size() == 1);
  CHECK(config.game_named("main").is_canonical());
  CHECK(config.game_named("bet").payoff(rat(0)) == rat(3));
  CHECK(config.k_grid == std::vector<Rational>{rat(-1), rat(0), rat(1)});
  CHECK(config.family == RunConfig::Family::Weights);
  CHECK(config.weights_bound == 4);
  CHECK(config.axioms == std::vector<Axiom>{Axiom::ZeroSum,
                                            Axiom::PayoffDisplacement,
                                            Axiom::Exchange});
  CHECK(config.format == RunConfig::Format::Json);
  CHECK(config.witness_cap == 5);
}

TEST_CASE("order of keys does not matter for state resolution") {
  RunConfig config = parse_config_text(R"(
state two = 0:1 1:1
game main = two canonical
observable = 0 1
)");
  CHECK(config.game_named("main").is_canonical());
}

TEST_CASE("fractions and exact decimals parse everywhere") {
  RunConfig config = parse_config_text(R"(
observable = -1/2 0.25 3
state mix = -1/2:1/3 0.25:0.5
k_grid = 0.75 -1/2
)");
  CHECK(*config.observable == Observable({rat(-1, 2), rat(1, 4), rat(3)}));
  CHECK(config.state_named("mix").weights().at(rat(1, 4)) == rat(1, 2));
  CHECK(config.k_grid == std::vector<Rational>{rat(3, 4), rat(-1, 2)});
}

TEST_CASE("config rejections") {
  auto rejects = [](const std::string& text, const char* needle) {
    CAPTURE(text);
    CHECK_THROWS_WITH_AS(parse_config_text(text), doctest::Contains(needle),
                         Error);
  };

  rejects("nonsense = 1\n", "unknown key");
  rejects("observable 0 1\n", "expected KEY = VALUE");
  rejects("observable = 0 1\nobservable = 2\n", "defined twice");
  rejects("observable = 0 x\n", "bad rational");
  rejects("observable = 1 1\n", "DuplicateEigenvalue");
  rejects("observable = 0 1\nstate a = 2:1\n", "UnknownEigenvalue");
  rejects("observable = 0 1\nstate a = 0:1\nstate a = 1:1\n", "defined twice");
  rejects("observable = 0 1\nstate a = 0:1\ngame g = b canonical\n",
          "unknown state 'b'");
  rejects("observable = 0 1\nstate a = 0:1 1:1\ngame g = a 0:1\n",
          "PayoffDomainMismatch");
  rejects("state a = 0:1\n", "states need an observable");
  rejects("axioms = ZeroSum Nope\n", "unknown axiom 'Nope'");
  rejects("family = weights\n", "family must be");
  rejects("family = weights 0\n", "positive integer");
  rejects("format = yaml\n", "format must be");
  rejects("witness_cap = -2\n", "nonnegative");
  rejects("observable = 0 1\nstate a = 0:1 0:2\n", "listed twice");
}

TEST_CASE("missing lookups fail by name") {
  RunConfig config = parse_config_text("observable = 0 1\nstate a = 0:1\n");
  CHECK_THROWS_WITH_AS(config.state_named("b"), doctest::Contains("no state"),
                       Error);
  CHECK_THROWS_WITH_AS(config.game_named("g"), doctest::Contains("no game"),
                       Error);
}

TEST_CASE("config files load from disk") {
  RunConfig config = parse_config_file(std::string(BORNCHECK_SOURCE_DIR) +
                                       "/configs/two_branch.txt");
  CHECK(config.family == RunConfig::Family::MaxAbs);
  CHECK(config.game_named("main").is_canonical());
  CHECK_THROWS_WITH_AS(parse_config_file("/does/not/exist.txt"),
                       doctest::Contains("cannot open"), Error);
}
