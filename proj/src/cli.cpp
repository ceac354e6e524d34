#include "borncheck/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "borncheck/golden_data.hpp"
#include "borncheck/report.hpp"

namespace borncheck {

namespace {

int exit_code_for(const Error& e) {
  if (e.code() == Errc::UniverseTooLarge) return 4;
  if (is_valuation_error(e.code())) return 3;
  return 2;
}

struct CommonOptions {
  std::string config_path;
  std::string format;  // "", "markdown", "json"
  std::string out_path;
  long long witness_cap = -1;  // -1 = not set
};

RunConfig::Format resolve_format(const CommonOptions& options,
                                 const RunConfig& config) {
  if (options.format == "json") return RunConfig::Format::Json;
  if (options.format == "markdown") return RunConfig::Format::Markdown;
  return config.format.value_or(RunConfig::Format::Markdown);
}

void emit(const std::string& text, const CommonOptions& options,
          std::ostream& out) {
  if (options.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(options.out_path, std::ios::binary);
  if (!file) {
    fail(Errc::ConfigError, "cannot write to '" + options.out_path + "'");
  }
  file << text;
}

// The single valuation named by the config family (for eval and check).
Valuation single_valuation(const RunConfig& config) {
  if (!config.family) fail(Errc::ConfigError, "config needs a family");
  switch (*config.family) {
    case RunConfig::Family::Born:
      return Valuation::born();
    case RunConfig::Family::MaxAbs:
      return Valuation::from_selector(maxabs_selector());
    default:
      fail(Errc::ConfigError,
           "this command needs family = born or family = maxabs");
  }
}

// Games to check: the named games, or every state's canonical game when the
// config names none.
std::vector<std::pair<std::string, Game>> config_games(const RunConfig& config) {
  if (!config.games.empty()) return config.games;
  std::vector<std::pair<std::string, Game>> out;
  for (const auto& [name, state] : config.states) {
    out.emplace_back(name + " (canonical)", canonical_game(state));
  }
  if (out.empty()) fail(Errc::ConfigError, "config defines no games or states");
  return out;
}

int cmd_eval(const CommonOptions& options, const std::string& game_name,
             std::ostream& out) {
  RunConfig config = parse_config_file(options.config_path);
  Valuation valuation = single_valuation(config);

  std::string name = game_name;
  if (name.empty()) {
    if (config.games.size() != 1) {
      fail(Errc::ConfigError,
           "config defines " + std::to_string(config.games.size()) +
               " games; name one on the command line");
    }
    name = config.games.front().first;
  }
  const Game& game = config.game_named(name);
  RunConfig::Format format = resolve_format(options, config);

  try {
    Rational value = valuation(game);
    emit(format == RunConfig::Format::Json
             ? render_eval_json(name, game, valuation.descriptor(), value)
             : render_eval_markdown(value),
         options, out);
    return 0;
  } catch (const Error& e) {
    if (!is_valuation_error(e.code())) throw;
    if (format == RunConfig::Format::Json) {
      emit(std::string("{\n  \"command\": \"eval\",\n  \"error\": \"") +
               e.name() + "\",\n  \"schema\": \"borncheck/1\"\n}\n",
           options, out);
    } else {
      emit(std::string("error: ") + e.what() + "\n", options, out);
    }
    return 3;
  }
}

std::vector<Rational> displacement_grid(const RunConfig& config,
                                        const Game& game) {
  if (!config.k_grid.empty()) {
    std::vector<Rational> grid = config.k_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
  }
  return default_k_grid(game);
}

int cmd_check(const CommonOptions& options, std::ostream& out) {
  RunConfig config = parse_config_file(options.config_path);
  Valuation valuation = single_valuation(config);
  if (config.axioms.empty()) {
    fail(Errc::ConfigError, "config needs a nonempty axioms list");
  }

  // Arity and shape problems are reported as Inapplicable rows rather than
  // aborting the whole table.
  auto posed = [](auto&& body) -> CheckResult {
    try {
      return body();
    } catch (const Error& e) {
      switch (e.code()) {
        case Errc::ArityError:
        case Errc::UnequalWeights:
        case Errc::NonCanonicalGame:
          return CheckResult::inapplicable(e.what());
        default:
          throw;
      }
    }
  };

  std::vector<CheckRow> rows;
  for (const auto& [name, game] : config_games(config)) {
    for (Axiom axiom : config.axioms) {
      switch (axiom) {
        case Axiom::ZeroSum:
          rows.push_back({axiom, name, std::nullopt,
                          check_zero_sum(valuation, game)});
          break;
        case Axiom::BornGeneral:
          rows.push_back({axiom, name, std::nullopt,
                          check_born_general(valuation, game)});
          break;
        case Axiom::Exchange:
          rows.push_back({axiom, name, std::nullopt, posed([&] {
                            return check_exchange(valuation, game);
                          })});
          break;
        case Axiom::Pivotal:
          rows.push_back({axiom, name, std::nullopt, posed([&] {
                            return check_pivotal(valuation, game.state());
                          })});
          break;
        case Axiom::PayoffDisplacement:
          for (const Rational& k : displacement_grid(config, game)) {
            rows.push_back({axiom, name, k,
                            check_payoff_displacement(valuation, game, k)});
          }
          break;
        case Axiom::NaiveDisplacement:
          for (const Rational& k : displacement_grid(config, game)) {
            rows.push_back({axiom, name, k, posed([&] {
                              return check_naive_displacement(valuation, game,
                                                              k);
                            })});
          }
          break;
      }
    }
  }

  emit(resolve_format(options, config) == RunConfig::Format::Json
           ? render_check_json(valuation.descriptor(), rows)
           : render_check_markdown(valuation.descriptor(), rows),
       options, out);
  bool violated = std::any_of(rows.begin(), rows.end(), [](const CheckRow& r) {
    return r.result.violated();
  });
  return violated ? 1 : 0;
}

void print_diff(const std::string& expected, const std::string& actual,
                std::ostream& err) {
  std::istringstream want(expected);
  std::istringstream got(actual);
  std::string want_line, got_line;
  int line = 0;
  while (true) {
    ++line;
    bool more_want = static_cast<bool>(std::getline(want, want_line));
    bool more_got = static_cast<bool>(std::getline(got, got_line));
    if (!more_want && !more_got) break;
    if (!more_want) want_line = "<end of golden>";
    if (!more_got) got_line = "<end of output>";
    if (want_line != got_line || more_want != more_got) {
      err << "golden mismatch at line " << line << ":\n";
      err << "  expected: " << want_line << "\n";
      err << "  actual:   " << got_line << "\n";
      return;
    }
  }
  err << "golden mismatch: byte-level difference\n";
}

int cmd_reproduce(const CommonOptions& options, const std::string& golden_path,
                  std::ostream& out, std::ostream& err) {
  ReferenceReport report = reference_report();
  bool as_json = options.format == "json";
  std::string text = as_json ? render_reference_json(report)
                             : render_reference_markdown(report);

  std::string golden;
  if (golden_path.empty()) {
    golden = std::string(as_json ? golden_data::kReferenceJson
                                 : golden_data::kReferenceMarkdown);
  } else {
    std::ifstream file(golden_path, std::ios::binary);
    if (!file) {
      fail(Errc::ConfigError, "cannot read golden file '" + golden_path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    golden = buffer.str();
  }

  emit(text, options, out);
  if (text == golden) return 0;
  print_diff(golden, text, err);
  return 1;
}

int cmd_search(const CommonOptions& options, std::ostream& out) {
  RunConfig config = parse_config_file(options.config_path);
  if (!config.observable) fail(Errc::ConfigError, "config needs an observable");
  if (config.states.empty()) fail(Errc::ConfigError, "config needs states");
  if (!config.family) fail(Errc::ConfigError, "config needs a family");

  std::vector<State> states;
  for (const auto& [name, state] : config.states) states.push_back(state);

  std::vector<Rational> k_grid = config.k_grid;
  if (k_grid.empty()) {
    for (const State& state : states) {
      auto grid = default_k_grid(canonical_game(state));
      k_grid.insert(k_grid.end(), grid.begin(), grid.end());
    }
  }

  GameUniverse universe =
      build_universe(*config.observable, std::move(states), std::move(k_grid));

  std::vector<Valuation> family;
  std::string label = family_name(*config.family);
  switch (*config.family) {
    case RunConfig::Family::Born:
      family.push_back(Valuation::born());
      break;
    case RunConfig::Family::MaxAbs:
      family.push_back(Valuation::from_selector(maxabs_selector()));
      break;
    case RunConfig::Family::Selectors:
      family = enumerate_selectors(universe);
      break;
    case RunConfig::Family::Weights:
      family = enumerate_weight_valuations(universe, config.weights_bound);
      label += "(" + std::to_string(config.weights_bound) + ")";
      break;
  }

  std::size_t witness_cap =
      options.witness_cap >= 0
          ? static_cast<std::size_t>(options.witness_cap)
          : config.witness_cap.value_or(kDefaultWitnessCap);

  SearchOutcome outcome =
      run_search(universe, family, config.axioms, witness_cap, label);

  emit(resolve_format(options, config) == RunConfig::Format::Json
           ? render_search_json(universe, outcome)
           : render_search_markdown(universe, outcome),
       options, out);
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact-arithmetic measurement-game valuations, axiom checks, "
               "and brute-force axiom-independence searches"};
  app.require_subcommand(1);

  CommonOptions options;
  std::string eval_game;
  std::string golden_path;

  auto add_common = [&](CLI::App* cmd, bool needs_config) {
    if (needs_config) {
      cmd->add_option("--config", options.config_path, "run configuration file")
          ->required();
    }
    cmd->add_option("--format", options.format, "output format")
        ->check(CLI::IsMember({"markdown", "json"}));
    cmd->add_option("--out", options.out_path, "write the report to a file");
  };

  CLI::App* eval = app.add_subcommand("eval", "value one game");
  add_common(eval, true);
  eval->add_option("game", eval_game, "name of the game to value");

  CLI::App* check = app.add_subcommand("check", "run axiom checks");
  add_common(check, true);

  CLI::App* reproduce =
      app.add_subcommand("reproduce", "regenerate the reference report and "
                                      "compare it against the golden copy");
  add_common(reproduce, false);
  reproduce->add_option("--golden", golden_path,
                        "compare against this file instead of the built-in "
                        "golden copy");

  CLI::App* search = app.add_subcommand("search", "filter a valuation family "
                                                  "by an axiom set");
  add_common(search, true);
  search->add_option("--witness-cap", options.witness_cap,
                     "max witnesses to report (0 = unlimited)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(options, eval_game, out);
    if (check->parsed()) return cmd_check(options, out);
    if (reproduce->parsed()) {
      return cmd_reproduce(options, golden_path, out, err);
    }
    return cmd_search(options, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace borncheck
