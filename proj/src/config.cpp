#include "borncheck/config.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace borncheck {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream stream(s);
  std::string token;
  while (stream >> token) out.push_back(token);
  return out;
}

[[noreturn]] void config_fail(int line, const std::string& message) {
  fail(Errc::ConfigError, "line " + std::to_string(line) + ": " + message);
}

Rational parse_rational_at(int line, const std::string& token) {
  try {
    return Rational::parse(token);
  } catch (const Error&) {
    config_fail(line, "bad rational '" + token + "'");
  }
}

// "EIG:VALUE" pairs used by both state weights and explicit payoffs.
std::map<Rational, Rational> parse_pairs(int line,
                                         const std::vector<std::string>& tokens,
                                         std::size_t from) {
  std::map<Rational, Rational> out;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    auto colon = tokens[i].find(':');
    if (colon == std::string::npos) {
      config_fail(line, "expected EIGENVALUE:VALUE, got '" + tokens[i] + "'");
    }
    Rational key = parse_rational_at(line, tokens[i].substr(0, colon));
    Rational value = parse_rational_at(line, tokens[i].substr(colon + 1));
    if (!out.emplace(key, value).second) {
      config_fail(line, "eigenvalue " + key.str() + " listed twice");
    }
  }
  if (out.empty()) config_fail(line, "expected at least one EIGENVALUE:VALUE");
  return out;
}

}  // namespace

const State& RunConfig::state_named(const std::string& name) const {
  for (const auto& [n, state] : states) {
    if (n == name) return state;
  }
  fail(Errc::ConfigError, "no state named '" + name + "'");
}

const Game& RunConfig::game_named(const std::string& name) const {
  for (const auto& [n, game] : games) {
    if (n == name) return game;
  }
  fail(Errc::ConfigError, "no game named '" + name + "'");
}

const char* family_name(RunConfig::Family family) {
  switch (family) {
    case RunConfig::Family::Born: return "born";
    case RunConfig::Family::MaxAbs: return "maxabs";
    case RunConfig::Family::Selectors: return "selectors";
    case RunConfig::Family::Weights: return "weights";
  }
  return "?";
}

RunConfig parse_config(std::istream& in) {
  RunConfig config;
  // Raw state/game lines; resolved after the observable is known so that
  // key order in the file does not matter.
  struct Pending {
    int line;
    std::string name;
    std::vector<std::string> tokens;
  };
  std::vector<Pending> pending_states;
  std::vector<Pending> pending_games;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::string text = trim(raw);
    if (text.empty()) continue;

    auto eq = text.find('=');
    if (eq == std::string::npos) config_fail(line, "expected KEY = VALUE");
    std::vector<std::string> key = split_tokens(trim(text.substr(0, eq)));
    std::vector<std::string> value = split_tokens(trim(text.substr(eq + 1)));
    if (key.empty()) config_fail(line, "missing key");

    if (key[0] == "observable" && key.size() == 1) {
      if (config.observable) config_fail(line, "observable defined twice");
      if (value.empty()) config_fail(line, "observable needs eigenvalues");
      std::vector<Rational> spectrum;
      for (const auto& token : value) {
        spectrum.push_back(parse_rational_at(line, token));
      }
      try {
        config.observable = Observable(std::move(spectrum));
      } catch (const Error& e) {
        config_fail(line, e.what());
      }
    } else if (key[0] == "state" && key.size() == 2) {
      pending_states.push_back({line, key[1], value});
    } else if (key[0] == "game" && key.size() == 2) {
      pending_games.push_back({line, key[1], value});
    } else if (key[0] == "k_grid" && key.size() == 1) {
      if (!config.k_grid.empty()) config_fail(line, "k_grid defined twice");
      for (const auto& token : value) {
        config.k_grid.push_back(parse_rational_at(line, token));
      }
      if (config.k_grid.empty()) config_fail(line, "k_grid needs values");
    } else if (key[0] == "family" && key.size() == 1) {
      if (config.family) config_fail(line, "family defined twice");
      if (value.size() == 1 && value[0] == "born") {
        config.family = RunConfig::Family::Born;
      } else if (value.size() == 1 && value[0] == "maxabs") {
        config.family = RunConfig::Family::MaxAbs;
      } else if (value.size() == 1 && value[0] == "selectors") {
        config.family = RunConfig::Family::Selectors;
      } else if (value.size() == 2 && value[0] == "weights") {
        config.family = RunConfig::Family::Weights;
        try {
          int bound = std::stoi(value[1]);
          if (bound < 1 || std::to_string(bound) != value[1]) throw 0;
          config.weights_bound = static_cast<unsigned>(bound);
        } catch (...) {
          config_fail(line, "weights bound must be a positive integer");
        }
      } else {
        config_fail(line,
                    "family must be born, maxabs, selectors or weights <N>");
      }
    } else if (key[0] == "axioms" && key.size() == 1) {
      if (!config.axioms.empty()) config_fail(line, "axioms defined twice");
      for (const auto& token : value) {
        auto axiom = axiom_from_name(token);
        if (!axiom) config_fail(line, "unknown axiom '" + token + "'");
        config.axioms.push_back(*axiom);
      }
      std::sort(config.axioms.begin(), config.axioms.end());
      config.axioms.erase(
          std::unique(config.axioms.begin(), config.axioms.end()),
          config.axioms.end());
    } else if (key[0] == "format" && key.size() == 1) {
      if (config.format) config_fail(line, "format defined twice");
      if (value.size() == 1 && value[0] == "markdown") {
        config.format = RunConfig::Format::Markdown;
      } else if (value.size() == 1 && value[0] == "json") {
        config.format = RunConfig::Format::Json;
      } else {
        config_fail(line, "format must be markdown or json");
      }
    } else if (key[0] == "witness_cap" && key.size() == 1) {
      if (config.witness_cap) config_fail(line, "witness_cap defined twice");
      if (value.size() != 1) config_fail(line, "witness_cap needs one value");
      try {
        long cap = std::stol(value[0]);
        if (cap < 0 || std::to_string(cap) != value[0]) throw 0;
        config.witness_cap = static_cast<std::size_t>(cap);
      } catch (...) {
        config_fail(line, "witness_cap must be a nonnegative integer");
      }
    } else {
      std::string joined;
      for (const auto& part : key) {
        if (!joined.empty()) joined += ' ';
        joined += part;
      }
      config_fail(line, "unknown key '" + joined + "'");
    }
  }

  if (!config.observable && (!pending_states.empty() || !pending_games.empty())) {
    fail(Errc::ConfigError, "states need an observable");
  }

  for (const auto& entry : pending_states) {
    if (std::any_of(config.states.begin(), config.states.end(),
                    [&](const auto& s) { return s.first == entry.name; })) {
      config_fail(entry.line, "state '" + entry.name + "' defined twice");
    }
    try {
      config.states.emplace_back(
          entry.name,
          State(*config.observable, parse_pairs(entry.line, entry.tokens, 0)));
    } catch (const Error& e) {
      if (e.code() == Errc::ConfigError) throw;
      config_fail(entry.line, e.what());
    }
  }

  for (const auto& entry : pending_games) {
    if (std::any_of(config.games.begin(), config.games.end(),
                    [&](const auto& g) { return g.first == entry.name; })) {
      config_fail(entry.line, "game '" + entry.name + "' defined twice");
    }
    if (entry.tokens.empty()) {
      config_fail(entry.line, "game needs a state name");
    }
    const auto state_it =
        std::find_if(config.states.begin(), config.states.end(),
                     [&](const auto& s) { return s.first == entry.tokens[0]; });
    if (state_it == config.states.end()) {
      config_fail(entry.line, "unknown state '" + entry.tokens[0] + "'");
    }
    try {
      if (entry.tokens.size() == 2 && entry.tokens[1] == "canonical") {
        config.games.emplace_back(entry.name, canonical_game(state_it->second));
      } else {
        config.games.emplace_back(
            entry.name, Game(state_it->second,
                             parse_pairs(entry.line, entry.tokens, 1)));
      }
    } catch (const Error& e) {
      if (e.code() == Errc::ConfigError) throw;
      config_fail(entry.line, e.what());
    }
  }

  return config;
}

RunConfig parse_config_text(const std::string& text) {
  std::istringstream stream(text);
  return parse_config(stream);
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) {
    fail(Errc::ConfigError, "cannot open config file '" + path + "'");
  }
  return parse_config(stream);
}

}  // namespace borncheck
