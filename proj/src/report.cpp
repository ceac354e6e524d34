#include "borncheck/report.hpp"

#include <json.hpp>

#include <sstream>

namespace borncheck {

namespace {

using nlohmann::json;

std::string opt_str(const std::optional<Rational>& r) {
  return r ? r->str() : "-";
}

json opt_json(const std::optional<Rational>& r) {
  return r ? json(r->str()) : json(nullptr);
}

json check_json(const CheckResult& result) {
  return json{
      {"status", check_status_name(result.status())},
      {"lhs", opt_json(result.lhs())},
      {"rhs", opt_json(result.rhs())},
      {"note", result.note()},
  };
}

void check_table_row(std::ostream& os, const std::string& label,
                     const CheckResult& result) {
  os << "| " << label << " | " << opt_str(result.lhs()) << " | "
     << opt_str(result.rhs()) << " | " << check_status_name(result.status())
     << " |\n";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json wrap(const char* command, json body) {
  body["schema"] = "borncheck/1";
  body["command"] = command;
  return body;
}

}  // namespace

std::string render_eval_markdown(const Rational& value) {
  return value.str() + "\n";
}

std::string render_eval_json(const std::string& game_name, const Game& game,
                             const std::string& valuation,
                             const Rational& value) {
  return dump(wrap("eval", json{
                               {"game", game_name},
                               {"game_repr", game.str()},
                               {"valuation", valuation},
                               {"value", value.str()},
                               {"value_decimal", value.decimal()},
                           }));
}

std::string render_check_markdown(const std::string& valuation,
                                  const std::vector<CheckRow>& rows) {
  std::ostringstream os;
  os << "# Axiom check report\n\n";
  os << "valuation: " << valuation << "\n\n";
  os << "| axiom | game | k | lhs | rhs | status | note |\n";
  os << "| --- | --- | --- | --- | --- | --- | --- |\n";
  std::size_t holds = 0, violated = 0, inapplicable = 0;
  for (const CheckRow& row : rows) {
    os << "| " << axiom_name(row.axiom) << " | " << row.game << " | "
       << opt_str(row.k) << " | " << opt_str(row.result.lhs()) << " | "
       << opt_str(row.result.rhs()) << " | "
       << check_status_name(row.result.status()) << " | " << row.result.note()
       << " |\n";
    switch (row.result.status()) {
      case CheckStatus::Holds: ++holds; break;
      case CheckStatus::Violated: ++violated; break;
      case CheckStatus::Inapplicable: ++inapplicable; break;
    }
  }
  os << "\nsummary: " << holds << " hold, " << violated << " violated, "
     << inapplicable << " inapplicable\n";
  return os.str();
}

std::string render_check_json(const std::string& valuation,
                              const std::vector<CheckRow>& rows) {
  json out_rows = json::array();
  std::size_t holds = 0, violated = 0, inapplicable = 0;
  for (const CheckRow& row : rows) {
    json entry = check_json(row.result);
    entry["axiom"] = axiom_name(row.axiom);
    entry["game"] = row.game;
    entry["k"] = opt_json(row.k);
    out_rows.push_back(std::move(entry));
    switch (row.result.status()) {
      case CheckStatus::Holds: ++holds; break;
      case CheckStatus::Violated: ++violated; break;
      case CheckStatus::Inapplicable: ++inapplicable; break;
    }
  }
  return dump(wrap("check", json{
                                {"valuation", valuation},
                                {"rows", std::move(out_rows)},
                                {"summary",
                                 {
                                     {"holds", holds},
                                     {"violated", violated},
                                     {"inapplicable", inapplicable},
                                 }},
                            }));
}

std::string render_reference_markdown(const ReferenceReport& report) {
  std::ostringstream os;
  const auto& d = report.derivation;
  std::string payoffs = "{";
  bool sep = false;
  for (const auto& [eigenvalue, payoff] : report.game.payoffs()) {
    if (sep) payoffs += ", ";
    payoffs += eigenvalue.str() + "->" + payoff.str();
    sep = true;
  }
  payoffs += '}';
  os << "# Reference report\n\n";
  os << "Canonical two-branch game: spectrum "
     << report.game.state().observable().str() << ", state "
     << report.game.state().str() << ", payoffs " << payoffs << ".\n\n";

  os << "## Values\n\n";
  os << "| valuation | game | value | decimal |\n";
  os << "| --- | --- | --- | --- |\n";
  os << "| born | canonical | " << report.born.str() << " | "
     << report.born.decimal() << " |\n";
  os << "| maxabs | canonical | " << report.maxabs.str() << " | "
     << report.maxabs.decimal() << " |\n";
  os << "| maxabs | swapped | " << d.values.at("swapped").str() << " | "
     << d.values.at("swapped").decimal() << " |\n\n";

  os << "## Pivotal: canonical value vs eigenvalue mean\n\n";
  os << "| valuation | lhs | rhs | status |\n";
  os << "| --- | --- | --- | --- |\n";
  check_table_row(os, "born", report.pivotal_born);
  check_table_row(os, "maxabs", report.pivotal_maxabs);
  os << '\n';

  os << "## Naive displacement at k = -1 (maxabs)\n\n";
  os << "| spectrum | lhs | rhs | status | note |\n";
  os << "| --- | --- | --- | --- | --- |\n";
  os << "| {0, 1} | " << opt_str(report.naive_missing.lhs()) << " | "
     << opt_str(report.naive_missing.rhs()) << " | "
     << check_status_name(report.naive_missing.status()) << " | "
     << report.naive_missing.note() << " |\n";
  os << "| {-1, 0, 1} | " << opt_str(report.naive_violated.lhs()) << " | "
     << opt_str(report.naive_violated.rhs()) << " | "
     << check_status_name(report.naive_violated.status()) << " | "
     << report.naive_violated.note() << " |\n\n";

  os << "## Payoff displacement at k = -1 (maxabs)\n\n";
  os << "| lhs | rhs | status |\n";
  os << "| --- | --- | --- |\n";
  os << "| " << opt_str(report.displacement.lhs()) << " | "
     << opt_str(report.displacement.rhs()) << " | "
     << check_status_name(report.displacement.status()) << " |\n\n";

  os << "## Derivation replay (maxabs)\n\n";
  os << "| step | lhs | rhs | status |\n";
  os << "| --- | --- | --- | --- |\n";
  check_table_row(os, "displacement (k = -1)", d.displacement);
  check_table_row(os, "zero-sum (shifted game)", d.zero_sum);
  check_table_row(os, "swap identity", d.swap_identity);
  check_table_row(os, "pivotal", d.pivotal);
  os << "\nGame values under maxabs: canonical = "
     << d.values.at("canonical").str() << ", shifted = "
     << d.values.at("shifted").str() << ", swapped = "
     << d.values.at("swapped").str() << ".\n\n";

  os << "## Exchange symmetry (maxabs)\n\n";
  os << "| lhs | rhs | status |\n";
  os << "| --- | --- | --- |\n";
  os << "| " << opt_str(report.exchange.lhs()) << " | "
     << opt_str(report.exchange.rhs()) << " | "
     << check_status_name(report.exchange.status()) << " |\n";
  return os.str();
}

std::string render_reference_json(const ReferenceReport& report) {
  const auto& d = report.derivation;
  json values;
  for (const auto& [label, value] : d.values) values[label] = value.str();
  return dump(wrap(
      "reproduce",
      json{
          {"game", report.game.str()},
          {"values",
           {
               {"born", report.born.str()},
               {"maxabs_canonical", report.maxabs.str()},
               {"maxabs_swapped", d.values.at("swapped").str()},
           }},
          {"pivotal",
           {
               {"born", check_json(report.pivotal_born)},
               {"maxabs", check_json(report.pivotal_maxabs)},
           }},
          {"naive_displacement",
           {
               {"narrow_spectrum", check_json(report.naive_missing)},
               {"wide_spectrum", check_json(report.naive_violated)},
           }},
          {"payoff_displacement", check_json(report.displacement)},
          {"derivation",
           {
               {"displacement", check_json(d.displacement)},
               {"zero_sum", check_json(d.zero_sum)},
               {"swap_identity", check_json(d.swap_identity)},
               {"pivotal", check_json(d.pivotal)},
               {"values", std::move(values)},
           }},
          {"exchange", check_json(report.exchange)},
      }));
}

namespace {

std::string k_grid_str(const GameUniverse& universe) {
  std::string out = "{";
  bool sep = false;
  for (const Rational& k : universe.k_grid()) {
    if (sep) out += ", ";
    out += k.str();
    sep = true;
  }
  out += '}';
  return out;
}

std::string axiom_list(const std::vector<Axiom>& axioms) {
  std::string out;
  for (Axiom axiom : axioms) {
    if (!out.empty()) out += ", ";
    out += axiom_name(axiom);
  }
  return out;
}

}  // namespace

std::string render_search_markdown(const GameUniverse& universe,
                                   const SearchOutcome& outcome) {
  std::ostringstream os;
  os << "# Search report\n\n";
  os << "universe: spectrum " << universe.observable().str() << ", "
     << universe.states().size() << " state(s), " << universe.games().size()
     << " game(s), k-grid " << k_grid_str(universe) << "\n";
  os << "family: " << outcome.family << "\n";
  os << "axioms: " << axiom_list(outcome.axioms) << "\n\n";
  os << "| metric | value |\n";
  os << "| --- | --- |\n";
  os << "| candidates | " << outcome.total_candidates << " |\n";
  os << "| survivors | " << outcome.survivors << " |\n";
  os << "| born-agreeing survivors | " << outcome.born_agreeing_survivors
     << " |\n";
  os << "| born forced | " << (outcome.born_forced ? "true" : "false")
     << " |\n";

  if (!outcome.survivor_sample.empty()) {
    os << "\nsurvivors (sample):\n\n";
    for (const std::string& descriptor : outcome.survivor_sample) {
      os << "- " << descriptor << "\n";
    }
  }
  if (!outcome.witnesses.empty()) {
    os << "\nwitnesses (survivor value vs born value):\n\n";
    os << "| valuation | game | value | born |\n";
    os << "| --- | --- | --- | --- |\n";
    for (const Witness& witness : outcome.witnesses) {
      os << "| " << witness.valuation << " | " << witness.game << " | "
         << witness.value.str() << " | " << witness.born.str() << " |\n";
    }
  }
  return os.str();
}

std::string render_search_json(const GameUniverse& universe,
                               const SearchOutcome& outcome) {
  json witnesses = json::array();
  for (const Witness& witness : outcome.witnesses) {
    witnesses.push_back(json{
        {"valuation", witness.valuation},
        {"game", witness.game},
        {"value", witness.value.str()},
        {"born", witness.born.str()},
    });
  }
  json axioms = json::array();
  for (Axiom axiom : outcome.axioms) axioms.push_back(axiom_name(axiom));
  return dump(wrap("search",
                   json{
                       {"universe",
                        {
                            {"spectrum", universe.observable().str()},
                            {"states", universe.states().size()},
                            {"games", universe.games().size()},
                            {"k_grid", k_grid_str(universe)},
                        }},
                       {"family", outcome.family},
                       {"axioms", std::move(axioms)},
                       {"total_candidates", outcome.total_candidates},
                       {"survivors", outcome.survivors},
                       {"born_agreeing_survivors",
                        outcome.born_agreeing_survivors},
                       {"born_forced", outcome.born_forced},
                       {"survivor_sample", outcome.survivor_sample},
                       {"witnesses", std::move(witnesses)},
                   }));
}

}  // namespace borncheck
