#pragma once

#include <stdexcept>
#include <string>

namespace borncheck {

// Every failure the library can raise, by name. The CLI maps these onto
// exit codes: config/input problems -> 2, valuation application errors -> 3,
// resource caps -> 4.
enum class Errc {
  // construction / input validation
  EmptySpectrum,
  DuplicateEigenvalue,
  UnknownEigenvalue,
  NegativeWeight,
  ZeroState,
  PayoffDomainMismatch,
  ArityError,
  UnequalWeights,
  NonCanonicalGame,
  BadRational,
  DivisionByZero,
  ObservableMismatch,
  ConfigError,
  // valuation application
  TieUndefined,
  SelectorDomain,
  SelectorRange,
  WeightDomainMismatch,
  WeightsNotNormalized,
  TableMiss,
  // search setup / resources
  EmptyAxiomSet,
  InapplicableAxiom,
  UniverseTooLarge,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

// True for errors raised while applying a valuation to a game (as opposed to
// malformed inputs). Axiom checks convert these into Inapplicable results.
bool is_valuation_error(Errc code);

}  // namespace borncheck
