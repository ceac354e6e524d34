#include "borncheck/rational.hpp"

#include <cctype>
#include <ostream>

namespace borncheck {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const Int& num, const Int& den) {
  if (den == 0) fail(Errc::DivisionByZero, "zero denominator");
  // cpp_rational reduces to lowest terms but insists on a positive
  // denominator at construction.
  value_ = den < 0 ? Rep(-num, -den) : Rep(num, den);
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  const auto bad = [&] {
    fail(Errc::BadRational, "cannot parse rational '" + std::string(text) + "'");
  };

  Int num;
  Int den = 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num_part = s.substr(0, slash);
    std::string_view den_part = s.substr(slash + 1);
    if (!all_digits(num_part) || !all_digits(den_part)) bad();
    num = Int(std::string(num_part));
    den = Int(std::string(den_part));
    if (den == 0) bad();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (!all_digits(int_part) || !all_digits(frac_part)) bad();
    num = Int(std::string(int_part));
    for (char c : frac_part) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    if (!all_digits(s)) bad();
    num = Int(std::string(s));
  }

  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  std::string out = numerator().str();
  if (!is_integer()) {
    out += '/';
    out += denominator().str();
  }
  return out;
}

std::string Rational::decimal(unsigned max_places) const {
  Int num = numerator();
  Int den = denominator();
  std::string out;
  if (num < 0) {
    out += '-';
    num = -num;
  }
  out += Int(num / den).str();
  Int rem = num % den;
  if (rem != 0 && max_places > 0) {
    std::string frac;
    for (unsigned i = 0; i < max_places && rem != 0; ++i) {
      rem *= 10;
      frac += static_cast<char>('0' + static_cast<int>(Int(rem / den)));
      rem %= den;
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) {
      out += '.';
      out += frac;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::EmptySpectrum: return "EmptySpectrum";
    case Errc::DuplicateEigenvalue: return "DuplicateEigenvalue";
    case Errc::UnknownEigenvalue: return "UnknownEigenvalue";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::ZeroState: return "ZeroState";
    case Errc::PayoffDomainMismatch: return "PayoffDomainMismatch";
    case Errc::ArityError: return "ArityError";
    case Errc::UnequalWeights: return "UnequalWeights";
    case Errc::NonCanonicalGame: return "NonCanonicalGame";
    case Errc::BadRational: return "BadRational";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ObservableMismatch: return "ObservableMismatch";
    case Errc::ConfigError: return "ConfigError";
    case Errc::TieUndefined: return "TieUndefined";
    case Errc::SelectorDomain: return "SelectorDomain";
    case Errc::SelectorRange: return "SelectorRange";
    case Errc::WeightDomainMismatch: return "WeightDomainMismatch";
    case Errc::WeightsNotNormalized: return "WeightsNotNormalized";
    case Errc::TableMiss: return "TableMiss";
    case Errc::EmptyAxiomSet: return "EmptyAxiomSet";
    case Errc::InapplicableAxiom: return "InapplicableAxiom";
    case Errc::UniverseTooLarge: return "UniverseTooLarge";
  }
  return "UnknownError";
}

bool is_valuation_error(Errc code) {
  switch (code) {
    case Errc::TieUndefined:
    case Errc::SelectorDomain:
    case Errc::SelectorRange:
    case Errc::WeightDomainMismatch:
    case Errc::WeightsNotNormalized:
    case Errc::TableMiss:
      return true;
    default:
      return false;
  }
}

}  // namespace borncheck
