#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace matchgadget {

/// Propositional formula over TRUE, atoms, negation, binary connectives and a
/// finite existential (disjunction over a list).
struct Formula {
  enum class Kind { True, Not, And, Or, Implies, AndNot, Exists, Atom };

  Kind kind = Kind::True;
  std::vector<Formula> children;
  std::size_t atom = 0;

  static Formula truth() { return Formula{}; }
  /// FALSE is NOT(TRUE); there is no separate literal.
  static Formula falsity() { return negate(truth()); }
  static Formula variable(std::size_t index) { return Formula{Kind::Atom, {}, index}; }
  static Formula negate(Formula f) { return Formula{Kind::Not, {std::move(f)}, 0}; }
  static Formula binary(Kind kind, Formula a, Formula b) { return Formula{kind, {std::move(a), std::move(b)}, 0}; }
  static Formula exists(std::vector<Formula> list) { return Formula{Kind::Exists, std::move(list), 0}; }

  std::size_t depth() const;
  /// Largest atom index + 1 (0 when the formula has no atoms).
  std::size_t atom_span() const;

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// DSL:
///   formula := "T" | "F" | "!" formula | "(" formula ("&"|"|"|"->") formula ")"
///            | "E[" formula ("," formula)* "]" | "@" digits
/// Whitespace is ignored. Throws SyntaxError (message carries the offset) or
/// UnbalancedParens.
Formula parse_formula(std::string_view text);

/// Renders in the DSL. AND-NOT nodes, which have no syntax of their own, are
/// written as "(!a&b)".
std::string to_string(const Formula& f);

}  // namespace matchgadget
