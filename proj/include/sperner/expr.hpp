// Exact arithmetic expressions over variables x1..xD, used to describe
// self-maps of the simplex.
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sperner/rational.hpp"

namespace sperner {

class Expr {
 public:
  enum class Kind { constant, variable, add, sub, mul, div, neg, min, max, abs };

  static Expr constant(Rational value);
  static Expr variable(int index);  // 1-based
  static Expr node(Kind kind, std::vector<Expr> args);

  Kind kind() const { return kind_; }
  const Rational& value() const { return value_; }
  int variable_index() const { return var_; }
  const std::vector<Expr>& args() const { return args_; }

  /// vars[i] is x_{i+1}. Throws InvalidInput on division by zero or a
  /// variable beyond vars.
  Rational evaluate(std::span<const Rational> vars) const;

  /// Largest variable index used (0 if none).
  int max_variable() const;

  /// Fully parenthesized text that parses back to the same tree.
  std::string to_string() const;

 private:
  Kind kind_ = Kind::constant;
  Rational value_;
  int var_ = 0;
  std::vector<Expr> args_;
};

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := integer | 'x' digits | '(' expr ')' | '-' factor
///           | ('min' | 'max' | 'abs') '(' expr (',' expr)* ')'
/// min and max take at least two arguments, abs exactly one. When
/// num_vars > 0, variables beyond x<num_vars> are rejected. Throws ParseError
/// carrying the 0-based offset of the offending character.
Expr parse_expr(std::string_view text, int num_vars = 0);

/// Splits on ';' and parses each piece; offsets in errors refer to the whole
/// text.
std::vector<Expr> parse_expr_list(std::string_view text, int num_vars = 0);

}  // namespace sperner
