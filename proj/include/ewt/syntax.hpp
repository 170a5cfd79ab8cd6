#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ewt/lambda.hpp"
#include "ewt/term.hpp"

namespace ewt {

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

using TermEnv = std::map<std::string, Term, std::less<>>;

/// Surface syntax:
///   S  K  #oracle  I  p1  p2  true  false  case  pair  num:N
///   \x y. e      <a, b>      f a b      (e)
/// Identifiers resolve to a bound variable, then an entry of `env`, then a
/// builtin. Anything else is an unbound-variable error.
Lam parse_lambda(std::string_view src, const TermEnv& env = {}, int line = 1, int column = 1);
Term parse_term(std::string_view src, const TermEnv& env = {});

/// Printer inverse to parse_term: numerals print as num:N, pair shapes as
/// <a, b>, and I, p1, p2, false, case, pair by name.
std::string print(const Term& t);

/// Builds a term from lambda notation with named term parameters, e.g.
/// lambda_term("\\u. l <p1 u, p2 u>", {{"l", ell}}).
Term lambda_term(std::string_view src, const TermEnv& params = {});

}  // namespace ewt
