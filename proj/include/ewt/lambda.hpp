#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "ewt/term.hpp"

namespace ewt {

/// Mini lambda syntax compiled to combinators by bracket abstraction.
struct LambdaExpr;
using Lam = std::shared_ptr<const LambdaExpr>;

struct LambdaExpr {
  enum class Kind { Var, Const, Abs, App, Pair };
  Kind kind;
  std::string name;  // Var, Abs
  Term constant;     // Const
  Lam a, b;          // Abs: body in a; App: fn, arg; Pair: left, right
};

Lam var(std::string name);
Lam cst(Term t);
Lam lam(std::string x, Lam body);
Lam lapp(Lam f, Lam a);
Lam lpair(Lam l, Lam r);

struct UnboundVariable : std::runtime_error {
  explicit UnboundVariable(const std::string& v)
      : std::runtime_error("unbound variable '" + v + "'"), variable(v) {}
  std::string variable;
};

/// One abstraction step, using exactly four rules:
///   [x]x = S K K,  [x]y = K y,  [x]a = K a,  [x](t u) = S ([x]t) ([x]u).
/// The body must be abstraction- and pair-free (see `lower`).
Lam bracket_abstract(const std::string& x, const Lam& body);

/// Removes abstractions and pair sugar inside out. Pairs become the normal
/// form of PAIR l r, i.e. S (S I (K l)) (K r).
Lam lower(const Lam& e);

/// Compiles a closed expression. Throws UnboundVariable otherwise.
Term compile(const Lam& e);

}  // namespace ewt
