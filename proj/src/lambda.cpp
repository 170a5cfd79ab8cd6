#include "ewt/lambda.hpp"

namespace ewt {

namespace {

Lam make(LambdaExpr e) { return std::make_shared<const LambdaExpr>(std::move(e)); }

Lam ident() {
  static const Lam i = lapp(lapp(cst(Term::s()), cst(Term::k())), cst(Term::k()));
  return i;
}

}  // namespace

Lam var(std::string name) { return make({LambdaExpr::Kind::Var, std::move(name), {}, {}, {}}); }
Lam cst(Term t) { return make({LambdaExpr::Kind::Const, {}, std::move(t), {}, {}}); }
Lam lam(std::string x, Lam body) {
  return make({LambdaExpr::Kind::Abs, std::move(x), {}, std::move(body), {}});
}
Lam lapp(Lam f, Lam a) { return make({LambdaExpr::Kind::App, {}, {}, std::move(f), std::move(a)}); }
Lam lpair(Lam l, Lam r) {
  return make({LambdaExpr::Kind::Pair, {}, {}, std::move(l), std::move(r)});
}

Lam bracket_abstract(const std::string& x, const Lam& body) {
  const Lam K = cst(Term::k());
  switch (body->kind) {
    case LambdaExpr::Kind::Var:
      if (body->name == x) return ident();
      return lapp(K, body);
    case LambdaExpr::Kind::Const:
      return lapp(K, body);
    case LambdaExpr::Kind::App:
      return lapp(lapp(cst(Term::s()), bracket_abstract(x, body->a)), bracket_abstract(x, body->b));
    case LambdaExpr::Kind::Abs:
    case LambdaExpr::Kind::Pair:
      return bracket_abstract(x, lower(body));
  }
  return body;
}

Lam lower(const Lam& e) {
  switch (e->kind) {
    case LambdaExpr::Kind::Var:
    case LambdaExpr::Kind::Const:
      return e;
    case LambdaExpr::Kind::App:
      return lapp(lower(e->a), lower(e->b));
    case LambdaExpr::Kind::Abs:
      return bracket_abstract(e->name, lower(e->a));
    case LambdaExpr::Kind::Pair: {
      const Lam S = cst(Term::s());
      const Lam K = cst(Term::k());
      return lapp(lapp(S, lapp(lapp(S, ident()), lapp(K, lower(e->a)))), lapp(K, lower(e->b)));
    }
  }
  return e;
}

namespace {

Term to_term(const Lam& e) {
  switch (e->kind) {
    case LambdaExpr::Kind::Const:
      return e->constant;
    case LambdaExpr::Kind::App:
      return Term::app(to_term(e->a), to_term(e->b));
    case LambdaExpr::Kind::Var:
      throw UnboundVariable(e->name);
    default:
      return to_term(lower(e));
  }
}

}  // namespace

Term compile(const Lam& e) { return to_term(lower(e)); }

}  // namespace ewt
