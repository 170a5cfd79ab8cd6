#include "ewt/combinators.hpp"

#include <algorithm>
#include <cctype>

#include "ewt/lambda.hpp"

namespace ewt {

const Term& comb_I() {
  static const Term t = Term::app(Term::app(Term::s(), Term::k()), Term::k());
  return t;
}

const Term& comb_true() {
  static const Term t = Term::k();
  return t;
}

const Term& comb_false() {
  static const Term t = compile(lam("x", lam("y", var("y"))));
  return t;
}

const Term& comb_pair() {
  static const Term t =
      compile(lam("a", lam("b", lam("f", lapp(lapp(var("f"), var("a")), var("b"))))));
  return t;
}

const Term& comb_p1() {
  static const Term t = compile(lam("p", lapp(var("p"), cst(comb_true()))));
  return t;
}

const Term& comb_p2() {
  static const Term t = compile(lam("p", lapp(var("p"), cst(comb_false()))));
  return t;
}

const Term& comb_case() {
  static const Term t =
      compile(lam("b", lam("x", lam("y", lapp(lapp(var("b"), var("x")), var("y"))))));
  return t;
}

std::optional<Term> combinator(std::string_view name) {
  std::string n(name);
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::toupper(c); });
  if (n == "PAIR") return comb_pair();
  if (n == "P1") return comb_p1();
  if (n == "P2") return comb_p2();
  if (n == "TRUE") return comb_true();
  if (n == "FALSE") return comb_false();
  if (n == "CASE") return comb_case();
  if (n == "I") return comb_I();
  return std::nullopt;
}

Term pair_of(Term a, Term b) {
  static const Term S = Term::s();
  static const Term SI = Term::app(S, comb_I());
  return Term::app(Term::app(S, Term::app(SI, Term::app(Term::k(), std::move(a)))),
                   Term::app(Term::k(), std::move(b)));
}

std::optional<std::pair<Term, Term>> match_pair(const Term& t) {
  // S (S I (K a)) (K b)
  if (t.spine_args() != 2 || t.head_kind() != Term::Kind::S) return std::nullopt;
  const Term& inner = t.left().right();
  const Term& kb = t.right();
  if (!kb.is_app() || kb.left().kind() != Term::Kind::K) return std::nullopt;
  if (inner.spine_args() != 2 || inner.head_kind() != Term::Kind::S) return std::nullopt;
  if (inner.left().left().kind() != Term::Kind::S) return std::nullopt;
  if (inner.left().right() != comb_I()) return std::nullopt;
  const Term& ka = inner.right();
  if (!ka.is_app() || ka.left().kind() != Term::Kind::K) return std::nullopt;
  return std::make_pair(ka.right(), kb.right());
}

Term numeral(std::uint64_t n) {
  Term t = pair_of(comb_true(), comb_I());
  for (std::uint64_t i = 0; i < n; ++i) t = pair_of(comb_false(), t);
  return t;
}

std::optional<std::uint64_t> decode_numeral(const Term& t) {
  std::uint64_t n = 0;
  Term cur = t;
  for (;;) {
    auto m = match_pair(cur);
    if (!m) return std::nullopt;
    if (m->first == comb_true()) {
      if (m->second != comb_I()) return std::nullopt;
      return n;
    }
    if (m->first != comb_false()) return std::nullopt;
    ++n;
    cur = m->second;
  }
}

TermSet set_otimes(const TermSet& x, const TermSet& y) {
  TermSet r;
  for (const Term& a : x)
    for (const Term& b : y) r.insert(pair_of(a, b));
  return r;
}

TermSet set_oplus(const TermSet& x, const TermSet& y) {
  TermSet r;
  for (const Term& a : x) r.insert(pair_of(comb_true(), a));
  for (const Term& b : y) r.insert(pair_of(comb_false(), b));
  return r;
}

}  // namespace ewt
