#include <doctest.h>

#include <random>

#include "ewt/combinators.hpp"
#include "ewt/lambda.hpp"
#include "ewt/reduce.hpp"
#include "ewt/syntax.hpp"
#include "support/env_eval.hpp"
#include "support/random_lambda.hpp"

using namespace ewt;

namespace {

const Term S = Term::s();
const Term K = Term::k();

Context ctx10() { return Context::with_fuel(10); }

}  // namespace

TEST_CASE("reduce: basic redexes") {
  auto o = reduce(ctx10(), K * K * S);
  REQUIRE(o.converged());
  CHECK(o.value == K);
  CHECK(o.steps == 1);

  o = reduce(ctx10(), S * K * K * S);
  REQUIRE(o.converged());
  CHECK(o.value == S);

  Term sii = S * comb_I() * comb_I();
  o = reduce(Context::with_fuel(100), sii * sii);
  CHECK(o.exhausted());
  CHECK(o.steps == 100);
}

TEST_CASE("apply: partial applications are values") {
  auto o = apply(ctx10(), K, S);
  REQUIRE(o.converged());
  CHECK(o.value == K * S);
  CHECK(o.steps == 0);

  o = apply(ctx10(), S, K);
  REQUIRE(o.converged());
  CHECK(o.value == S * K);

  o = apply(ctx10(), comb_I(), Term::oracle("f"));
  REQUIRE(o.converged());
  CHECK(o.value == Term::oracle("f"));
}

TEST_CASE("reduce: normalises under head normal forms") {
  // K (K K S) is head normal but its argument is a redex.
  auto o = reduce(ctx10(), K * (K * K * S));
  REQUIRE(o.converged());
  CHECK(o.value == K * K);
  CHECK(o.value.is_normal());
}

TEST_CASE("reduce: oracle tables") {
  auto pca = std::make_shared<PcaSpec>();
  pca->oracles["f"] = {{0, 1}, {2, 5}};
  Context c;
  c.pca = pca;
  Term f = Term::oracle("f");

  auto o = reduce(c, f * numeral(2));
  REQUIRE(o.converged());
  CHECK(decode_numeral(o.value) == 5u);

  // argument reduces to a numeral first
  o = reduce(c, f * (comb_I() * numeral(0)));
  REQUIRE(o.converged());
  CHECK(decode_numeral(o.value) == 1u);

  CHECK(reduce(c, f * numeral(1)).stuck());
  CHECK(reduce(c, f * K).stuck());
  CHECK(reduce(c, Term::oracle("g") * numeral(0)).stuck());
  // stuck is definite, unlike divergence
  Term sii = S * comb_I() * comb_I();
  CHECK(reduce(c, f * (sii * sii)).exhausted());
}

TEST_CASE("reduce: fuel monotonicity on a converging term") {
  Term t = comb_p2() * pair_of(K, S);
  auto full = reduce(Context::with_fuel(1000), t);
  REQUIRE(full.converged());
  for (std::uint64_t f = 0; f < full.steps; ++f)
    CHECK(reduce(Context::with_fuel(f), t).exhausted());
  for (std::uint64_t f = full.steps; f < full.steps + 5; ++f) {
    auto o = reduce(Context::with_fuel(f), t);
    REQUIRE(o.converged());
    CHECK(o.value == full.value);
    CHECK(o.steps == full.steps);
  }
}

TEST_CASE("bracket abstraction rules") {
  Term I = comb_I();
  CHECK(compile(bracket_abstract("x", var("x"))) == I);
  CHECK(compile(bracket_abstract("x", cst(K))) == K * K);
  CHECK(compile(bracket_abstract("x", lapp(var("x"), var("x")))) == S * I * I);
  // a variable other than x is wrapped in K and stays open
  Lam open = bracket_abstract("x", var("y"));
  REQUIRE(open->kind == LambdaExpr::Kind::App);
  CHECK(open->b->kind == LambdaExpr::Kind::Var);
  CHECK_THROWS_AS(compile(open), UnboundVariable);
}

TEST_CASE("compile") {
  Context c = Context::with_fuel(1000);
  CHECK(compile(lam("x", var("x"))) == comb_I());

  Term k2 = compile(lam("x", lam("y", var("x"))));
  auto o = apply(c, k2, S, K);
  REQUIRE(o.converged());
  CHECK(o.value == S);

  Term snd = compile(lam("xi", lapp(cst(comb_p2()), var("xi"))));
  o = apply(c, snd, pair_of(K, S));
  REQUIRE(o.converged());
  CHECK(o.value == S);

  CHECK_THROWS_AS(compile(lam("x", var("y"))), UnboundVariable);
}

TEST_CASE("combinators") {
  Context c = Context::with_fuel(1000);
  auto o = apply(c, comb_p1(), pair_of(K, S));
  REQUIRE(o.converged());
  CHECK(o.value == K);
  o = apply(c, comb_p2(), pair_of(K, S));
  REQUIRE(o.converged());
  CHECK(o.value == S);
  o = reduce(c, apply_all(comb_case(), {comb_true(), S, K}));
  REQUIRE(o.converged());
  CHECK(o.value == S);
  o = reduce(c, apply_all(comb_case(), {comb_false(), S, K}));
  REQUIRE(o.converged());
  CHECK(o.value == K);

  // PAIR a b normalises to the pair shape used everywhere else
  o = reduce(c, apply_all(comb_pair(), {K, S}));
  REQUIRE(o.converged());
  CHECK(o.value == pair_of(K, S));

  CHECK(combinator("PAIR") == comb_pair());
  CHECK(combinator("TRUE") == K);
  CHECK(combinator("I") == comb_I());
  CHECK_FALSE(combinator("Y").has_value());

  CHECK(comb_false() == S * (S * (K * S) * (K * K)) * (K * K));
  for (const Term& t : {comb_I(), comb_false(), comb_pair(), comb_p1(), comb_p2(), comb_case()})
    CHECK(t.is_normal());
}

TEST_CASE("numerals") {
  CHECK(decode_numeral(numeral(0)) == 0u);
  CHECK(decode_numeral(numeral(3)) == 3u);
  CHECK_FALSE(decode_numeral(K).has_value());
  CHECK_FALSE(decode_numeral(pair_of(K, K)).has_value());
  for (std::uint64_t n = 0; n < 20; ++n) CHECK(decode_numeral(numeral(n)) == n);
}

TEST_CASE("otimes and oplus") {
  CHECK(set_otimes({K}, {S}) == TermSet{pair_of(K, S)});
  CHECK(set_oplus({}, {}).empty());
  CHECK(set_oplus({K}, {S}) == TermSet{pair_of(comb_true(), K), pair_of(comb_false(), S)});
  CHECK(set_otimes({K, S}, {}).empty());
}

TEST_CASE("sub-PCA membership") {
  Term f = Term::oracle("f");
  CHECK(in_subpca(S * K * K));
  CHECK_FALSE(in_subpca(f));
  CHECK_FALSE(in_subpca(K * (Term::oracle("g") * K)));
}

TEST_CASE("surface syntax") {
  CHECK(parse_term("(S K K) S") == S * K * K * S);
  CHECK(parse_term("K K S") == K * K * S);
  CHECK(parse_term("#f num:2") == Term::oracle("f") * numeral(2));
  CHECK(parse_term("<K, S>") == pair_of(K, S));
  CHECK(parse_term("\\x. x") == comb_I());
  CHECK(parse_term("\\x y. x") == compile(lam("x", lam("y", var("x")))));
  CHECK(parse_term("\\x. <x, K>") == compile(lam("x", lpair(var("x"), cst(K)))));
  CHECK(parse_term("p1 <K, S>") == comb_p1() * pair_of(K, S));

  TermEnv env{{"w", S * S}};
  CHECK(parse_term("w K", env) == S * S * K);
  CHECK(parse_term("\\w. w", env) == comb_I());

  CHECK(print(numeral(2)) == "num:2");
  CHECK(print(pair_of(K, S)) == "<K, S>");
  CHECK(print(S * K * K * S) == "I S");
  CHECK(print(K * (S * K)) == "K (S K)");
  CHECK(print(comb_p2()) == "p2");
  CHECK(print(Term::oracle("f") * K) == "#f K");

  CHECK_THROWS_AS(parse_term("K )"), ParseError);
  CHECK_THROWS_AS(parse_term("foo"), ParseError);
  CHECK_THROWS_AS(parse_term("<K S>"), ParseError);
  try {
    parse_term("K\n  zz");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 3);
  }
}

TEST_CASE("printer round trip on enumerated and random terms") {
  std::mt19937_64 rng(7);
  std::vector<Term> atoms{S, K, Term::oracle("f")};
  std::function<Term(int)> gen = [&](int depth) -> Term {
    if (depth == 0 || rng() % 3 == 0) {
      switch (rng() % 6) {
        case 0: return numeral(rng() % 3);
        case 1: return comb_p1();
        default: return atoms[rng() % atoms.size()];
      }
    }
    if (rng() % 4 == 0) return pair_of(gen(depth - 1), gen(depth - 1));
    return gen(depth - 1) * gen(depth - 1);
  };
  for (int i = 0; i < 500; ++i) {
    Term t = gen(5);
    CHECK_MESSAGE(parse_term(print(t)) == t, print(t));
  }
}

TEST_CASE("term order and size") {
  CHECK(compare(K, S) < 0);
  CHECK(compare(S, Term::oracle("a")) < 0);
  CHECK(compare(Term::oracle("a"), Term::oracle("b")) < 0);
  CHECK(compare(Term::oracle("z"), K * K) < 0);
  CHECK(compare(K * S, S * K) < 0);
  CHECK(compare(S * K, K * (K * K)) < 0);
  CHECK((S * K * K).size() == 3);
  CHECK(compare(S * K * K, S * K * K) == 0);
}

TEST_CASE("evaluator oracle agrees on the fixed examples") {
  PcaSpec pca;
  testing::EnvEvaluator ev(pca, 10000);
  auto r = ev.run(lam("x", lam("y", var("x"))), {S, K});
  REQUIRE(r.result == testing::EnvEvaluator::Result::Value);
  CHECK(r.value == S);
  r = ev.run(lam("xi", lapp(cst(comb_p2()), var("xi"))), {pair_of(K, S)});
  REQUIRE(r.result == testing::EnvEvaluator::Result::Value);
  CHECK(r.value == S);
  r = ev.run(cst(comb_case()), {comb_true(), S, K});
  REQUIRE(r.result == testing::EnvEvaluator::Result::Value);
  CHECK(r.value == S);
}

TEST_CASE("compiler agrees with the evaluator on random expressions") {
  testing::AgreementStats st = testing::compiler_agreement(5, 100);
  CHECK(st.conclusive == 100);
  CHECK(st.converged > 50);
  CHECK_MESSAGE(st.disagreements.empty(), (st.disagreements.empty() ? "" : st.disagreements[0]));
  MESSAGE("converged " << st.converged << ", diverged " << st.diverged << ", inconclusive "
                       << st.inconclusive);
}
