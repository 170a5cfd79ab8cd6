#include <doctest.h>

#include "ewt/combinators.hpp"
#include "ewt/instance.hpp"
#include "ewt/random.hpp"
#include "ewt/search.hpp"
#include "ewt/syntax.hpp"

using namespace ewt;

namespace {

const Term S = Term::s();
const Term K = Term::k();

Context ctx() { return Context::with_fuel(10000); }

SearchOptions opts() {
  static const std::vector<Term> pool = standard_pool(5);
  SearchOptions o;
  o.pool = pool;
  return o;
}

Asm base2() { return make_assembly({{"x0", K}, {"x1", S}}); }

// X = {x} named K; Y = {y1, y2} named K, S over x; alpha(y1) = {K}, alpha(y2) = {S}.
IRPredicate two_fibre() {
  Asm x = make_assembly({{"x", K}});
  Asm y = make_assembly({{"y1", K}, {"y2", S}});
  return {Morphism{y, x, {0, 0}, lambda_term("\\u. K")}, {TermSet{K}, TermSet{S}}};
}

bool equiv(const IRPredicate& p, const IRPredicate& q) {
  return search_iR_equiv(ctx(), p, q, opts()).has_value();
}

std::pair<IRImplication, CurryResult> curry_extending(const IRMeet& rp, const IRPredicate& q,
                                                      const IRWitness& w) {
  CurryRun run = curry_with_extension(ctx(), rp, q, w);
  return {run.imp, run.result};
}

}  // namespace

TEST_CASE("leq_eiR: examples") {
  Asm x = base2();
  BasePredicate a{x, {TermSet{K}, TermSet{S, K}}};
  CHECK(leq_eiR(ctx(), a, a, comb_p2()).ok());
  CHECK(leq_eiR(ctx(), a, eiR_top(x), S * K).ok());
  BasePredicate empty{x, {TermSet{}, TermSet{S}}};
  BasePredicate bk{x, {TermSet{K}, TermSet{S}}};
  for (const Term& h : standard_pool(3)) CHECK(leq_eiR(ctx(), empty, bk, h).failed());
  CHECK(leq_eiR(ctx(), a, a, Term::oracle("f")).failed());
}

TEST_CASE("eiR_meet and eiR_reindex") {
  Asm x = base2();
  BasePredicate b{x, {TermSet{K}, TermSet{S}}};
  BasePredicate m = eiR_meet(eiR_top(x), b);
  CHECK(m.values[0] == TermSet{pair_of(comb_false(), K)});
  CHECK(eiR_meet(eiR_top(x), eiR_top(x)).values[1].empty());
  CHECK(leq_eiR(ctx(), m, eiR_top(x), comb_p2()).ok());
  CHECK(leq_eiR(ctx(), m, b, lambda_term("\\xi. <false, p2 xi>")).ok());
  CHECK(leq_eiR(ctx(), b, m, lambda_term("\\xi. p2 (p2 xi)")).ok());

  BasePredicate a{x, {TermSet{S}, TermSet{K, S}}};
  BasePredicate ab = eiR_meet(a, b);
  auto h1 = search_eiR(ctx(), a, ab, opts());
  REQUIRE(h1.has_value());
  CHECK(leq_eiR(ctx(), a, ab, *h1).ok());
  auto h2 = search_eiR(ctx(), b, ab, opts());
  REQUIRE(h2.has_value());
  CHECK(leq_eiR(ctx(), b, ab, *h2).ok());

  CHECK(eiR_reindex(identity(x), b).values == b.values);
  Asm y = make_assembly({{"y0", K}, {"y1", K}, {"y2", K}});
  Morphism c{y, x, {1, 1, 1}, lambda_term("\\u. S")};
  auto r = eiR_reindex(c, b);
  CHECK(r.values == std::vector<TermSet>(3, TermSet{S}));
  for (const TermSet& v : eiR_reindex(c, eiR_top(x)).values) CHECK(v.empty());
}

TEST_CASE("iR_leq: reflexivity, bottom and transitivity") {
  Gen g(5);
  for (int i = 0; i < 20; ++i) {
    Asm x = g.assembly(3, "x");
    IRPredicate p = g.ir_predicate(x, 3, "y");
    CHECK(iR_leq(ctx(), p, p, iR_refl(p)).ok());
    CHECK(iR_leq(ctx(), iR_bottom(x), p, iR_bottom_leq(p, comb_I())).ok());
    CHECK(iR_leq(ctx(), p, iR_top(x), iR_leq_top(p)).ok());
  }
  for (int i = 0; i < 100; ++i) {
    Asm x = g.assembly(3, "x");
    IRMeet qm = iR_meet(g.ir_predicate(x, 3, "a"), g.ir_predicate(x, 3, "b"));
    IRMeet pm = iR_meet(qm.pred, g.ir_predicate(x, 2, "c"));
    const IRPredicate& r = qm.left;
    REQUIRE(iR_leq(ctx(), pm.pred, qm.pred, pm.proj1).ok());
    REQUIRE(iR_leq(ctx(), qm.pred, r, qm.proj1).ok());
    CHECK(iR_leq(ctx(), pm.pred, r, iR_trans(pm.proj1, qm.proj1)).ok());
  }
}

TEST_CASE("iR_leq: failure modes") {
  Asm x = base2();
  IRPredicate p{identity(x), {TermSet{K}, TermSet{}}};
  IRPredicate q{identity(x), {TermSet{S}, TermSet{}}};
  CHECK(iR_leq(ctx(), p, q, {identity(x), comb_p2()}).failed());
  CHECK(iR_leq(ctx(), p, q, {identity(x), lambda_term("\\u. K")}).ok());
  Morphism swap{x, x, {1, 0}, comb_I()};
  CHECK(iR_leq(ctx(), p, q, {swap, lambda_term("\\u. K")}).failed());
}

TEST_CASE("iR_reindex") {
  Gen g(9);
  for (int i = 0; i < 15; ++i) {
    Asm x = g.assembly(3, "x");
    IRPredicate p = g.ir_predicate(x, 3, "y");
    IRPredicate r = iR_reindex(identity(x), p);
    CHECK(r.source()->size() == p.source()->size());
    Pullback pb = pullback(p.display, identity(x));
    Morphism back = pb.p1;
    CHECK(iR_leq(ctx(), r, p, {back, comb_p2()}).ok());
    CHECK(equiv(r, p));

    Morphism k = g.display(x, 3, "z");
    CHECK(equiv(iR_reindex(k, iR_top(x)), iR_top(k.src)));
    Morphism k2 = g.display(k.src, 3, "w");
    CHECK(equiv(iR_reindex(k2, iR_reindex(k, p)), iR_reindex(compose(k, k2), p)));
  }
}

TEST_CASE("iR_exists") {
  Gen g(13);
  Asm x = base2();
  IRPredicate p = g.ir_predicate(x, 3, "y");
  CHECK(same_map(iR_exists(identity(x), p).display, p.display));
  Morphism f = g.display(x, 3, "z");
  CHECK(iR_exists(f, iR_bottom(f.src)).source()->size() == 0);

  for (int i = 0; i < 10; ++i) {
    Asm z = g.assembly(2, "z");
    Morphism h = g.display(z, 3, "x");
    IRPredicate a = g.ir_predicate(z, 2, "a");
    IRPredicate b = g.ir_predicate(h.src, 2, "b");
    IRPredicate lhs = iR_exists(h, iR_meet(iR_reindex(h, a), b).pred);
    IRPredicate rhs = iR_meet(a, iR_exists(h, b)).pred;
    CHECK(equiv(lhs, rhs));
  }
}

TEST_CASE("iR_meet and iR_join") {
  Gen g(17);
  for (int i = 0; i < 20; ++i) {
    Asm x = g.assembly(3, "x");
    IRPredicate p = g.ir_predicate(x, 3, "a");
    IRPredicate q = g.ir_predicate(x, 3, "b");
    IRMeet m = iR_meet(p, q);
    CHECK(iR_leq(ctx(), m.pred, p, m.proj1).ok());
    CHECK(iR_leq(ctx(), m.pred, q, m.proj2).ok());
    CHECK(equiv(iR_meet(p, iR_top(x)).pred, p));

    // glb: r = m itself, mediated by its projections
    IRWitness glb = iR_meet_mediator(m, m.proj1, m.proj2);
    CHECK(iR_leq(ctx(), m.pred, m.pred, glb).ok());

    IRJoin j = iR_join(p, q);
    CHECK(iR_leq(ctx(), p, j.pred, j.inj1).ok());
    CHECK(iR_leq(ctx(), q, j.pred, j.inj2).ok());
    CHECK(iR_leq(ctx(), j.pred, j.pred, iR_join_mediator(j, j.inj1, j.inj2)).ok());

    // mediator into a common upper bound r = p \/ (q /\ p)
    IRMeet qp = iR_meet(q, p);
    IRJoin jr = iR_join(p, qp.pred);
    IRJoin js = iR_join(p, p);
    IRWitness w1 = js.inj1;
    IRWitness w2 = js.inj2;
    CHECK(iR_leq(ctx(), js.pred, js.pred, iR_join_mediator(js, w1, w2)).ok());
    CHECK(iR_leq(ctx(), qp.pred, jr.pred, jr.inj2).ok());

    CHECK(equiv(iR_join(iR_bottom(x), p).pred, p));
  }
}

TEST_CASE("iR_join: mediator with nontrivial inputs") {
  Gen g(19);
  for (int i = 0; i < 30; ++i) {
    Asm x = g.assembly(3, "x");
    IRPredicate r = g.ir_predicate(x, 3, "r");
    IRMeet m1 = iR_meet(r, g.ir_predicate(x, 2, "a"));
    IRMeet m2 = iR_meet(r, g.ir_predicate(x, 2, "b"));
    IRJoin j = iR_join(m1.pred, m2.pred);
    IRWitness w = iR_join_mediator(j, m1.proj1, m2.proj1);
    CHECK(iR_leq(ctx(), j.pred, r, w).ok());
  }
}

TEST_CASE("iR_implication: top and bottom") {
  Gen g(23);
  for (int i = 0; i < 8; ++i) {
    Asm x = g.assembly(2, "x");
    IRPredicate p = g.ir_predicate(x, 2, "y");
    ImplicationUniverse u{{TermSet{}}, {comb_I(), comb_p1(), comb_p2(), lambda_term("\\u. <false, p2 u>")}};
    IRImplication top = iR_implication(ctx(), p, iR_top(x), u);
    CHECK_FALSE(top.empty_universe);
    CHECK(equiv(top.pred, iR_top(x)));
    IRImplication bot = iR_implication(ctx(), iR_bottom(x), p, u);
    CHECK(equiv(bot.pred, iR_top(x)));
  }
  IRImplication e = iR_implication(ctx(), iR_top(base2()), iR_top(base2()), {});
  CHECK(e.empty_universe);
  CHECK(e.pred.source()->size() == 0);
}

TEST_CASE("iR_curry and iR_uncurry") {
  Gen g(29);
  std::size_t verified = 0;
  for (int i = 0; i < 25; ++i) {
    Asm x = g.assembly(2, "x");
    IRPredicate p = g.ir_predicate(x, 2, "p");
    IRPredicate r = g.ir_predicate(x, 2, "r");
    IRMeet rp = iR_meet(r, p);
    // r /\ p <= p via the second projection; r /\ p <= r via the first.
    for (const IRWitness* w : {&rp.proj2, &rp.proj1}) {
      const IRPredicate& q = (w == &rp.proj2) ? p : r;
      REQUIRE(iR_leq(ctx(), rp.pred, q, *w).ok());
      auto [imp, c] = curry_extending(rp, q, *w);
      REQUIRE(c.witness.has_value());
      CHECK(c.witness->ell == comb_p2());
      CHECK(iR_leq(ctx(), r, imp.pred, *c.witness).ok());
      IRWitness back = iR_uncurry(rp, imp, *c.witness);
      CHECK(iR_leq(ctx(), rp.pred, q, back).ok());
      ++verified;
    }
  }
  CHECK(verified == 50);
}

TEST_CASE("iR_curry: universe too small is reported") {
  IRPredicate p = two_fibre();
  IRMeet rp = iR_meet(p, p);
  IRImplication imp = iR_implication(ctx(), p, p, {});
  CurryResult c = iR_curry(ctx(), rp, rp.proj2, imp);
  CHECK_FALSE(c.witness.has_value());
  CHECK_FALSE(c.missing.empty());
  CHECK(c.missing.describe().find("value") != std::string::npos);
}

TEST_CASE("iR_curry: Frobenius-style witness p /\\ p <= p") {
  IRPredicate p = two_fibre();
  IRMeet pp = iR_meet(p, p);
  auto w = search_iR(ctx(), pp.pred, p, opts());
  REQUIRE(w.has_value());
  auto [imp, c] = curry_extending(pp, p, *w);
  REQUIRE(c.witness.has_value());
  CHECK(iR_leq(ctx(), p, imp.pred, *c.witness).ok());
}

TEST_CASE("iR_forall: identity, top and empty fibres") {
  IRPredicate p = two_fibre();
  const Asm& y = p.base();
  std::vector<Term> pool{comb_I(), K * S, comb_p2()};
  IRForall all = iR_forall(ctx(), identity(y), p, pool);
  CHECK(all.tuples.size() == 2);
  CHECK(equiv(all.pred, p));

  IRForall top = iR_forall(ctx(), identity(y), iR_top(y), pool);
  for (const TermSet& v : top.pred.alpha) CHECK(v.empty());
  CHECK(equiv(top.pred, iR_top(y)));

  Asm x = base2();
  Morphism f{y, x, {0}, lambda_term("\\u. K")};
  IRForall e = iR_forall(ctx(), f, p, pool);
  // x1 has an empty fibre: every pool term qualifies with the empty section.
  std::size_t at_x1 = 0;
  for (std::size_t i = 0; i < e.tuples.size(); ++i)
    if (e.tuples[i].x == 1) {
      ++at_x1;
      CHECK(e.pred.alpha[i].empty());
    }
  CHECK(at_x1 == pool.size());
}

TEST_CASE("iR_forall: mates") {
  Gen g(31);
  std::size_t checked = 0;
  for (int i = 0; i < 20; ++i) {
    Asm x = g.assembly(2, "x");
    Morphism f = g.display(x, 3, "y");
    IRPredicate p = g.ir_predicate(f.src, 3, "p");
    IRPredicate q = g.ir_predicate(x, 2, "q");
    IRPredicate rq = iR_reindex(f, q);
    auto up_in = search_iR(ctx(), rq, p, opts());
    if (!up_in) continue;
    std::vector<Term> pool;
    MateResult up;
    for (int round = 0; round < 3; ++round) {
      IRForall all = iR_forall(ctx(), f, p, pool);
      up = forall_mate_up(ctx(), all, q, *up_in);
      if (up.witness) {
        CHECK(iR_leq(ctx(), q, all.pred, *up.witness).ok());
        IRWitness down = forall_mate_down(all, q, *up.witness);
        CHECK(iR_leq(ctx(), rq, p, down).ok());
        ++checked;
        break;
      }
      for (const Term& t : up.missing.terms) pool.push_back(t);
    }
    CHECK(up.witness.has_value());
  }
  CHECK(checked > 5);
}

TEST_CASE("iR_forall: two-element fibre with an explicit section") {
  Asm x = make_assembly({{"x", K}});
  Asm y = make_assembly({{"y1", K}, {"y2", S}});
  Morphism f{y, x, {0, 0}, lambda_term("\\u. K")};
  Asm yp = make_assembly({{"a", pair_of(K, K)}, {"b", pair_of(S, S)}, {"c", pair_of(S, K)}});
  IRPredicate p{Morphism{yp, y, {0, 1, 1}, comb_p1()}, {TermSet{K}, TermSet{S}, TermSet{}}};
  Term e = lambda_term("\\u. <u, u>");
  IRForall all = iR_forall(ctx(), f, p, {e, lambda_term("\\u. <u, K>")});
  REQUIRE_FALSE(all.tuples.empty());
  CHECK(all.tuples[0].k == std::vector<std::size_t>{0, 1});
  CHECK(all.pred.alpha[0] == TermSet{pair_of(K, K), pair_of(S, S)});

  IRWitness w{Morphism{x, all.pred.source(), {0}, lambda_term("\\u. <u, e>", {{"e", e}})},
              lambda_term("\\u. K")};
  IRPredicate q{identity(x), {TermSet{K}}};
  REQUIRE(iR_leq(ctx(), q, all.pred, w).ok());
  IRWitness down = forall_mate_down(all, q, w);
  CHECK(iR_leq(ctx(), iR_reindex(f, q), p, down).ok());
  MateResult up = forall_mate_up(ctx(), all, q, down);
  // the transposed e term is new, so the carrier has to grow first
  REQUIRE_FALSE(up.witness.has_value());
  REQUIRE(up.missing.terms.size() == 1);
  IRForall grown = iR_forall(ctx(), f, p, {e, lambda_term("\\u. <u, K>"), up.missing.terms[0]});
  up = forall_mate_up(ctx(), grown, q, forall_mate_down(grown, q, w));
  REQUIRE(up.witness.has_value());
  CHECK(iR_leq(ctx(), q, grown.pred, *up.witness).ok());
}

TEST_CASE("classify") {
  Asm x = base2();
  Classification t = classify(iR_top(x));
  CHECK(t.canonical.source()->size() == 2);
  CHECK(t.canonical.source()->names[1] == pair_of(S, S));
  CHECK(iR_leq(ctx(), t.source, t.canonical, t.to_canonical).ok());
  CHECK(iR_leq(ctx(), t.canonical, t.source, t.from_canonical).ok());

  Classification c = classify(two_fibre());
  CHECK(c.chi(0, K) == TermFamily{TermSet{K}});
  CHECK(c.chi(0, S) == TermFamily{TermSet{S}});
  CHECK(c.chi(0, comb_I()).empty());

  Gen g(37);
  for (int i = 0; i < 30; ++i) {
    Asm b = g.assembly(3, "x");
    IRPredicate p = g.ir_predicate(b, 4, "y");
    Classification k = classify(p);
    CHECK(iR_leq(ctx(), p, k.canonical, k.to_canonical).ok());
    CHECK(iR_leq(ctx(), k.canonical, p, k.from_canonical).ok());
    Classification kk = classify(k.canonical);
    CHECK(kk.canonical.source()->size() == k.canonical.source()->size());
    CHECK(iR_leq(ctx(), kk.canonical, k.canonical, kk.from_canonical).ok());
    CHECK(iR_leq(ctx(), k.canonical, kk.canonical, kk.to_canonical).ok());
  }
}

TEST_CASE("Frobenius and Beck-Chevalley witnesses") {
  Gen g(41);
  for (int i = 0; i < 15; ++i) {
    Asm b = g.assembly(2, "b");
    Morphism f = g.display(b, 3, "a");
    IRPredicate alpha = g.ir_predicate(b, 3, "y");
    IRPredicate beta = g.ir_predicate(f.src, 3, "z");
    IsoWitnesses fr = frobenius(f, alpha, beta);
    CHECK(verify(ctx(), fr.forward.mediator).ok());
    CHECK(verify(ctx(), fr.backward.mediator).ok());
    CHECK(iR_leq(ctx(), fr.lhs, fr.rhs, fr.forward).ok());
    CHECK(iR_leq(ctx(), fr.rhs, fr.lhs, fr.backward).ok());

    Morphism h = g.display(b, 3, "c");
    IsoWitnesses bc = beck_chevalley(f, h, beta);
    CHECK(iR_leq(ctx(), bc.lhs, bc.rhs, bc.forward).ok());
    CHECK(iR_leq(ctx(), bc.rhs, bc.lhs, bc.backward).ok());
  }
}
