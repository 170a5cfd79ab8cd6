#include "ewt/laws.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "ewt/combinators.hpp"
#include "ewt/ext_weihrauch.hpp"
#include "ewt/instance.hpp"
#include "ewt/random.hpp"
#include "ewt/search.hpp"
#include "ewt/syntax.hpp"
#include "ewt/topos.hpp"

namespace ewt {

std::size_t SuiteReport::count(Verdict::Kind k) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [k](const LawCase& c) { return c.verdict.kind == k; }));
}

namespace {

const Term S = Term::s();
const Term K = Term::k();

struct Runner {
  SuiteReport report;
  Context ctx;
  SearchOptions search;

  Runner(const std::string& name, const LawOptions& opt) {
    report.suite = name;
    ctx.fuel = opt.fuel;
    ctx.exec = opt.exec;
    search.pool = standard_pool(opt.pool_size);
  }

  void add(std::string name, Verdict v) {
    report.verdict &= v;
    report.cases.push_back({std::move(name), std::move(v)});
  }
  void expect(std::string name, bool ok, const std::string& why) {
    add(std::move(name), ok ? Verdict::holds() : Verdict::fails(why));
  }
  void note(std::string s) { report.notes.push_back(std::move(s)); }
};

std::string num(std::size_t i) { return std::to_string(i); }

// ---------------------------------------------------------------------------
// K and S axioms on random closed terms.

Verdict same_when_converging(const Context& ctx, const Term& lhs, const Term& rhs,
                             std::size_t& diverging) {
  Outcome l = reduce(ctx, lhs);
  Outcome r = reduce(ctx, rhs);
  if (l.converged() && r.converged()) {
    if (l.value == r.value) return Verdict::holds();
    return Verdict::fails(print(l.value) + " vs " + print(r.value));
  }
  // lhs makes one more step than rhs; converging lhs forces converging rhs.
  if (l.converged()) return Verdict::fails("lhs converges, rhs does not");
  ++diverging;
  return Verdict::holds();
}

SuiteReport suite_pca(const LawOptions& opt) {
  Runner run("pca", opt);
  Gen gen(opt.seed);
  std::size_t diverging = 0, sab = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    Term a = gen.sk_term(7), b = gen.sk_term(7), c = gen.sk_term(7);
    Verdict v = same_when_converging(run.ctx, K * a * b, a, diverging);
    v &= same_when_converging(run.ctx, S * a * b * c, a * c * (b * c), diverging);
    Outcome na = reduce(run.ctx, a), nb = reduce(run.ctx, b);
    if (na.converged() && nb.converged()) {
      Outcome ns = reduce(run.ctx, S * a * b);
      if (!ns.converged() || ns.value != S * na.value * nb.value)
        v &= Verdict::fails("S a b is not the value S a' b'");
      ++sab;
    }
    if (!v.ok()) v.detail = print(a) + " | " + print(b) + " | " + print(c) + ": " + v.detail;
    run.add("triple " + num(i), v);
  }
  run.note("sides without a value within fuel: " + num(diverging));
  run.note("S a b checked on " + num(sab) + " triples");
  return run.report;
}

// ---------------------------------------------------------------------------
// Fixed regression instances.

Asm reg_base() { return make_assembly({{"x0", K}, {"x1", S}}); }

IRPredicate reg_p() {
  Asm y = make_assembly({{"y0", pair_of(K, K)}, {"y1", pair_of(K, S)}, {"y2", pair_of(S, K)}});
  return {Morphism{y, reg_base(), {0, 0, 1}, comb_p1()}, {TermSet{K}, TermSet{S}, TermSet{comb_I()}}};
}

IRPredicate reg_q() {
  Asm z = make_assembly({{"z0", pair_of(K, comb_I())}, {"z1", pair_of(S, comb_I())}});
  return {Morphism{z, reg_base(), {0, 1}, comb_p1()}, {TermSet{S}, TermSet{K, S}}};
}

EWPredicate reg_g() {
  EWPredicate g{reg_base(), {}};
  g.add(0, K, TermSet{S});
  g.add(0, K, TermSet{K, comb_I()});
  g.add(1, comb_false(), TermSet{});
  g.add(1, S, TermSet{K});
  return g;
}

SuiteReport suite_witnesses(const LawOptions& opt) {
  Runner run("witnesses", opt);
  const Context& ctx = run.ctx;
  IRPredicate p = reg_p(), q = reg_q();

  IRJoin j = iR_join(p, q);
  run.add("join injection 1, l = p2", iR_leq(ctx, p, j.pred, j.inj1));
  run.add("join injection 2, l = p2", iR_leq(ctx, q, j.pred, j.inj2));
  IRMeet pq = iR_meet(p, q);
  IRJoin jm = iR_join(p, pq.pred);
  run.add("join mediator", iR_leq(ctx, jm.pred, p, iR_join_mediator(jm, iR_refl(p), pq.proj1)));
  for (const Term& l : {K, S, comb_I(), comb_p2()})
    run.add("bottom, l = " + print(l), iR_leq(ctx, iR_bottom(reg_base()), q, iR_bottom_leq(q, l)));

  IRMeet qp = iR_meet(q, p);
  CurryRun cr = curry_with_extension(ctx, qp, p, qp.proj2);
  if (cr.result.witness) {
    Verdict v = iR_leq(ctx, q, cr.imp.pred, *cr.result.witness);
    if (cr.result.witness->ell != comb_p2()) v &= Verdict::fails("l is not p2");
    run.add("curry, l = p2", v);
  } else {
    run.add("curry, l = p2", Verdict::fails("universe too small: " + cr.result.missing.describe()));
  }

  {
    Asm x = make_assembly({{"x", K}});
    Asm y = make_assembly({{"y1", K}, {"y2", S}});
    Morphism f{y, x, {0, 0}, lambda_term("\\u. K")};
    Asm yp = make_assembly({{"a", pair_of(K, K)}, {"b", pair_of(S, S)}, {"c", pair_of(S, K)}});
    IRPredicate pp{Morphism{yp, y, {0, 1, 1}, comb_p1()}, {TermSet{K}, TermSet{S}, TermSet{}}};
    Term e = lambda_term("\\u. <u, u>");
    std::vector<Term> pool{e, lambda_term("\\u. <u, K>")};
    IRForall all = iR_forall(ctx, f, pp, pool);
    IRPredicate qq{identity(x), {TermSet{K}}};
    IRWitness w{Morphism{x, all.pred.source(), {0}, lambda_term("\\u. <u, e>", {{"e", e}})},
                lambda_term("\\u. K")};
    IRWitness down = forall_mate_down(all, qq, w);
    run.add("forall mate down", iR_leq(ctx, iR_reindex(f, qq), pp, down));
    MateResult up = forall_mate_up(ctx, all, qq, down);
    for (const Term& t : up.missing.terms) pool.push_back(t);
    IRForall grown = iR_forall(ctx, f, pp, pool);
    up = forall_mate_up(ctx, grown, qq, forall_mate_down(grown, qq, w));
    run.add("forall mate up", up.witness ? iR_leq(ctx, qq, grown.pred, *up.witness)
                                         : Verdict::fails("missing: " + up.missing.describe()));
  }

  for (const auto& [name, pred] : {std::pair{"p", p}, std::pair{"q", q}}) {
    Classification c = classify(pred);
    run.add(std::string("classify ") + name + ", to canonical",
            iR_leq(ctx, c.source, c.canonical, c.to_canonical));
    run.add(std::string("classify ") + name + ", from canonical",
            iR_leq(ctx, c.canonical, c.source, c.from_canonical));
  }

  {
    Assembly xa{{"a", "b"}, {TermSet{K, S}, TermSet{comb_I()}}};
    std::vector<TermSet> phi{TermSet{K}, TermSet{S, comb_I()}};
    Partition part = partition_predicate(xa, phi);
    Assembly xp = as_assembly(*part.carrier);
    run.add("partition, l2 = \\x. p1 (p2 x)",
            asm_instance_leq(ctx, xa, phi, xp, part.alpha.values, part.forward));
    run.add("partition, backward", asm_instance_leq(ctx, xp, part.alpha.values, xa, phi, part.backward));
  }

  EWPredicate g = reg_g();
  EWPredicate fg = to_eW(to_iR(g));
  run.add("FG(g) <= g, l1 = \\xi. p2 (p2 xi), l2 = p2", leq_extW(ctx, fg, g, fg_down()));
  run.add("g <= FG(g), l1 = k, l2 = p2", leq_extW(ctx, g, fg, {K, comb_p2()}));
  Verdict with_i = leq_extW(ctx, g, fg, fg_up());
  run.note(std::string("g <= FG(g) with l1 = I, l2 = p2: ") + to_string(with_i.kind));
  IRPredicate gfp = to_iR(to_eW(p));
  run.add("p <= GF(p)", iR_leq(ctx, p, gfp, gf_up(p)));
  run.add("GF(p) <= p", iR_leq(ctx, gfp, p, gf_down(p)));
  return run.report;
}

// ---------------------------------------------------------------------------

SuiteReport suite_heyting(const LawOptions& opt) {
  Runner run("heyting", opt);
  const Context& ctx = run.ctx;
  Gen gen(opt.seed);
  std::size_t extended = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    Asm x = gen.assembly(3, "x");
    IRPredicate p = gen.ir_predicate(x, 3, "p");
    IRPredicate q = gen.ir_predicate(x, 3, "q");
    IRPredicate r = gen.ir_predicate(x, 3, "r");
    std::string at = "instance " + num(i) + ": ";

    Verdict lat;
    IRMeet m = iR_meet(p, q);
    lat &= iR_leq(ctx, m.pred, p, m.proj1);
    lat &= iR_leq(ctx, m.pred, q, m.proj2);
    IRMeet t = iR_meet(m.pred, r);
    IRWitness tp = iR_trans(t.proj1, m.proj1), tq = iR_trans(t.proj1, m.proj2);
    lat &= iR_leq(ctx, t.pred, p, tp);
    lat &= iR_leq(ctx, t.pred, m.pred, iR_meet_mediator(m, tp, tq));
    IRJoin j = iR_join(p, q);
    lat &= iR_leq(ctx, p, j.pred, j.inj1);
    lat &= iR_leq(ctx, q, j.pred, j.inj2);
    IRMeet pr = iR_meet(p, r), qr = iR_meet(q, r);
    IRJoin jr = iR_join(pr.pred, qr.pred);
    lat &= iR_leq(ctx, jr.pred, r, iR_join_mediator(jr, pr.proj2, qr.proj2));
    lat &= iR_leq(ctx, p, iR_top(x), iR_leq_top(p));
    lat &= iR_leq(ctx, iR_bottom(x), p, iR_bottom_leq(p, comb_p2()));
    run.add(at + "lattice", lat);

    // r /\ p <= q' for q' = p and q' = r /\ p's first factor, curried and back.
    IRMeet rp = iR_meet(r, p);
    for (const auto& [label, target, w] :
         {std::tuple{"p", p, rp.proj2}, std::tuple{"r", r, rp.proj1}}) {
      Verdict v = iR_leq(ctx, rp.pred, target, w);
      CurryRun c = curry_with_extension(ctx, rp, target, w);
      extended += c.extensions;
      if (!c.result.witness) {
        v &= Verdict::fails("universe too small after extension: " + c.result.missing.describe());
      } else {
        v &= iR_leq(ctx, r, c.imp.pred, *c.result.witness);
        v &= iR_leq(ctx, rp.pred, target, iR_uncurry(rp, c.imp, *c.result.witness));
      }
      run.add(at + "adjunction into " + label, v);
    }
  }
  run.note("universe extensions: " + num(extended));
  return run.report;
}

// ---------------------------------------------------------------------------

SuiteReport suite_frobenius(const LawOptions& opt) {
  Runner run("frobenius", opt);
  const Context& ctx = run.ctx;
  Gen gen(opt.seed);
  for (std::size_t i = 0; i < 25; ++i) {
    Asm b = gen.assembly(3, "b");
    Morphism f = gen.display(b, 3, "a");
    IsoWitnesses w = frobenius(f, gen.ir_predicate(b, 3, "y"), gen.ir_predicate(f.src, 3, "z"));
    run.add("frobenius " + num(i) + ", lhs <= rhs", iR_leq(ctx, w.lhs, w.rhs, w.forward));
    run.add("frobenius " + num(i) + ", rhs <= lhs", iR_leq(ctx, w.rhs, w.lhs, w.backward));
  }
  for (std::size_t i = 0; i < 25; ++i) {
    Asm b = gen.assembly(3, "b");
    Morphism f = gen.display(b, 3, "a");
    Morphism g = gen.display(b, 3, "c");
    IsoWitnesses w = beck_chevalley(f, g, gen.ir_predicate(f.src, 3, "y"));
    run.add("beck-chevalley " + num(i) + ", lhs <= rhs", iR_leq(ctx, w.lhs, w.rhs, w.forward));
    run.add("beck-chevalley " + num(i) + ", rhs <= lhs", iR_leq(ctx, w.rhs, w.lhs, w.backward));
  }
  return run.report;
}

// ---------------------------------------------------------------------------

SuiteReport suite_fg(const LawOptions& opt) {
  Runner run("fg", opt);
  const Context& ctx = run.ctx;
  Gen gen(opt.seed);
  auto [nat_down, nat_up] = naturality_witnesses();
  for (std::size_t i = 0; i < 50; ++i) {
    Asm b = gen.assembly(3, "x");
    std::string at = "instance " + num(i) + ": ";
    EWPredicate e = gen.ew_predicate(b, 4);
    EWPredicate efg = to_eW(to_iR(e));
    Verdict fg = leq_extW(ctx, efg, e, fg_down());
    fg &= leq_extW(ctx, e, efg, fg_up());
    run.add(at + "FG round trip", fg);

    IRPredicate p = gen.ir_predicate(b, 4, "y");
    IRPredicate pgf = to_iR(to_eW(p));
    Verdict gf = iR_leq(ctx, p, pgf, gf_up(p));
    gf &= iR_leq(ctx, pgf, p, gf_down(p));
    run.add(at + "GF round trip", gf);

    Morphism k = gen.display(b, 3, "z");
    EWPredicate lhs = eW_reindex(k, to_eW(p));
    EWPredicate rhs = to_eW(iR_reindex(k, p));
    Verdict nat = leq_extW(ctx, lhs, rhs, nat_down);
    nat &= leq_extW(ctx, rhs, lhs, nat_up);
    run.add(at + "naturality of F", nat);

    IRPredicate gl = to_iR(eW_reindex(k, e));
    IRPredicate gr = iR_reindex(k, to_iR(e));
    auto [gw1, gw2] = G_naturality(k, e);
    Verdict gn = iR_leq(ctx, gl, gr, gw1);
    gn &= iR_leq(ctx, gr, gl, gw2);
    run.add(at + "naturality of G", gn);
  }
  return run.report;
}

// ---------------------------------------------------------------------------

SuiteReport suite_terminal(const LawOptions& opt) {
  Runner run("terminal", opt);
  const Context& ctx = run.ctx;
  Gen gen(opt.seed);
  std::vector<Term> l1s{comb_I(), K * comb_I(), comb_p1(), comb_p2(), K * K};
  std::vector<Term> l2s{comb_p2(), comb_p1(), lambda_term("\\xi. K"), comb_I()};
  std::size_t holds = 0, fails = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    Degree d1 = gen.degree(3);
    Degree d2 = gen.coin() ? d1 : gen.degree(3);
    EWPredicate e1 = from_degree(d1), e2 = from_degree(d2);
    Verdict v;
    for (const Term& m1 : l1s)
      for (const Term& m2 : l2s) {
        Verdict a = leq_degree(ctx, d1, d2, m1, m2);
        Verdict b = leq_extW(ctx, e1, e2, {lambda_term("\\xi. m (p2 xi)", {{"m", m1}}), m2});
        if (a.kind != b.kind)
          v &= Verdict::fails("witness (" + print(m1) + ", " + print(m2) + "): degree " +
                              to_string(a.kind) + ", fibre " + to_string(b.kind));
        (a.ok() ? holds : fails)++;
      }
    run.add("pair " + num(i), v);
  }
  run.note("degree verdicts: " + num(holds) + " holds, " + num(fails) + " fails");
  return run.report;
}

// ---------------------------------------------------------------------------

struct ArrowEquiv {
  const Context& ctx;
  SearchOptions opt;
  Verdict operator()(const EWPredicate& f, const EWPredicate& g) const {
    auto a = search_extW(ctx, f, g, opt);
    auto b = search_extW(ctx, g, f, opt);
    if (!a || !b) return Verdict::unknown("no witness found");
    Verdict v = leq_extW(ctx, f, g, *a);
    v &= leq_extW(ctx, g, f, *b);
    return v;
  }
};

SuiteReport suite_topos(const LawOptions& opt) {
  Runner run("topos", opt);
  const Context& ctx = run.ctx;
  SearchOptions so = run.search;
  so.synth.depth = 8;

  Asm x1 = make_assembly({{"u0", K}});
  Asm x2 = reg_base();
  Asm y2 = make_assembly({{"y0", pair_of(K, K)}, {"y1", pair_of(S, S)}});
  ToposObject d1 = embed_R(diagonal(x1));
  ToposObject d2 = embed_R(diagonal(x2));
  ToposObject e2 = embed_R(diagonal(y2));
  // Everything related, with trivial evidence and with evidence K.
  ToposObject full = make_object(x2, EWPredicate{});
  ToposObject full_k = make_object(x2, EWPredicate{});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) {
      Term key = pair_of(x2->names[i], x2->names[k]);
      full.rho.add(full.square.index(i, k), key, TermSet{});
      full_k.rho.add(full_k.square.index(i, k), key, TermSet{K});
    }

  std::vector<std::pair<std::string, ToposObject>> objects{
      {"discrete 1", d1}, {"discrete 2", d2}, {"discrete 2'", e2}, {"full 2", full}, {"full 2, evidence K", full_k}};
  for (const auto& [name, o] : objects)
    run.add("object " + name, validate_object(ctx, o, std::nullopt, so).verdict);

  Morphism f{x2, y2, {0, 1}, lambda_term("\\u. <u, u>")};
  Morphism g{y2, x1, {0, 0}, lambda_term("\\u. K")};
  Morphism h{x1, x2, {1}, lambda_term("\\u. S")};
  so.synth.helpers = {f.realizer, g.realizer, h.realizer, compose(g, f).realizer,
                      compose(h, g).realizer};
  ToposArrow to_full = make_arrow(d2, full, EWPredicate{});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      to_full.phi.add(to_full.rel.index(i, k), pair_of(x2->names[i], x2->names[k]), TermSet{});

  std::vector<std::pair<std::string, ToposArrow>> arrows{
      {"graph f", graph_arrow(d2, e2, f)},
      {"graph g", graph_arrow(e2, d1, g)},
      {"graph h", graph_arrow(d1, d2, h)},
      {"identity full", identity_arrow(full)},
      {"identity full, evidence K", identity_arrow(full_k)},
      {"discrete to full", to_full}};
  for (auto& [name, a] : arrows) run.add("arrow " + name, validate_arrow(ctx, a, so).verdict);

  ArrowEquiv equiv{ctx, so};
  for (const auto& [name, a] : arrows) {
    ArrowReport r1, r2;
    ToposArrow left = compose(ctx, identity_arrow(a.source), a, so, &r1);
    ToposArrow right = compose(ctx, a, identity_arrow(a.target), so, &r2);
    Verdict v = r1.verdict;
    v &= r2.verdict;
    v &= equiv(left.phi, a.phi);
    v &= equiv(right.phi, a.phi);
    run.add("identity laws, " + name, v);
  }
  {
    const ToposArrow& a = arrows[0].second;
    const ToposArrow& b = arrows[1].second;
    const ToposArrow& c = arrows[2].second;
    ArrowReport r;
    Verdict v;
    ToposArrow ab = compose(ctx, a, b, so, &r);
    v &= r.verdict;
    ToposArrow ab_c = compose(ctx, ab, c, so, &r);
    v &= r.verdict;
    ToposArrow bc = compose(ctx, b, c, so, &r);
    v &= r.verdict;
    ToposArrow a_bc = compose(ctx, a, bc, so, &r);
    v &= r.verdict;
    v &= equiv(ab_c.phi, a_bc.phi);
    run.add("associativity, f g h", v);
    ToposArrow bc_a = compose(ctx, bc, a, so, &r);
    v = r.verdict;
    ToposArrow b_ca = compose(ctx, b, compose(ctx, c, a, so, &r), so, &r);
    v &= r.verdict;
    v &= equiv(bc_a.phi, b_ca.phi);
    run.add("associativity, g h f", v);
  }

  Gen gen(opt.seed);
  for (std::size_t i = 0; i < 25; ++i) {
    Asm b = gen.assembly(2, "x");
    Product sq = product(b, b);
    Morphism d = gen.display(sq.obj, 3, "w");
    Morphism back = l_pred(r_pred(d));
    bool exact = same_assembly(back.src, d.src) && same_assembly(back.tgt, d.tgt) &&
                 back.map == d.map && back.realizer == d.realizer;
    run.expect("l r = id, sample " + num(i), exact, "l(r(w)) differs from w");
    IRPredicate p = gen.ir_predicate(sq.obj, 3, "p");
    run.add("unit, sample " + num(i), iR_leq(ctx, p, r_pred(l_pred(p)), unit_witness(p)));
    WeakSubobjectObject w{b, d};
    run.expect("project embed, sample " + num(i),
               same_weak_subobject(ctx, w, project_L(embed_R(w)), run.search).has_value(),
               "no maps both ways");
  }
  return run.report;
}

const std::map<std::string, std::function<SuiteReport(const LawOptions&)>>& registry() {
  static const std::map<std::string, std::function<SuiteReport(const LawOptions&)>> r{
      {"pca", suite_pca},         {"witnesses", suite_witnesses}, {"heyting", suite_heyting},
      {"frobenius", suite_frobenius}, {"fg", suite_fg},           {"terminal", suite_terminal},
      {"topos", suite_topos}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"pca", "witnesses", "heyting", "frobenius",
                                              "fg",  "terminal",  "topos"};
  return names;
}

std::optional<SuiteReport> run_suite(const std::string& name, const LawOptions& opt) {
  auto it = registry().find(name);
  if (it == registry().end()) return std::nullopt;
  return it->second(opt);
}

std::string render_text(const SuiteReport& r, bool all_cases) {
  std::ostringstream out;
  out << "suite " << r.suite << ": " << to_string(r.verdict.kind) << " (" << r.cases.size()
      << " cases, " << r.count(Verdict::Kind::Holds) << " hold, "
      << r.count(Verdict::Kind::Fails) << " fail, " << r.count(Verdict::Kind::Unknown)
      << " unknown)\n";
  for (const LawCase& c : r.cases)
    if (all_cases || !c.verdict.ok()) {
      out << "  " << to_string(c.verdict.kind) << ": " << c.name;
      if (!c.verdict.detail.empty()) out << ": " << c.verdict.detail;
      out << "\n";
    }
  for (const std::string& n : r.notes) out << "  note: " << n << "\n";
  return out.str();
}

}  // namespace ewt
