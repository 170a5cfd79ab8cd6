#include "ewt/ext_weihrauch.hpp"

#include <algorithm>

#include "ewt/combinators.hpp"
#include "ewt/parallel.hpp"
#include "ewt/syntax.hpp"

namespace ewt {

bool operator==(const EWKey& l, const EWKey& r) { return l.x == r.x && l.a == r.a; }

const TermFamily* EWPredicate::at(std::size_t x, const Term& a) const {
  auto it = support.find(EWKey{x, a});
  return it == support.end() ? nullptr : &it->second;
}

void EWPredicate::add(std::size_t x, const Term& a, TermSet A) {
  support[EWKey{x, a}].insert(std::move(A));
}

namespace {

struct Entry {
  std::size_t x;
  Term a;
  const TermFamily* fam;
};

std::vector<Entry> entries(const EWPredicate& f) {
  std::vector<Entry> out;
  for (const auto& [k, fam] : f.support) out.push_back({k.x, k.a, &fam});
  return out;
}

// Some B in fam with l2 <a, q> in A for every q in B.
Verdict some_block(const Context& ctx, const Term& l2, const Term& a, const TermSet& A,
                   const TermFamily& fam, const std::string& where) {
  bool unknown = false;
  for (const TermSet& B : fam) {
    bool ok = true;
    for (const Term& q : B) {
      Outcome o = apply(ctx, l2, pair_of(a, q));
      if (o.exhausted()) unknown = true;
      if (!o.converged() || !A.count(o.value)) {
        ok = false;
        break;
      }
    }
    if (ok) return Verdict::holds();
  }
  if (unknown) return Verdict::unknown(where + ": fuel exhausted");
  return Verdict::fails(where + ": no block of the target family works");
}

std::string where(const Asm& base, std::size_t x, const Term& a) {
  return "(" + base->ids[x] + ", " + print(a) + ")";
}

}  // namespace

Verdict leq_extW(const Context& ctx, const EWPredicate& f, const EWPredicate& g,
                 const EWWitness& w) {
  if (!same_assembly(f.base, g.base)) return Verdict::fails("different bases");
  if (!in_subpca(w.ell1) || !in_subpca(w.ell2)) return Verdict::fails("witness mentions an oracle");
  std::vector<Entry> es = entries(f);
  const Asm& X = f.base;
  return verify_all(ctx.exec, es.size(), [&](std::size_t i) {
    const Entry& e = es[i];
    std::string at = where(X, e.x, e.a);
    Outcome o = apply(ctx, w.ell1, pair_of(X->names[e.x], e.a));
    if (o.exhausted()) return Verdict::unknown(at + ": l1 ran out of fuel");
    if (o.stuck()) return Verdict::fails(at + ": l1 stuck");
    const TermFamily* target = g.at(e.x, o.value);
    if (!target) return Verdict::fails(at + ": l1 gives " + print(o.value) + " outside the support");
    Verdict v;
    for (const TermSet& A : *e.fam) {
      v &= some_block(ctx, w.ell2, e.a, A, *target, at);
      if (v.failed()) break;
    }
    return v;
  });
}

EWWitness extW_refl() { return {lambda_term("\\xi. p2 xi"), comb_p2()}; }

std::optional<EWWitness> extW_trans(const Asm& base, const EWWitness& w1, const EWWitness& w2) {
  if (base->size() == 0) return w1;
  const Term& c = base->names[0];
  for (const Term& n : base->names)
    if (n != c) return std::nullopt;
  TermEnv env{{"l1", w1.ell1}, {"l2", w1.ell2}, {"m1", w2.ell1}, {"m2", w2.ell2}, {"c", c}};
  return EWWitness{lambda_term("\\xi. m1 <p1 xi, l1 xi>", env),
                   lambda_term("\\xi. l2 <p1 xi, m2 <l1 <c, p1 xi>, p2 xi>>", env)};
}

EWPredicate eW_reindex(const Morphism& h, const EWPredicate& g) {
  EWPredicate out{h.src, {}};
  for (std::size_t y = 0; y < h.map.size(); ++y)
    for (const auto& [k, fam] : g.support)
      if (k.x == h.map[y]) out.support[EWKey{y, pair_of(h.src->names[y], k.a)}] = fam;
  return out;
}

EWPredicate to_eW(const IRPredicate& p) {
  EWPredicate out{p.base(), {}};
  const Morphism& f = p.display;
  for (std::size_t y = 0; y < f.map.size(); ++y) out.add(f.map[y], f.src->names[y], p.alpha[y]);
  return out;
}

std::optional<std::size_t> GCarrier::index(std::size_t x0, const Term& a0, const TermSet& A0) const {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] == x0 && a[i] == a0 && A[i] == A0) return i;
  return std::nullopt;
}

GCarrier to_iR_carrier(const EWPredicate& g) {
  GCarrier c;
  const Asm& X = g.base;
  auto obj = std::make_shared<PartitionedAssembly>();
  Morphism disp{nullptr, X, {}, comb_p1()};
  for (const auto& [k, fam] : g.support)
    for (const TermSet& A : fam) {
      std::string sid = "{";
      for (const Term& t : A) sid += (sid.size() > 1 ? "," : "") + print(t);
      obj->ids.push_back("(" + X->ids[k.x] + "," + print(k.a) + "," + sid + "})");
      obj->names.push_back(pair_of(X->names[k.x], k.a));
      disp.map.push_back(k.x);
      c.pred.alpha.push_back(A);
      c.x.push_back(k.x);
      c.a.push_back(k.a);
      c.A.push_back(A);
    }
  disp.src = obj;
  c.pred.display = std::move(disp);
  return c;
}

EWWitness fg_down() { return {lambda_term("\\xi. p2 (p2 xi)"), comb_p2()}; }
EWWitness fg_up() { return {comb_I(), comb_p2()}; }

IRWitness gf_up(const IRPredicate& p) {
  GCarrier c = to_iR_carrier(to_eW(p));
  const Morphism& f = p.display;
  Morphism h{f.src, c.pred.source(), {}, lambda_term("\\y. <rf y, y>", {{"rf", f.realizer}})};
  for (std::size_t y = 0; y < f.map.size(); ++y)
    h.map.push_back(*c.index(f.map[y], f.src->names[y], p.alpha[y]));
  return {h, comb_p2()};
}

IRWitness gf_down(const IRPredicate& p) {
  GCarrier c = to_iR_carrier(to_eW(p));
  const Morphism& f = p.display;
  Morphism h{c.pred.source(), f.src, {}, comb_p2()};
  for (std::size_t i = 0; i < c.x.size(); ++i) {
    std::size_t pick = npos;
    for (std::size_t y = 0; y < f.map.size() && pick == npos; ++y)
      if (f.map[y] == c.x[i] && f.src->names[y] == c.a[i] && p.alpha[y] == c.A[i]) pick = y;
    h.map.push_back(pick);
  }
  return {h, comb_p2()};
}

std::pair<EWWitness, EWWitness> naturality_witnesses() {
  return {{lambda_term("\\xi. <p2 (p2 xi), p1 xi>"), comb_p2()},
          {lambda_term("\\xi. <p1 xi, p1 (p2 xi)>"), comb_p2()}};
}

std::pair<IRWitness, IRWitness> G_naturality(const Morphism& k, const EWPredicate& e) {
  GCarrier lc = to_iR_carrier(eW_reindex(k, e));
  GCarrier gc = to_iR_carrier(e);
  Pullback pb = pullback(gc.pred.display, k);
  const Asm& l = lc.pred.source();
  Morphism fw{l, pb.obj, {}, lambda_term("\\u. <<rk (p1 u), p2 (p2 u)>, p1 u>", {{"rk", k.realizer}})};
  for (std::size_t i = 0; i < l->size(); ++i) {
    std::size_t xp = lc.x[i];
    Term a = match_pair(lc.a[i])->second;
    fw.map.push_back(*pb.index(*gc.index(k.map[xp], a, lc.A[i]), xp));
  }
  Morphism bw{pb.obj, l, {}, lambda_term("\\u. <p2 u, <p2 u, p2 (p1 u)>>")};
  for (auto [c, xp] : pb.pairs)
    bw.map.push_back(*lc.index(xp, pair_of(k.src->names[xp], gc.a[c]), gc.A[c]));
  return {{fw, comb_p2()}, {bw, comb_p2()}};
}

EWWitness F_monotone(const IRWitness& w) {
  return {lambda_term("\\xi. r (p2 xi)", {{"r", w.mediator.realizer}}), w.ell};
}

std::optional<IRWitness> G_monotone(const Context& ctx, const EWPredicate& f,
                                    const EWPredicate& g, const EWWitness& w) {
  GCarrier cf = to_iR_carrier(f);
  GCarrier cg = to_iR_carrier(g);
  const Asm& X = f.base;
  Morphism h{cf.pred.source(), cg.pred.source(), {},
             lambda_term("\\u. <p1 u, l1 u>", {{"l1", w.ell1}})};
  for (std::size_t i = 0; i < cf.x.size(); ++i) {
    Outcome o = apply(ctx, w.ell1, pair_of(X->names[cf.x[i]], cf.a[i]));
    if (!o.converged()) return std::nullopt;
    const TermFamily* fam = g.at(cf.x[i], o.value);
    if (!fam) return std::nullopt;
    std::optional<std::size_t> pick;
    for (const TermSet& B : *fam) {
      if (some_block(ctx, w.ell2, cf.a[i], cf.A[i], TermFamily{B}, "").ok()) {
        pick = cg.index(cf.x[i], o.value, B);
        break;
      }
    }
    if (!pick) return std::nullopt;
    h.map.push_back(*pick);
  }
  return IRWitness{h, lambda_term("\\xi. l2 <p2 (p1 xi), p2 xi>", {{"l2", w.ell2}})};
}

EWPredicate eW_top(const Asm& x) { return to_eW(iR_top(x)); }
EWPredicate eW_bottom(const Asm& x) { return to_eW(iR_bottom(x)); }
EWPredicate eW_meet(const EWPredicate& f, const EWPredicate& g) {
  return to_eW(iR_meet(to_iR(f), to_iR(g)).pred);
}
EWPredicate eW_exists(const Morphism& f, const EWPredicate& g) {
  return to_eW(iR_exists(f, to_iR(g)));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Term> candidates(const Context& ctx, std::vector<SynthExample> ex,
                             const SynthOptions& opt) {
  if (ex.empty()) return {comb_p2()};
  auto merged = merge_examples(std::move(ex));
  if (!merged) return {};
  return synthesize(ctx, *merged, opt);
}

}  // namespace

std::optional<std::string> extW_obstruction(const EWPredicate& f, const EWPredicate& g) {
  for (const auto& [k, fam] : f.support) {
    bool any = false;
    for (const auto& [k2, fam2] : g.support) any = any || k2.x == k.x;
    if (!any) return "nothing supported over " + f.base->ids[k.x];
  }
  return std::nullopt;
}

std::optional<EWWitness> search_extW(const Context& ctx, const EWPredicate& f,
                                     const EWPredicate& g, const SearchOptions& opt) {
  if (!same_assembly(f.base, g.base)) return std::nullopt;
  const Asm& X = f.base;
  std::vector<Entry> es = entries(f);
  Context sc = ctx;
  sc.fuel = std::min(ctx.fuel, opt.screen_fuel);

  std::vector<SynthExample> ex1;
  for (const Entry& e : es) {
    TermSet t;
    for (const auto& [k, fam] : g.support)
      if (k.x == e.x) t.insert(k.a);
    if (t.empty()) return std::nullopt;
    ex1.push_back({pair_of(X->names[e.x], e.a), t});
  }
  std::vector<Term> l1s = candidates(ctx, ex1, opt.synth);
  for (std::size_t k = 0; k < opt.pool.size() && l1s.empty(); ++k) {
    const Term& t = opt.pool[k];
    if (!in_subpca(t)) continue;
    bool ok = true;
    for (const auto& e : ex1) {
      Outcome o = apply(sc, t, e.input);
      ok = o.converged() && e.targets.count(o.value);
      if (!ok) break;
    }
    if (ok) l1s.push_back(t);
  }

  for (const Term& l1 : l1s) {
    // Slots: one per (entry, A), options the blocks of g at the image.
    struct Slot {
      Term a;
      const TermSet* A;
      std::vector<const TermSet*> blocks;
    };
    std::vector<Slot> slots;
    bool ok = true;
    for (const Entry& e : es) {
      Outcome o = apply(ctx, l1, pair_of(X->names[e.x], e.a));
      const TermFamily* fam = o.converged() ? g.at(e.x, o.value) : nullptr;
      if (!fam) {
        ok = false;
        break;
      }
      for (const TermSet& A : *e.fam) {
        Slot s{e.a, &A, {}};
        for (const TermSet& B : *fam) s.blocks.push_back(&B);
        slots.push_back(std::move(s));
      }
    }
    if (!ok) continue;
    std::vector<std::size_t> pos(slots.size(), 0);
    for (std::size_t tried = 0; tried < opt.max_choices; ++tried) {
      std::vector<SynthExample> ex2;
      for (std::size_t i = 0; i < slots.size(); ++i)
        for (const Term& q : *slots[i].blocks[pos[i]]) ex2.push_back({pair_of(slots[i].a, q), *slots[i].A});
      for (const Term& l2 : candidates(ctx, ex2, opt.synth))
        if (leq_extW(ctx, f, g, {l1, l2}).ok()) return EWWitness{l1, l2};
      std::size_t i = slots.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++pos[i] < slots[i].blocks.size()) {
          done = false;
          break;
        }
        pos[i] = 0;
      }
      if (done) break;
    }
    auto hit = first_holding(ctx.exec, opt.pool.size(), [&](std::size_t k) {
      return in_subpca(opt.pool[k]) && leq_extW(sc, f, g, {l1, opt.pool[k]}).ok();
    });
    if (hit) return EWWitness{l1, opt.pool[*hit]};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Verdict leq_degree(const Context& ctx, const Degree& f, const Degree& g, const Term& l1,
                   const Term& l2) {
  if (!in_subpca(l1) || !in_subpca(l2)) return Verdict::fails("witness mentions an oracle");
  Verdict v;
  for (const auto& [p, fam] : f) {
    Outcome o = apply(ctx, l1, p);
    if (o.exhausted()) {
      v &= Verdict::unknown("l1 ran out of fuel at " + print(p));
      continue;
    }
    if (o.stuck()) return Verdict::fails("l1 stuck at " + print(p));
    auto it = g.find(o.value);
    if (it == g.end() || it->second.empty()) return Verdict::fails("g is empty at l1 " + print(p));
    for (const TermSet& A : fam) {
      bool found = false, unknown = false;
      for (const TermSet& B : it->second) {
        bool all = true;
        for (const Term& q : B) {
          Outcome r = apply(ctx, l2, pair_of(p, q));
          if (r.exhausted()) unknown = true;
          if (!r.converged() || A.count(r.value) == 0) {
            all = false;
            break;
          }
        }
        if (all) {
          found = true;
          break;
        }
      }
      if (!found && !unknown) return Verdict::fails("no block for an answer set at " + print(p));
      if (!found) v &= Verdict::unknown("fuel exhausted at " + print(p));
    }
  }
  return v;
}

Degree as_degree(const EWPredicate& f) {
  Degree d;
  for (const auto& [k, fam] : f.support) d[k.a] = fam;
  return d;
}

EWPredicate from_degree(const Degree& d) {
  EWPredicate out{terminal(), {}};
  for (const auto& [a, fam] : d)
    if (!fam.empty()) out.support[EWKey{0, a}] = fam;
  return out;
}

}  // namespace ewt
