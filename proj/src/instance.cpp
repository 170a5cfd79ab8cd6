#include "ewt/instance.hpp"

#include <algorithm>
#include <unordered_set>

#include "ewt/combinators.hpp"
#include "ewt/parallel.hpp"
#include "ewt/syntax.hpp"

namespace ewt {

namespace {

// l applied to input must converge into target.
Verdict lands_in(const Context& ctx, const Term& l, const Term& input, const TermSet& target,
                 const std::string& where) {
  Outcome o = apply(ctx, l, input);
  if (o.exhausted()) return Verdict::unknown(where + ": fuel exhausted");
  if (o.stuck()) return Verdict::fails(where + ": stuck");
  if (!target.count(o.value)) return Verdict::fails(where + ": " + print(o.value) + " not in the target set");
  return Verdict::holds();
}

std::vector<Term> normalised_pool(const Context& ctx, const std::vector<Term>& pool) {
  std::vector<Term> out;
  std::unordered_set<Term, TermHash> seen;
  for (const Term& t : pool) {
    Outcome o = reduce(ctx, t);
    if (o.converged() && seen.insert(o.value).second) out.push_back(o.value);
  }
  return out;
}

std::vector<std::size_t> fibre(const Morphism& f, std::size_t x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.map.size(); ++i)
    if (f.map[i] == x) out.push_back(i);
  return out;
}

// Calls fn(choice) for every assignment slots[i] -> options[i][*], in
// lexicographic order.
template <class Fn>
void for_each_choice(const std::vector<std::vector<std::size_t>>& options, Fn&& fn) {
  for (const auto& o : options)
    if (o.empty()) return;
  std::vector<std::size_t> pos(options.size(), 0);
  std::vector<std::size_t> pick(options.size());
  for (;;) {
    for (std::size_t i = 0; i < options.size(); ++i) pick[i] = options[i][pos[i]];
    fn(pick);
    std::size_t i = options.size();
    while (i > 0) {
      --i;
      if (++pos[i] < options[i].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
    if (options.empty()) return;
  }
}

std::string map_id(const Asm& src, const Asm& tgt, const std::vector<std::size_t>& k) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == npos) continue;
    if (!first) s += ",";
    first = false;
    s += src->ids[i] + "->" + tgt->ids[k[i]];
  }
  return s + "}";
}

}  // namespace

// ---------------------------------------------------------------------------

BasePredicate eiR_top(const Asm& x) { return {x, std::vector<TermSet>(x->size())}; }

BasePredicate eiR_meet(const BasePredicate& a, const BasePredicate& b) {
  BasePredicate out{a.base, {}};
  for (std::size_t i = 0; i < a.values.size(); ++i)
    out.values.push_back(set_oplus(a.values[i], b.values[i]));
  return out;
}

BasePredicate eiR_reindex(const Morphism& h, const BasePredicate& b) {
  BasePredicate out{h.src, {}};
  for (std::size_t y : h.map) out.values.push_back(b.values[y]);
  return out;
}

Verdict leq_eiR(const Context& ctx, const BasePredicate& alpha, const BasePredicate& beta,
                const Term& hbar) {
  if (!same_assembly(alpha.base, beta.base)) return Verdict::fails("different bases");
  if (!in_subpca(hbar)) return Verdict::fails("witness mentions an oracle");
  const Asm& x = alpha.base;
  return verify_all(ctx.exec, x->size(), [&](std::size_t i) {
    Verdict v;
    for (const Term& q : beta.values[i]) {
      v &= lands_in(ctx, hbar, pair_of(x->names[i], q), alpha.values[i], x->ids[i]);
      if (v.failed()) break;
    }
    return v;
  });
}

// ---------------------------------------------------------------------------

Verdict iR_leq(const Context& ctx, const IRPredicate& p, const IRPredicate& q,
               const IRWitness& w) {
  if (!same_assembly(p.base(), q.base())) return Verdict::fails("different bases");
  const Morphism& h = w.mediator;
  if (!same_assembly(h.src, p.source()) || !same_assembly(h.tgt, q.source()))
    return Verdict::fails("mediator has the wrong source or target");
  if (!in_subpca(w.ell)) return Verdict::fails("l mentions an oracle");
  for (std::size_t y = 0; y < h.map.size(); ++y)
    if (q.display.map[h.map[y]] != p.display.map[y])
      return Verdict::fails("triangle does not commute at " + p.source()->ids[y]);
  Verdict v = verify(ctx, h);
  if (v.failed()) return Verdict::fails("mediator: " + v.detail);
  const Asm& ys = p.source();
  v &= verify_all(ctx.exec, ys->size(), [&](std::size_t y) {
    Verdict r;
    for (const Term& b : q.alpha[h.map[y]]) {
      r &= lands_in(ctx, w.ell, pair_of(ys->names[y], b), p.alpha[y], ys->ids[y]);
      if (r.failed()) break;
    }
    return r;
  });
  return v;
}

IRWitness iR_refl(const IRPredicate& p) { return {identity(p.source()), comb_p2()}; }

IRWitness iR_trans(const IRWitness& w1, const IRWitness& w2) {
  Term ell = lambda_term("\\xi. l1 <p1 xi, l2 <r1 (p1 xi), p2 xi>>",
                         {{"l1", w1.ell}, {"l2", w2.ell}, {"r1", w1.mediator.realizer}});
  return {compose(w2.mediator, w1.mediator), ell};
}

IRPredicate iR_top(const Asm& x) { return {identity(x), std::vector<TermSet>(x->size())}; }

IRPredicate iR_bottom(const Asm& x) { return {from_empty(x), {}}; }

IRWitness iR_bottom_leq(const IRPredicate& q, const Term& ell) { return {from_empty(q.source()), ell}; }

IRWitness iR_leq_top(const IRPredicate& p) { return {p.display, comb_p2()}; }

IRPredicate iR_reindex(const Morphism& h, const IRPredicate& p) {
  Pullback pb = pullback(p.display, h);
  IRPredicate out{pb.p2, {}};
  for (std::size_t y : pb.p1.map) out.alpha.push_back(p.alpha[y]);
  return out;
}

IRPredicate iR_exists(const Morphism& f, const IRPredicate& p) {
  return {compose(f, p.display), p.alpha};
}

IRMeet iR_meet(const IRPredicate& p, const IRPredicate& q) {
  IRMeet m;
  m.left = p;
  m.right = q;
  m.pb = pullback(p.display, q.display);
  m.pred.display = compose(p.display, m.pb.p1);
  for (auto [y, z] : m.pb.pairs) m.pred.alpha.push_back(set_oplus(p.alpha[y], q.alpha[z]));
  m.proj1 = {m.pb.p1, lambda_term("\\xi. <true, p2 xi>")};
  m.proj2 = {m.pb.p2, lambda_term("\\xi. <false, p2 xi>")};
  return m;
}

IRWitness iR_meet_mediator(const IRMeet& m, const IRWitness& w1, const IRWitness& w2) {
  const Morphism& h1 = w1.mediator;
  const Morphism& h2 = w2.mediator;
  Morphism med{h1.src, m.pb.obj, {}, lambda_term("\\x. <r1 x, r2 x>", {{"r1", h1.realizer}, {"r2", h2.realizer}})};
  for (std::size_t e = 0; e < h1.map.size(); ++e) {
    auto idx = m.pb.index(h1.map[e], h2.map[e]);
    med.map.push_back(idx ? *idx : npos);
  }
  Term ell = lambda_term(
      "\\xi. case (p1 (p2 xi)) (l1 <p1 xi, p2 (p2 xi)>) (l2 <p1 xi, p2 (p2 xi)>)",
      {{"l1", w1.ell}, {"l2", w2.ell}});
  return {med, ell};
}

IsoWitnesses frobenius(const Morphism& f, const IRPredicate& alpha, const IRPredicate& beta) {
  IsoWitnesses out;
  Pullback r = pullback(alpha.display, f);
  IRMeet inner = iR_meet(iR_reindex(f, alpha), beta);
  out.lhs = iR_exists(f, inner.pred);
  IRMeet outer = iR_meet(alpha, iR_exists(f, beta));
  out.rhs = outer.pred;
  const Term& rb = beta.display.realizer;
  Morphism fw{out.lhs.source(), out.rhs.source(), {}, lambda_term("\\u. <p1 (p1 u), p2 u>")};
  for (auto [ri, z] : inner.pb.pairs) fw.map.push_back(*outer.pb.index(r.pairs[ri].first, z));
  Morphism bw{out.rhs.source(), out.lhs.source(), {},
              lambda_term("\\u. <<p1 u, rb (p2 u)>, p2 u>", {{"rb", rb}})};
  for (auto [y, z] : outer.pb.pairs)
    bw.map.push_back(*inner.pb.index(*r.index(y, beta.display.map[z]), z));
  out.forward = {fw, comb_p2()};
  out.backward = {bw, comb_p2()};
  return out;
}

IsoWitnesses beck_chevalley(const Morphism& f, const Morphism& g, const IRPredicate& beta) {
  IsoWitnesses out;
  Pullback sq = pullback(f, g);
  out.lhs = iR_reindex(g, iR_exists(f, beta));
  out.rhs = iR_exists(sq.p2, iR_reindex(sq.p1, beta));
  Pullback left = pullback(compose(f, beta.display), g);
  Pullback right = pullback(beta.display, sq.p1);
  const Term& rd = beta.display.realizer;
  Morphism fw{out.lhs.source(), out.rhs.source(), {},
              lambda_term("\\u. <p1 u, <rd (p1 u), p2 u>>", {{"rd", rd}})};
  for (auto [y, c] : left.pairs)
    fw.map.push_back(*right.index(y, *sq.index(beta.display.map[y], c)));
  Morphism bw{out.rhs.source(), out.lhs.source(), {}, lambda_term("\\u. <p1 u, p2 (p2 u)>")};
  for (auto [y, k] : right.pairs) bw.map.push_back(*left.index(y, sq.pairs[k].second));
  out.forward = {fw, comb_p2()};
  out.backward = {bw, comb_p2()};
  return out;
}

IRJoin iR_join(const IRPredicate& p, const IRPredicate& q) {
  IRJoin j;
  j.co = coproduct(p.source(), q.source());
  j.pred.display = copair(p.display, q.display, j.co);
  j.pred.alpha = p.alpha;
  j.pred.alpha.insert(j.pred.alpha.end(), q.alpha.begin(), q.alpha.end());
  j.inj1 = {j.co.inl, comb_p2()};
  j.inj2 = {j.co.inr, comb_p2()};
  return j;
}

IRWitness iR_join_mediator(const IRJoin& j, const IRWitness& w1, const IRWitness& w2) {
  Morphism med = copair(w1.mediator, w2.mediator, j.co);
  Term ell = lambda_term(
      "\\xi. case (p1 (p1 xi)) (l1 <p2 (p1 xi), p2 xi>) (l2 <p2 (p1 xi), p2 xi>)",
      {{"l1", w1.ell}, {"l2", w2.ell}});
  return {med, ell};
}

// ---------------------------------------------------------------------------

std::string Missing::describe() const {
  std::string s;
  for (const TermSet& v : values) {
    s += s.empty() ? "" : ", ";
    s += "value {";
    bool first = true;
    for (const Term& t : v) {
      s += first ? "" : ", ";
      first = false;
      s += print(t);
    }
    s += "}";
  }
  for (const Term& t : terms) {
    s += s.empty() ? "" : ", ";
    s += "term " + print(t);
  }
  return s;
}

ImplicationUniverse extend(const ImplicationUniverse& u, const Missing& m) {
  ImplicationUniverse out = u;
  for (const TermSet& v : m.values)
    if (std::find(out.values.begin(), out.values.end(), v) == out.values.end()) out.values.push_back(v);
  for (const Term& t : m.terms)
    if (std::find(out.pool.begin(), out.pool.end(), t) == out.pool.end()) out.pool.push_back(t);
  return out;
}

IRImplication iR_implication(const Context& ctx, const IRPredicate& p, const IRPredicate& q,
                             const ImplicationUniverse& u) {
  IRImplication imp;
  imp.p = p;
  imp.q = q;
  imp.universe.values = u.values;
  imp.universe.pool = normalised_pool(ctx, u.pool);
  imp.empty_universe = u.values.empty() || imp.universe.pool.empty();
  const auto& pool = imp.universe.pool;
  const Asm& X = p.base();
  const Asm& Y = p.source();
  const Asm& Z = q.source();

  auto obj = std::make_shared<PartitionedAssembly>();
  Morphism disp{nullptr, X, {}, comb_p1()};

  for (std::size_t x = 0; x < X->size(); ++x) {
    std::vector<std::size_t> fy = fibre(p.display, x);
    std::vector<std::size_t> gz = fibre(q.display, x);
    std::vector<std::vector<std::size_t>> options(fy.size(), gz);
    for_each_choice(options, [&](const std::vector<std::size_t>& pick) {
      std::vector<std::size_t> k(Y->size(), npos);
      for (std::size_t i = 0; i < fy.size(); ++i) k[fy[i]] = pick[i];

      std::vector<char> r_ok(pool.size(), 0);
      // outputs of l on every required input, or empty if some input fails
      std::vector<std::vector<std::pair<std::size_t, Term>>> l_out(pool.size());
      std::vector<char> l_total(pool.size(), 0);
      std::vector<std::pair<std::size_t, Term>> inputs;
      for (std::size_t y : fy)
        for (const Term& b : q.alpha[k[y]]) inputs.emplace_back(y, pair_of(Y->names[y], b));
#pragma omp parallel for schedule(dynamic, 4)
      for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(pool.size()); ++ii) {
        std::size_t i = static_cast<std::size_t>(ii);
        bool ok = true;
        for (std::size_t y : fy) {
          Outcome o = apply(ctx, pool[i], Y->names[y]);
          if (!o.converged() || o.value != Z->names[k[y]]) {
            ok = false;
            break;
          }
        }
        r_ok[i] = ok;
        bool total = true;
        for (const auto& [y, in] : inputs) {
          Outcome o = apply(ctx, pool[i], in);
          if (!o.converged()) {
            total = false;
            break;
          }
          l_out[i].emplace_back(y, o.value);
        }
        l_total[i] = total;
      }
      for (std::size_t R = 0; R < u.values.size(); ++R)
        for (std::size_t ri = 0; ri < pool.size(); ++ri) {
          if (!r_ok[ri]) continue;
          for (std::size_t li = 0; li < pool.size(); ++li) {
            if (!l_total[li]) continue;
            bool good = true;
            for (const auto& [y, v] : l_out[li]) {
              auto m = match_pair(v);
              bool in = m && ((m->first == comb_true() && u.values[R].count(m->second)) ||
                              (m->first == comb_false() && p.alpha[y].count(m->second)));
              if (!in) {
                good = false;
                break;
              }
            }
            if (!good) continue;
            imp.tuples.push_back({x, k, R, pool[ri], pool[li]});
            obj->ids.push_back("(" + X->ids[x] + "," + map_id(Y, Z, k) + ",R" + std::to_string(R) +
                               ",r" + std::to_string(ri) + ",l" + std::to_string(li) + ")");
            obj->names.push_back(pair_of(X->names[x], pair_of(pool[ri], pool[li])));
            disp.map.push_back(x);
            imp.pred.alpha.push_back(u.values[R]);
          }
        }
    });
  }
  disp.src = obj;
  imp.pred.display = std::move(disp);
  return imp;
}

CurryResult iR_curry(const Context& ctx, const IRMeet& rp, const IRWitness& w,
                     const IRImplication& imp) {
  CurryResult res;
  const IRPredicate& r = rp.left;
  const Asm& E = r.source();
  const Asm& Y = rp.right.source();
  const Morphism& m = w.mediator;
  Term C = lambda_term("\\u. <rh u, <\\xi. rm <u, xi>, \\xi. l <<u, p1 xi>, p2 xi>>>",
                       {{"rh", r.display.realizer}, {"rm", m.realizer}, {"l", w.ell}});
  Morphism med{E, imp.pred.source(), {}, C};
  for (std::size_t e = 0; e < E->size(); ++e) {
    std::vector<std::size_t> k(Y->size(), npos);
    for (std::size_t i = 0; i < rp.pb.pairs.size(); ++i)
      if (rp.pb.pairs[i].first == e) k[rp.pb.pairs[i].second] = m.map[i];
    Outcome o = apply(ctx, C, E->names[e]);
    std::optional<std::pair<Term, Term>> outer, inner;
    if (o.converged()) outer = match_pair(o.value);
    if (outer) inner = match_pair(outer->second);
    if (!inner) return res;  // the input witness does not converge; nothing to add
    const Term& re = inner->first;
    const Term& le = inner->second;
    const TermSet& R = r.alpha[e];
    std::size_t found = npos;
    for (std::size_t t = 0; t < imp.tuples.size() && found == npos; ++t) {
      const ImplTuple& tp = imp.tuples[t];
      if (tp.x == r.display.map[e] && tp.k == k && imp.universe.values[tp.R] == R && tp.r == re &&
          tp.l == le)
        found = t;
    }
    if (found == npos) {
      const auto& vals = imp.universe.values;
      const auto& pool = imp.universe.pool;
      auto note_value = [&](const TermSet& v) {
        if (std::find(vals.begin(), vals.end(), v) == vals.end() &&
            std::find(res.missing.values.begin(), res.missing.values.end(), v) == res.missing.values.end())
          res.missing.values.push_back(v);
      };
      auto note_term = [&](const Term& t) {
        if (std::find(pool.begin(), pool.end(), t) == pool.end() &&
            std::find(res.missing.terms.begin(), res.missing.terms.end(), t) == res.missing.terms.end())
          res.missing.terms.push_back(t);
      };
      note_value(R);
      note_term(re);
      note_term(le);
      med.map.push_back(npos);
      continue;
    }
    med.map.push_back(found);
  }
  if (!res.missing.empty()) return res;
  if (std::find(med.map.begin(), med.map.end(), npos) != med.map.end()) return res;
  res.witness = IRWitness{med, comb_p2()};
  return res;
}

CurryRun curry_with_extension(const Context& ctx, const IRMeet& rp, const IRPredicate& q,
                              const IRWitness& w, const ImplicationUniverse& start,
                              std::size_t max_rounds) {
  CurryRun run;
  ImplicationUniverse u = start;
  for (;;) {
    run.imp = iR_implication(ctx, rp.right, q, u);
    run.result = iR_curry(ctx, rp, w, run.imp);
    if (run.result.witness || run.result.missing.empty() || run.extensions == max_rounds)
      return run;
    u = extend(u, run.result.missing);
    ++run.extensions;
  }
}

IRWitness iR_uncurry(const IRMeet& rp, const IRImplication& imp, const IRWitness& w) {
  const Morphism& n = w.mediator;
  Morphism med{rp.pred.source(), imp.q.source(), {},
               lambda_term("\\xi. (p1 (p2 (rb (p1 xi)))) (p2 xi)", {{"rb", n.realizer}})};
  for (auto [e, y] : rp.pb.pairs) med.map.push_back(imp.tuples[n.map[e]].k[y]);
  Term ell = lambda_term(
      "\\xi. (\\w. case (p1 w) <true, l <p1 (p1 xi), p2 w>> <false, p2 w>) "
      "(p2 (p2 (rb (p1 (p1 xi)))) <p2 (p1 xi), p2 xi>)",
      {{"rb", n.realizer}, {"l", w.ell}});
  return {med, ell};
}

// ---------------------------------------------------------------------------

IRForall iR_forall(const Context& ctx, const Morphism& f, const IRPredicate& p,
                   const std::vector<Term>& pool_in) {
  IRForall all;
  all.f = f;
  all.p = p;
  const std::vector<Term> pool = normalised_pool(ctx, pool_in);
  const Asm& X = f.tgt;
  const Asm& Y = f.src;
  const Asm& Yp = p.source();
  auto obj = std::make_shared<PartitionedAssembly>();
  Morphism disp{nullptr, X, {}, comb_p1()};

  for (std::size_t x = 0; x < X->size(); ++x) {
    std::vector<std::size_t> fy = fibre(f, x);
    std::vector<std::vector<std::size_t>> options;
    for (std::size_t y : fy) options.push_back(fibre(p.display, y));
    for_each_choice(options, [&](const std::vector<std::size_t>& pick) {
      std::vector<std::size_t> k(Y->size(), npos);
      for (std::size_t i = 0; i < fy.size(); ++i) k[fy[i]] = pick[i];
      std::vector<char> ok(pool.size(), 0);
#pragma omp parallel for schedule(dynamic, 8)
      for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(pool.size()); ++ii) {
        std::size_t i = static_cast<std::size_t>(ii);
        bool good = true;
        for (std::size_t y : fy) {
          Outcome o = apply(ctx, pool[i], Y->names[y]);
          if (!o.converged() || o.value != Yp->names[k[y]]) {
            good = false;
            break;
          }
        }
        ok[i] = good;
      }
      TermSet value;
      for (std::size_t y : fy) {
        TermSet part = set_otimes(TermSet{Y->names[y]}, p.alpha[k[y]]);
        value.insert(part.begin(), part.end());
      }
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (!ok[i]) continue;
        all.tuples.push_back({x, k, pool[i]});
        obj->ids.push_back("(" + X->ids[x] + "," + map_id(Y, Yp, k) + ",e" + std::to_string(i) + ")");
        obj->names.push_back(pair_of(X->names[x], pool[i]));
        disp.map.push_back(x);
        all.pred.alpha.push_back(value);
      }
    });
  }
  disp.src = obj;
  all.pred.display = std::move(disp);
  return all;
}

IRWitness forall_mate_down(const IRForall& all, const IRPredicate& q, const IRWitness& w) {
  const Morphism& m = w.mediator;
  Pullback pb = pullback(q.display, all.f);
  Morphism med{pb.obj, all.p.source(), {},
               lambda_term("\\x. (p2 (r (p1 x))) (p2 x)", {{"r", m.realizer}})};
  for (auto [xp, y] : pb.pairs) med.map.push_back(all.tuples[m.map[xp]].k[y]);
  Term ell = lambda_term("\\x. l <p1 (p1 x), <p2 (p1 x), p2 x>>", {{"l", w.ell}});
  return {med, ell};
}

MateResult forall_mate_up(const Context& ctx, const IRForall& all, const IRPredicate& q,
                          const IRWitness& w) {
  MateResult res;
  const Morphism& n = w.mediator;
  const Asm& Xp = q.source();
  Pullback pb = pullback(q.display, all.f);
  Term N = lambda_term("\\u. <rq u, \\w. r <u, w>>", {{"rq", q.display.realizer}, {"r", n.realizer}});
  Morphism med{Xp, all.pred.source(), {}, N};
  for (std::size_t xp = 0; xp < Xp->size(); ++xp) {
    std::size_t x = q.display.map[xp];
    std::vector<std::size_t> k(all.f.src->size(), npos);
    for (std::size_t i = 0; i < pb.pairs.size(); ++i)
      if (pb.pairs[i].first == xp) k[pb.pairs[i].second] = n.map[i];
    Outcome o = apply(ctx, N, Xp->names[xp]);
    std::optional<std::pair<Term, Term>> m;
    if (o.converged()) m = match_pair(o.value);
    if (!m) return res;
    const Term& e = m->second;
    std::size_t found = npos;
    for (std::size_t t = 0; t < all.tuples.size() && found == npos; ++t)
      if (all.tuples[t].x == x && all.tuples[t].k == k && all.tuples[t].e == e) found = t;
    if (found == npos &&
        std::find(res.missing.terms.begin(), res.missing.terms.end(), e) == res.missing.terms.end())
      res.missing.terms.push_back(e);
    med.map.push_back(found);
  }
  if (!res.missing.empty()) return res;
  Term ell = lambda_term("\\u. l <<p1 u, p1 (p2 u)>, p2 (p2 u)>", {{"l", w.ell}});
  res.witness = IRWitness{med, ell};
  return res;
}

// ---------------------------------------------------------------------------

namespace {

std::string set_id(const TermSet& s) {
  std::string out = "{";
  bool first = true;
  for (const Term& t : s) {
    out += first ? "" : ",";
    first = false;
    out += print(t);
  }
  return out + "}";
}

}  // namespace

Classification classify(const IRPredicate& p) {
  Classification c;
  c.source = p;
  const Morphism& f = p.display;
  const Asm& X = f.tgt;
  const Asm& Y = f.src;
  auto obj = std::make_shared<PartitionedAssembly>();
  Morphism disp{nullptr, X, {}, comb_p1()};
  std::vector<std::size_t> first_y;
  std::vector<std::size_t> to(Y->size());
  for (std::size_t y = 0; y < Y->size(); ++y) {
    std::size_t found = npos;
    for (std::size_t t = 0; t < first_y.size() && found == npos; ++t) {
      std::size_t y0 = first_y[t];
      if (f.map[y0] == f.map[y] && Y->names[y0] == Y->names[y] && p.alpha[y0] == p.alpha[y]) found = t;
    }
    if (found == npos) {
      found = first_y.size();
      first_y.push_back(y);
      obj->ids.push_back("(" + X->ids[f.map[y]] + "," + print(Y->names[y]) + "," + set_id(p.alpha[y]) + ")");
      obj->names.push_back(pair_of(X->names[f.map[y]], Y->names[y]));
      disp.map.push_back(f.map[y]);
      c.canonical.alpha.push_back(p.alpha[y]);
    }
    to[y] = found;
  }
  disp.src = obj;
  c.canonical.display = disp;
  c.to_canonical = {Morphism{Y, obj, to, lambda_term("\\x. <rf x, x>", {{"rf", f.realizer}})},
                    comb_p2()};
  c.from_canonical = {Morphism{obj, Y, first_y, comb_p2()}, comb_p2()};
  return c;
}

TermFamily Classification::chi(std::size_t x, const Term& a) const {
  TermFamily out;
  const Morphism& f = source.display;
  for (std::size_t y = 0; y < f.map.size(); ++y)
    if (f.map[y] == x && f.src->names[y] == a) out.insert(source.alpha[y]);
  return out;
}

// ---------------------------------------------------------------------------

Verdict asm_instance_leq(const Context& ctx, const Assembly& x, const std::vector<TermSet>& phi,
                         const Assembly& y, const std::vector<TermSet>& psi, const AsmWitness& w) {
  if (!in_subpca(w.l1) || !in_subpca(w.l2)) return Verdict::fails("witness mentions an oracle");
  return verify_all(ctx.exec, x.ids.size(), [&](std::size_t i) {
    Verdict v;
    for (const Term& s : x.realizers[i]) {
      Outcome o = apply(ctx, w.l1, s);
      if (o.exhausted()) {
        v &= Verdict::unknown(x.ids[i] + ": fuel exhausted");
        continue;
      }
      if (o.stuck()) return Verdict::fails(x.ids[i] + ": l1 stuck on " + print(s));
      Verdict best = Verdict::fails(x.ids[i] + ": no element realised by " + print(o.value) + " works");
      for (std::size_t j = 0; j < y.ids.size() && !best.ok(); ++j) {
        if (!y.realizers[j].count(o.value)) continue;
        Verdict r;
        for (const Term& b : psi[j]) {
          r &= lands_in(ctx, w.l2, pair_of(s, b), phi[i], x.ids[i] + "/" + y.ids[j]);
          if (r.failed()) break;
        }
        if (r.ok() || (r.is_unknown() && best.failed())) best = r;
      }
      v &= best;
      if (v.failed()) return v;
    }
    return v;
  });
}

Partition partition_predicate(const Assembly& x, const std::vector<TermSet>& phi) {
  Partition out;
  auto obj = std::make_shared<PartitionedAssembly>();
  out.alpha.values.clear();
  for (std::size_t i = 0; i < x.ids.size(); ++i)
    for (const Term& s : x.realizers[i]) {
      obj->ids.push_back("(" + x.ids[i] + "," + print(s) + ")");
      obj->names.push_back(s);
      out.origin.push_back(i);
      out.alpha.values.push_back(set_otimes(phi[i], TermSet{s}));
    }
  out.carrier = obj;
  out.alpha.base = obj;
  out.forward = {comb_I(), lambda_term("\\x. p1 (p2 x)")};
  out.backward = {comb_I(), lambda_term("\\x. <p2 x, p1 x>")};
  return out;
}

Assembly as_assembly(const PartitionedAssembly& x) {
  Assembly a;
  a.ids = x.ids;
  for (const Term& n : x.names) a.realizers.push_back(TermSet{n});
  return a;
}

}  // namespace ewt
