#include "ewt/search.hpp"

#include <algorithm>

#include "ewt/combinators.hpp"
#include "ewt/parallel.hpp"

namespace ewt {

namespace {

Context screening(const Context& ctx, const SearchOptions& opt) {
  Context c = ctx;
  c.fuel = std::min(ctx.fuel, opt.screen_fuel);
  return c;
}

std::vector<Term> dedup_append(std::vector<Term> a, const std::vector<Term>& b) {
  for (const Term& t : b)
    if (std::find(a.begin(), a.end(), t) == a.end()) a.push_back(t);
  return a;
}

// Candidates from synthesis; an empty example list admits any term.
std::vector<Term> synth_candidates(const Context& ctx, std::vector<SynthExample> ex,
                                   const SynthOptions& opt) {
  if (ex.empty()) return {comb_p2()};
  auto merged = merge_examples(std::move(ex));
  if (!merged) return {};
  return synthesize(ctx, *merged, opt);
}

std::optional<Term> find_ell(const Context& ctx, const IRPredicate& p, const IRPredicate& q,
                             const Morphism& h, const SearchOptions& opt) {
  std::vector<SynthExample> ex;
  const Asm& Y = p.source();
  for (std::size_t y = 0; y < Y->size(); ++y)
    for (const Term& b : q.alpha[h.map[y]]) ex.push_back({pair_of(Y->names[y], b), p.alpha[y]});
  for (const Term& l : synth_candidates(ctx, ex, opt.synth))
    if (iR_leq(ctx, p, q, {h, l}).ok()) return l;
  Context sc = screening(ctx, opt);
  auto i = first_holding(ctx.exec, opt.pool.size(), [&](std::size_t k) {
    return in_subpca(opt.pool[k]) && iR_leq(sc, p, q, {h, opt.pool[k]}).ok();
  });
  if (i) return opt.pool[*i];
  return std::nullopt;
}

}  // namespace

std::optional<Term> search_eiR(const Context& ctx, const BasePredicate& alpha,
                               const BasePredicate& beta, const SearchOptions& opt) {
  std::vector<SynthExample> ex;
  const Asm& X = alpha.base;
  for (std::size_t x = 0; x < X->size(); ++x)
    for (const Term& q : beta.values[x]) ex.push_back({pair_of(X->names[x], q), alpha.values[x]});
  for (const Term& t : synth_candidates(ctx, ex, opt.synth))
    if (leq_eiR(ctx, alpha, beta, t).ok()) return t;
  Context sc = screening(ctx, opt);
  auto i = first_holding(ctx.exec, opt.pool.size(), [&](std::size_t k) {
    return in_subpca(opt.pool[k]) && leq_eiR(sc, alpha, beta, opt.pool[k]).ok();
  });
  if (i) return opt.pool[*i];
  return std::nullopt;
}

std::optional<IRWitness> search_iR(const Context& ctx, const IRPredicate& p, const IRPredicate& q,
                                   const SearchOptions& opt) {
  if (!same_assembly(p.base(), q.base())) return std::nullopt;
  const Asm& Y = p.source();
  const Asm& Z = q.source();
  const Morphism& f = p.display;
  const Morphism& g = q.display;

  // Admissible targets per y: same point of the base.
  std::vector<std::vector<std::size_t>> over(Y->size());
  std::vector<SynthExample> ex;
  for (std::size_t y = 0; y < Y->size(); ++y) {
    TermSet names;
    for (std::size_t z = 0; z < Z->size(); ++z)
      if (g.map[z] == f.map[y]) {
        over[y].push_back(z);
        names.insert(Z->names[z]);
      }
    if (over[y].empty()) return std::nullopt;
    ex.push_back({Y->names[y], names});
  }

  SynthOptions so = opt.synth;
  so.helpers = dedup_append(so.helpers, {f.realizer});
  std::vector<Term> realizers;
  if (Y->size() == 0) realizers.push_back(comb_I());
  else realizers = synth_candidates(ctx, ex, so);
  // Pool candidates that realise some admissible map, when synthesis has none.
  std::size_t extra = 0;
  Context sc = screening(ctx, opt);
  for (std::size_t k = 0; k < opt.pool.size() && extra < 1 && realizers.empty(); ++k) {
    const Term& t = opt.pool[k];
    if (!in_subpca(t) || std::find(realizers.begin(), realizers.end(), t) != realizers.end()) continue;
    bool ok = true;
    for (std::size_t y = 0; y < Y->size() && ok; ++y) {
      Outcome o = apply(sc, t, Y->names[y]);
      ok = o.converged() && ex[y].targets.count(o.value);
    }
    if (ok) {
      realizers.push_back(t);
      ++extra;
    }
  }

  for (const Term& r : realizers) {
    // Possible images of each y under r.
    std::vector<std::vector<std::size_t>> choices(Y->size());
    bool ok = true;
    for (std::size_t y = 0; y < Y->size() && ok; ++y) {
      Outcome o = apply(ctx, r, Y->names[y]);
      if (!o.converged()) {
        ok = false;
        break;
      }
      for (std::size_t z : over[y])
        if (Z->names[z] == o.value) choices[y].push_back(z);
      ok = !choices[y].empty();
    }
    if (!ok) continue;
    std::size_t tried = 0;
    std::vector<std::size_t> pos(Y->size(), 0);
    for (;;) {
      Morphism h{Y, Z, {}, r};
      for (std::size_t y = 0; y < Y->size(); ++y) h.map.push_back(choices[y][pos[y]]);
      if (auto l = find_ell(ctx, p, q, h, opt)) return IRWitness{h, *l};
      if (++tried >= opt.max_choices) break;
      std::size_t i = Y->size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++pos[i] < choices[i].size()) {
          done = false;
          break;
        }
        pos[i] = 0;
      }
      if (done) break;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<IRWitness, IRWitness>> search_iR_equiv(const Context& ctx,
                                                               const IRPredicate& p,
                                                               const IRPredicate& q,
                                                               const SearchOptions& opt) {
  auto a = search_iR(ctx, p, q, opt);
  if (!a) return std::nullopt;
  auto b = search_iR(ctx, q, p, opt);
  if (!b) return std::nullopt;
  return std::make_pair(*a, *b);
}

}  // namespace ewt
