#include "ewt/assembly.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "ewt/combinators.hpp"
#include "ewt/parallel.hpp"
#include "ewt/syntax.hpp"

namespace ewt {

std::optional<std::size_t> PartitionedAssembly::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return i;
  return std::nullopt;
}

Asm make_assembly(std::vector<std::pair<std::string, Term>> elements) {
  auto a = std::make_shared<PartitionedAssembly>();
  std::unordered_set<std::string> seen;
  for (auto& [id, name] : elements) {
    if (!seen.insert(id).second) throw std::invalid_argument("duplicate element id '" + id + "'");
    a->ids.push_back(std::move(id));
    a->names.push_back(std::move(name));
  }
  return a;
}

bool same_assembly(const Asm& a, const Asm& b) { return a == b || *a == *b; }

Verdict verify_morphism(const Context& ctx, const Asm& src, const Asm& tgt,
                        const std::vector<std::size_t>& map, const Term& candidate) {
  if (!in_subpca(candidate)) return Verdict::fails("realizer mentions an oracle");
  if (map.size() != src->size()) return Verdict::fails("map is not total on the source");
  return verify_all(ctx.exec, src->size(), [&](std::size_t i) {
    if (map[i] >= tgt->size()) return Verdict::fails(src->ids[i] + ": image out of range");
    Outcome o = apply(ctx, candidate, src->names[i]);
    if (o.exhausted()) return Verdict::unknown(src->ids[i] + ": fuel exhausted");
    if (o.stuck()) return Verdict::fails(src->ids[i] + ": stuck");
    if (o.value != tgt->names[map[i]])
      return Verdict::fails(src->ids[i] + ": realizer gives " + print(o.value) + ", expected " +
                            print(tgt->names[map[i]]));
    return Verdict::holds();
  });
}

Verdict verify(const Context& ctx, const Morphism& m) {
  return verify_morphism(ctx, m.src, m.tgt, m.map, m.realizer);
}

std::optional<Term> search_realizer(const Context& ctx, const Asm& src, const Asm& tgt,
                                    const std::vector<std::size_t>& map,
                                    const std::vector<Term>& pool) {
  Context inner = ctx;
  inner.exec = Exec::Serial;
  auto hit = first_holding(ctx.exec, pool.size(), [&](std::size_t i) {
    return verify_morphism(inner, src, tgt, map, pool[i]).ok();
  });
  if (!hit) return std::nullopt;
  return pool[*hit];
}

Morphism identity(const Asm& x) {
  std::vector<std::size_t> m(x->size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
  return {x, x, std::move(m), comb_I()};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  std::vector<std::size_t> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
  Term r = lambda_term("\\x. g (f x)", {{"g", g.realizer}, {"f", f.realizer}});
  return {f.src, g.tgt, std::move(m), r};
}

bool same_map(const Morphism& a, const Morphism& b) {
  return same_assembly(a.src, b.src) && same_assembly(a.tgt, b.tgt) && a.map == b.map;
}

Asm terminal() {
  static const Asm one = make_assembly({{"*", comb_I()}});
  return one;
}

Morphism to_terminal(const Asm& x) {
  return {x, terminal(), std::vector<std::size_t>(x->size(), 0), Term::app(Term::k(), comb_I())};
}

Asm empty_assembly() {
  static const Asm e = make_assembly({});
  return e;
}

Morphism from_empty(const Asm& x) { return {empty_assembly(), x, {}, comb_I()}; }

Product product(const Asm& x, const Asm& y) {
  auto p = std::make_shared<PartitionedAssembly>();
  Morphism p1{nullptr, x, {}, comb_p1()};
  Morphism p2{nullptr, y, {}, comb_p2()};
  for (std::size_t i = 0; i < x->size(); ++i)
    for (std::size_t j = 0; j < y->size(); ++j) {
      p->ids.push_back("(" + x->ids[i] + "," + y->ids[j] + ")");
      p->names.push_back(pair_of(x->names[i], y->names[j]));
      p1.map.push_back(i);
      p2.map.push_back(j);
    }
  Asm obj = p;
  p1.src = p2.src = obj;
  return {obj, std::move(p1), std::move(p2)};
}

Morphism pairing(const Morphism& f, const Morphism& g, const Product& p) {
  std::vector<std::size_t> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = p.index(f.map[i], g.map[i]);
  Term r = lambda_term("\\u. <f u, g u>", {{"f", f.realizer}, {"g", g.realizer}});
  return {f.src, p.obj, std::move(m), r};
}

std::optional<std::size_t> Pullback::index(std::size_t i, std::size_t j) const {
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (pairs[k] == std::make_pair(i, j)) return k;
  return std::nullopt;
}

Pullback pullback(const Morphism& f, const Morphism& g) {
  auto p = std::make_shared<PartitionedAssembly>();
  Pullback pb;
  pb.p1 = {nullptr, f.src, {}, comb_p1()};
  pb.p2 = {nullptr, g.src, {}, comb_p2()};
  for (std::size_t i = 0; i < f.src->size(); ++i)
    for (std::size_t j = 0; j < g.src->size(); ++j) {
      if (f.map[i] != g.map[j]) continue;
      p->ids.push_back("(" + f.src->ids[i] + "," + g.src->ids[j] + ")");
      p->names.push_back(pair_of(f.src->names[i], g.src->names[j]));
      pb.pairs.emplace_back(i, j);
      pb.p1.map.push_back(i);
      pb.p2.map.push_back(j);
    }
  pb.obj = p;
  pb.p1.src = pb.p2.src = pb.obj;
  return pb;
}

Coproduct coproduct(const Asm& y, const Asm& z) {
  auto c = std::make_shared<PartitionedAssembly>();
  Coproduct out;
  out.inl = {y, nullptr, {}, lambda_term("\\x. <true, x>")};
  out.inr = {z, nullptr, {}, lambda_term("\\x. <false, x>")};
  for (std::size_t i = 0; i < y->size(); ++i) {
    c->ids.push_back("inl:" + y->ids[i]);
    c->names.push_back(pair_of(comb_true(), y->names[i]));
    out.inl.map.push_back(i);
  }
  for (std::size_t i = 0; i < z->size(); ++i) {
    c->ids.push_back("inr:" + z->ids[i]);
    c->names.push_back(pair_of(comb_false(), z->names[i]));
    out.inr.map.push_back(y->size() + i);
  }
  out.obj = c;
  out.inl.tgt = out.inr.tgt = out.obj;
  return out;
}

Morphism copair(const Morphism& f, const Morphism& g, const Coproduct& c) {
  std::vector<std::size_t> m;
  m.reserve(f.map.size() + g.map.size());
  for (std::size_t v : f.map) m.push_back(v);
  for (std::size_t v : g.map) m.push_back(v);
  Term r = lambda_term("\\x. case (p1 x) (f (p2 x)) (g (p2 x))",
                       {{"f", f.realizer}, {"g", g.realizer}});
  return {c.obj, f.tgt, std::move(m), r};
}

namespace {

std::vector<Term> enumerate_size(std::size_t n, const std::deque<std::vector<Term>>& smaller) {
  std::vector<Term> out;
  if (n == 1) return {Term::k(), Term::s()};
  for (std::size_t l = 1; l < n; ++l)
    for (const Term& a : smaller[l])
      for (const Term& b : smaller[n - l]) out.push_back(Term::app(a, b));
  return out;
}

}  // namespace

const std::vector<Term>& sk_terms_of_size(std::size_t n) {
  static std::mutex mu;
  static std::deque<std::vector<Term>> cache(1);
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) cache.push_back(enumerate_size(cache.size(), cache));
  return cache[n];
}

std::vector<Term> standard_pool(std::size_t max_size, const std::vector<Term>& extra) {
  std::vector<Term> pool;
  std::unordered_set<Term, TermHash> seen;
  auto add = [&](const Term& t) {
    if (seen.insert(t).second) pool.push_back(t);
  };
  for (const Term& t : {comb_I(), Term::k(), comb_false(), comb_pair(), comb_p1(), comb_p2(),
                        comb_case()})
    add(t);
  for (const Term& t : extra) add(t);
  for (std::size_t n = 1; n <= max_size; ++n)
    for (const Term& t : sk_terms_of_size(n)) add(t);
  return pool;
}

}  // namespace ewt
