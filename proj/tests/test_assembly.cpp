#include <doctest.h>

#include "ewt/assembly.hpp"
#include "ewt/combinators.hpp"
#include "ewt/instance.hpp"
#include "ewt/random.hpp"
#include "ewt/syntax.hpp"

using namespace ewt;

namespace {

const Term S = Term::s();
const Term K = Term::k();

Context ctx() { return Context::with_fuel(10000); }

Asm three() { return make_assembly({{"a", K}, {"b", S}, {"c", pair_of(K, S)}}); }

// Number of set maps w -> pb.obj commuting with the projections onto a and b.
std::size_t mediating_maps(const Pullback& pb, const std::vector<std::size_t>& a,
                           const std::vector<std::size_t>& b) {
  std::size_t n = pb.obj->size(), w = a.size(), total = 0;
  std::vector<std::size_t> m(w, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < w && ok; ++i)
      ok = pb.p1.map[m[i]] == a[i] && pb.p2.map[m[i]] == b[i];
    if (ok) ++total;
    std::size_t i = w;
    while (i > 0 && ++m[i - 1] == n) m[--i] = 0;
    if (i == 0) break;
  }
  return total;
}

}  // namespace

TEST_CASE("assembly: construction") {
  CHECK_THROWS_AS(make_assembly({{"a", K}, {"a", S}}), std::invalid_argument);
  Asm x = three();
  CHECK(x->index_of("b") == 1);
  CHECK_FALSE(x->index_of("z").has_value());
}

TEST_CASE("verify_morphism: examples") {
  Asm x = three();
  CHECK(verify_morphism(ctx(), x, x, {0, 1, 2}, comb_I()).ok());

  Asm pt = make_assembly({{"k", K}});
  CHECK(verify_morphism(ctx(), x, pt, {0, 0, 0}, lambda_term("\\x. K")).ok());

  Asm ks = make_assembly({{"k", K}});
  Asm ss = make_assembly({{"s", S}});
  Verdict v = verify_morphism(ctx(), ks, ss, {0}, comb_I());
  CHECK(v.failed());
  CHECK(v.detail.find("k") != std::string::npos);

  CHECK(verify_morphism(ctx(), x, x, {0, 1, 2}, Term::oracle("f")).failed());

  Term sii = S * comb_I() * comb_I();
  Verdict u = verify_morphism(Context::with_fuel(50), x, x, {0, 1, 2}, K * (sii * sii));
  CHECK(u.is_unknown());
}

TEST_CASE("verify_morphism: monotone in fuel") {
  Gen g(7);
  Asm x = three();
  for (int i = 0; i < 100; ++i) {
    Term t = g.sk_term(7);
    Verdict prev = verify_morphism(Context::with_fuel(1), x, x, {0, 1, 2}, t);
    for (std::uint64_t f : {4u, 16u, 64u, 1000u}) {
      Verdict v = verify_morphism(Context::with_fuel(f), x, x, {0, 1, 2}, t);
      if (!prev.is_unknown()) CHECK(v.kind == prev.kind);
      prev = v;
    }
  }
}

TEST_CASE("search_realizer: examples") {
  Asm x = three();
  std::vector<Term> pool;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const Term& t : sk_terms_of_size(n)) pool.push_back(t);
  auto r = search_realizer(ctx(), x, x, {0, 1, 2}, pool);
  REQUIRE(r.has_value());
  CHECK(*r == S * K * K);

  Asm ks = make_assembly({{"k", K}});
  Asm ss = make_assembly({{"s", S}});
  CHECK_FALSE(search_realizer(ctx(), ks, ss, {0}, {comb_I()}).has_value());

  Asm prs = make_assembly({{"u", pair_of(K, S)}, {"v", pair_of(S, K)}});
  Asm tg = make_assembly({{"s", S}, {"k", K}});
  auto r2 = search_realizer(ctx(), prs, tg, {0, 1}, standard_pool(3));
  REQUIRE(r2.has_value());
  CHECK(verify_morphism(ctx(), prs, tg, {0, 1}, *r2).ok());
}

TEST_CASE("standard pool: order and contents") {
  auto pool = standard_pool(7);
  REQUIRE(pool.size() > 7);
  CHECK(pool[0] == comb_I());
  CHECK(pool[1] == K);
  CHECK(pool[2] == comb_false());
  CHECK(pool[4] == comb_p1());
  std::size_t sk = 0;
  for (std::size_t n = 1; n <= 7; ++n) sk += sk_terms_of_size(n).size();
  // Catalan counts times 2^n for n atoms.
  CHECK(sk_terms_of_size(1).size() == 2);
  CHECK(sk_terms_of_size(2).size() == 4);
  CHECK(sk_terms_of_size(3).size() == 16);
  CHECK(pool.size() <= sk + 7);
  CHECK(pool == standard_pool(7));
}

TEST_CASE("pullback: examples") {
  Asm x = three();
  Pullback d = pullback(identity(x), identity(x));
  CHECK(d.obj->size() == x->size());

  Asm y = make_assembly({{"y0", S}, {"y1", K}});
  Asm z = make_assembly({{"z0", K}, {"z1", S}, {"z2", comb_I()}});
  Morphism cy{y, x, {0, 0}, lambda_term("\\u. K")};
  Morphism cz{z, x, {0, 0, 0}, lambda_term("\\u. K")};
  Pullback full = pullback(cy, cz);
  CHECK(full.obj->size() == 6);
  CHECK(full.obj->names[0] == pair_of(S, K));
  CHECK(verify(ctx(), full.p1).ok());
  CHECK(verify(ctx(), full.p2).ok());

  Morphism cz2{z, x, {1, 1, 1}, lambda_term("\\u. S")};
  CHECK(pullback(cy, cz2).obj->size() == 0);
}

TEST_CASE("pullback: universal property by brute force") {
  Gen g(11);
  auto pool = standard_pool(7);
  for (int round = 0; round < 20; ++round) {
    Asm x = g.assembly(3, "x");
    Morphism f = g.display(x, 3, "y");
    Morphism h = g.display(x, 3, "z");
    Pullback pb = pullback(f, h);
    CHECK(verify(ctx(), pb.p1).ok());
    CHECK(verify(ctx(), pb.p2).ok());
    if (pb.obj->size() == 0) continue;
    // A cone: elements named by pairs of commuting points, legs p1 and p2.
    std::vector<std::pair<std::string, Term>> els;
    std::vector<std::size_t> a, b;
    std::size_t w = 1 + g.below(3);
    for (std::size_t i = 0; i < w; ++i) {
      auto [yi, zi] = pb.pairs[g.below(pb.pairs.size())];
      a.push_back(yi);
      b.push_back(zi);
      els.emplace_back("w" + std::to_string(i), pair_of(f.src->names[yi], h.src->names[zi]));
    }
    Asm wa = make_assembly(els);
    REQUIRE(verify_morphism(ctx(), wa, f.src, a, comb_p1()).ok());
    REQUIRE(verify_morphism(ctx(), wa, h.src, b, comb_p2()).ok());
    CHECK(mediating_maps(pb, a, b) == 1);
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < w; ++i) m.push_back(*pb.index(a[i], b[i]));
    auto r = search_realizer(ctx(), wa, pb.obj, m, pool);
    REQUIRE(r.has_value());
    CHECK(verify_morphism(ctx(), wa, pb.obj, m, *r).ok());
  }
}

TEST_CASE("coproduct: examples") {
  Asm z = make_assembly({{"z0", K}, {"z1", S}});
  Coproduct c = coproduct(empty_assembly(), z);
  REQUIRE(c.obj->size() == 2);
  CHECK(c.obj->names[0] == pair_of(comb_false(), K));
  CHECK(c.obj->names[1] == pair_of(comb_false(), S));

  Asm y1 = make_assembly({{"y", S}});
  Asm z1 = make_assembly({{"z", K}});
  Coproduct d = coproduct(y1, z1);
  REQUIRE(d.obj->size() == 2);
  CHECK(d.obj->names[0] == pair_of(comb_true(), S));
  CHECK(d.obj->names[1] == pair_of(comb_false(), K));
  CHECK(verify_morphism(ctx(), y1, d.obj, {0}, lambda_term("\\x. <true, x>")).ok());
  CHECK(verify_morphism(ctx(), z1, d.obj, {1}, lambda_term("\\x. <false, x>")).ok());
  CHECK(verify(ctx(), d.inl).ok());
  CHECK(verify(ctx(), d.inr).ok());

  Morphism f{y1, z, {1}, comb_I()};
  Morphism h{z1, z, {0}, comb_I()};
  Morphism cp = copair(f, h, d);
  CHECK(verify(ctx(), cp).ok());
  CHECK(cp.map == std::vector<std::size_t>{1, 0});
}

TEST_CASE("product and terminal") {
  Asm x = three();
  Asm y = make_assembly({{"u", S}, {"v", comb_I()}});
  Product p = product(x, y);
  CHECK(p.obj->size() == 6);
  CHECK(verify(ctx(), p.p1).ok());
  CHECK(verify(ctx(), p.p2).ok());
  CHECK(p.obj->names[p.index(2, 1)] == pair_of(pair_of(K, S), comb_I()));

  Product q = product(terminal(), x);
  CHECK(q.obj->size() == x->size());
  CHECK(verify(ctx(), q.p2).ok());

  CHECK(terminal()->size() == 1);
  CHECK(terminal()->names[0] == comb_I());
  CHECK(verify_morphism(ctx(), x, terminal(), {0, 0, 0}, lambda_term("\\x. I")).ok());
  CHECK(verify(ctx(), to_terminal(x)).ok());

  Morphism pr = pairing(identity(x), to_terminal(x), product(x, terminal()));
  CHECK(verify(ctx(), pr).ok());
}

TEST_CASE("compose and identity") {
  Asm x = three();
  Asm pt = make_assembly({{"k", K}});
  Morphism f{x, pt, {0, 0, 0}, lambda_term("\\x. K")};
  Morphism c = compose(f, identity(x));
  CHECK(c.map == f.map);
  CHECK(verify(ctx(), c).ok());
  CHECK(verify(ctx(), from_empty(x)).ok());
}

TEST_CASE("partition_predicate: examples and witnesses") {
  Assembly one{{"x"}, {TermSet{K}}};
  Partition p = partition_predicate(one, {TermSet{S}});
  REQUIRE(p.carrier->size() == 1);
  CHECK(p.carrier->names[0] == K);
  CHECK(p.alpha.values[0] == TermSet{pair_of(S, K)});

  Assembly two{{"x"}, {TermSet{K, S}}};
  Partition q = partition_predicate(two, {TermSet{S}});
  CHECK(q.carrier->size() == 2);

  Asm part = make_assembly({{"a", K}, {"b", S}, {"c", K}});
  Assembly asm_part = as_assembly(*part);
  Partition r = partition_predicate(asm_part, {TermSet{K}, {}, TermSet{S, K}});
  CHECK(r.carrier->size() == 3);
}

TEST_CASE("partition_predicate: both reductions verify") {
  Gen g(3);
  for (int round = 0; round < 30; ++round) {
    Assembly x;
    std::vector<TermSet> phi;
    std::size_t n = 1 + g.below(3);
    for (std::size_t i = 0; i < n; ++i) {
      x.ids.push_back("x" + std::to_string(i));
      TermSet r = g.term_set(2);
      if (r.empty()) r.insert(g.atom());
      x.realizers.push_back(r);
      phi.push_back(g.term_set(2));
    }
    Partition p = partition_predicate(x, phi);
    Assembly xp = as_assembly(*p.carrier);
    CHECK(asm_instance_leq(ctx(), x, phi, xp, p.alpha.values, p.forward).ok());
    CHECK(asm_instance_leq(ctx(), xp, p.alpha.values, x, phi, p.backward).ok());
  }
}

TEST_CASE("partition_predicate: the identity pair does not reduce alpha to phi") {
  Assembly x{{"x"}, {TermSet{K}}};
  std::vector<TermSet> phi{TermSet{S}};
  Partition p = partition_predicate(x, phi);
  Assembly xp = as_assembly(*p.carrier);
  // l2 = I returns <s, q> itself, which is not in phi(x) = {S}.
  CHECK(asm_instance_leq(ctx(), xp, p.alpha.values, x, phi, {comb_I(), comb_I()}).failed());
}
