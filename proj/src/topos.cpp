#include "ewt/topos.hpp"

#include <algorithm>

#include "ewt/combinators.hpp"
#include "ewt/syntax.hpp"

namespace ewt {

namespace {

const char* const kComponent[3] = {"p1 (p1 u)", "p2 (p1 u)", "p2 u"};

// Map between binary products choosing components by index.
Morphism pair_map(const Product& src, std::size_t i, std::size_t j, const Product& tgt) {
  Morphism m{src.obj, tgt.obj, {}, {}};
  const char* c[2] = {"p1 u", "p2 u"};
  m.realizer = lambda_term(std::string("\\u. <") + c[i] + ", " + c[j] + ">");
  std::size_t nb = src.p2.tgt->size();
  for (std::size_t k = 0; k < src.obj->size(); ++k) {
    std::size_t comp[2] = {k / nb, k % nb};
    m.map.push_back(tgt.index(comp[i], comp[j]));
  }
  return m;
}

Verdict check_or_search(const Context& ctx, const EWPredicate& lhs, const EWPredicate& rhs,
                        std::optional<EWWitness>& cert, const SearchOptions& opt,
                        const std::string& what) {
  if (!cert) {
    cert = search_extW(ctx, lhs, rhs, opt);
    if (!cert) {
      if (auto why = extW_obstruction(lhs, rhs)) return Verdict::fails(what + ": " + *why);
      return Verdict::unknown(what + ": no certificate found within the search bounds");
    }
  }
  Verdict v = leq_extW(ctx, lhs, rhs, *cert);
  if (!v.ok()) v.detail = what + ": " + v.detail;
  return v;
}

}  // namespace

Morphism Cube::select(std::size_t i, std::size_t j, const Product& target) const {
  Morphism m{abc.obj, target.obj, {}, {}};
  m.realizer = lambda_term(std::string("\\u. <") + kComponent[i] + ", " + kComponent[j] + ">");
  std::size_t nb = ab.p2.tgt->size();
  std::size_t nc = abc.p2.tgt->size();
  for (std::size_t k = 0; k < abc.obj->size(); ++k) {
    std::size_t ab_i = k / nc;
    std::size_t comp[3] = {ab_i / nb, ab_i % nb, k % nc};
    m.map.push_back(target.index(comp[i], comp[j]));
  }
  return m;
}

Cube cube(const Asm& a, const Asm& b, const Asm& c) {
  Cube k;
  k.ab = product(a, b);
  k.abc = product(k.ab.obj, c);
  return k;
}

ToposObject make_object(const Asm& base, EWPredicate rho) {
  ToposObject o{base, product(base, base), std::move(rho)};
  o.rho.base = o.square.obj;
  return o;
}

PerConditions per_conditions(const ToposObject& o) {
  PerConditions c;
  const Product& sq = o.square;
  Morphism swap = pair_map(sq, 1, 0, sq);
  c.sym_lhs = o.rho;
  c.sym_rhs = eW_reindex(swap, o.rho);
  Cube k = cube(o.base, o.base, o.base);
  c.trans_lhs = eW_meet(eW_reindex(k.select(0, 1, sq), o.rho), eW_reindex(k.select(1, 2, sq), o.rho));
  c.trans_rhs = eW_reindex(k.select(0, 2, sq), o.rho);
  return c;
}

ObjectReport validate_object(const Context& ctx, const ToposObject& o,
                             const std::optional<ObjectCertificates>& certs,
                             const SearchOptions& opt) {
  PerConditions c = per_conditions(o);
  std::optional<EWWitness> sym, trans;
  if (certs) {
    sym = certs->symmetry;
    trans = certs->transitivity;
  }
  ObjectReport r;
  r.verdict = check_or_search(ctx, c.sym_lhs, c.sym_rhs, sym, opt, "not symmetric");
  if (!r.verdict.failed())
    r.verdict &= check_or_search(ctx, c.trans_lhs, c.trans_rhs, trans, opt, "not transitive");
  if (sym && trans) r.certificates = ObjectCertificates{*sym, *trans};
  return r;
}

Verdict validate_object_iR(const Context& ctx, const ToposObject& o, const SearchOptions& opt) {
  const Product& sq = o.square;
  IRPredicate g = to_iR(o.rho);
  Verdict v;
  if (!search_iR(ctx, g, iR_reindex(pair_map(sq, 1, 0, sq), g), opt))
    v &= Verdict::unknown("symmetry: no witness found");
  Cube k = cube(o.base, o.base, o.base);
  IRPredicate lhs =
      iR_meet(iR_reindex(k.select(0, 1, sq), g), iR_reindex(k.select(1, 2, sq), g)).pred;
  if (!search_iR(ctx, lhs, iR_reindex(k.select(0, 2, sq), g), opt))
    v &= Verdict::unknown("transitivity: no witness found");
  return v;
}

ToposArrow make_arrow(const ToposObject& s, const ToposObject& t, EWPredicate phi) {
  ToposArrow a{s, t, product(s.base, t.base), std::move(phi), {}};
  a.phi.base = a.rel.obj;
  return a;
}

ToposArrow identity_arrow(const ToposObject& o) { return make_arrow(o, o, o.rho); }

std::array<std::pair<EWPredicate, EWPredicate>, 5> arrow_conditions(const ToposArrow& a) {
  const Asm& X = a.source.base;
  const Asm& Y = a.target.base;
  const EWPredicate& rho = a.source.rho;
  const EWPredicate& sigma = a.target.rho;
  const Product& xx = a.source.square;
  const Product& yy = a.target.square;
  const Product& xy = a.rel;
  std::array<std::pair<EWPredicate, EWPredicate>, 5> out;

  out[0] = {a.phi, eW_meet(eW_reindex(pair_map(xy, 0, 0, xx), rho),
                           eW_reindex(pair_map(xy, 1, 1, yy), sigma))};
  Cube xxy = cube(X, X, Y);
  out[1] = {eW_meet(eW_reindex(xxy.select(0, 1, xx), rho), eW_reindex(xxy.select(1, 2, xy), a.phi)),
            eW_reindex(xxy.select(0, 2, xy), a.phi)};
  Cube xyy = cube(X, Y, Y);
  out[2] = {eW_meet(eW_reindex(xyy.select(0, 1, xy), a.phi), eW_reindex(xyy.select(1, 2, yy), sigma)),
            eW_reindex(xyy.select(0, 2, xy), a.phi)};
  out[3] = {eW_meet(eW_reindex(xyy.select(0, 1, xy), a.phi), eW_reindex(xyy.select(0, 2, xy), a.phi)),
            eW_reindex(xyy.select(1, 2, yy), sigma)};
  Morphism diag{X, xx.obj, {}, lambda_term("\\u. <u, u>")};
  for (std::size_t x = 0; x < X->size(); ++x) diag.map.push_back(xx.index(x, x));
  out[4] = {eW_reindex(diag, rho), eW_exists(xy.p1, a.phi)};
  return out;
}

ArrowReport validate_arrow(const Context& ctx, ToposArrow& a, const SearchOptions& opt) {
  auto conds = arrow_conditions(a);
  static const char* const names[5] = {"strict", "left relational", "right relational",
                                       "single valued", "total"};
  // Keys of composites nest pairs five deep.
  SearchOptions o = opt;
  o.synth.depth = std::max(o.synth.depth, 5);
  ArrowReport r;
  for (int i = 0; i < 5; ++i) {
    Verdict v = check_or_search(ctx, conds[i].first, conds[i].second, a.certificates[i], o,
                                std::string("condition ") + std::to_string(i + 1) + " (" + names[i] + ")");
    if (!v.ok() && r.failed_condition == 0) r.failed_condition = i + 1;
    r.verdict &= v;
  }
  return r;
}

ToposArrow compose(const Context& ctx, const ToposArrow& a, const ToposArrow& b,
                   const SearchOptions& opt, ArrowReport* report) {
  const Asm& X = a.source.base;
  const Asm& Y = a.target.base;
  const Asm& Z = b.target.base;
  Cube k = cube(X, Y, Z);
  IRPredicate ga = to_iR(a.phi);
  IRPredicate gb = to_iR(b.phi);
  IRPredicate m = iR_meet(iR_reindex(k.select(0, 1, product(X, Y)), ga),
                          iR_reindex(k.select(1, 2, product(Y, Z)), gb))
                      .pred;
  IRPredicate e = iR_exists(k.select(0, 2, product(X, Z)), m);
  ToposArrow c = make_arrow(a.source, b.target, to_eW(e));
  ArrowReport r = validate_arrow(ctx, c, opt);
  if (report) *report = r;
  return c;
}

// ---------------------------------------------------------------------------

IRPredicate r_pred(const Morphism& display) {
  return {display, std::vector<TermSet>(display.src->size())};
}

IRWitness unit_witness(const IRPredicate& p) { return {identity(p.source()), comb_p2()}; }

ToposObject embed_R(const WeakSubobjectObject& w) {
  return make_object(w.base, to_eW(r_pred(w.rho_display)));
}

WeakSubobjectObject project_L(const ToposObject& o) {
  return {o.base, l_pred(to_iR(o.rho))};
}

std::optional<std::pair<Morphism, Morphism>> same_weak_subobject(const Context& ctx,
                                                                 const WeakSubobjectObject& a,
                                                                 const WeakSubobjectObject& b,
                                                                 const SearchOptions& opt) {
  if (!same_assembly(a.base, b.base)) return std::nullopt;
  auto w = search_iR_equiv(ctx, r_pred(a.rho_display), r_pred(b.rho_display), opt);
  if (!w) return std::nullopt;
  return std::make_pair(w->first.mediator, w->second.mediator);
}

WeakSubobjectObject diagonal(const Asm& x) {
  Product sq = product(x, x);
  Morphism d{x, sq.obj, {}, lambda_term("\\u. <u, u>")};
  for (std::size_t i = 0; i < x->size(); ++i) d.map.push_back(sq.index(i, i));
  return {x, d};
}

ToposArrow graph_arrow(const ToposObject& s, const ToposObject& t, const Morphism& f) {
  Product rel = product(s.base, t.base);
  Morphism g{s.base, rel.obj, {}, lambda_term("\\u. <u, r u>", {{"r", f.realizer}})};
  for (std::size_t x = 0; x < f.map.size(); ++x) g.map.push_back(rel.index(x, f.map[x]));
  return make_arrow(s, t, to_eW(r_pred(g)));
}

}  // namespace ewt
