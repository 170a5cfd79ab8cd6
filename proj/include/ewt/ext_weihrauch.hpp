#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ewt/instance.hpp"
#include "ewt/search.hpp"

namespace ewt {

struct EWKey {
  std::size_t x;
  Term a;
};

struct EWKeyLess {
  bool operator()(const EWKey& l, const EWKey& r) const {
    if (l.x != r.x) return l.x < r.x;
    return TermLess{}(l.a, r.a);
  }
};

/// Finite-support map (x, a) -> nonempty family of finite term sets. Pairs
/// outside the support denote the empty family.
struct EWPredicate {
  Asm base;
  std::map<EWKey, TermFamily, EWKeyLess> support;

  /// nullptr outside the support.
  const TermFamily* at(std::size_t x, const Term& a) const;
  /// Adds A to the family at (x, a).
  void add(std::size_t x, const Term& a, TermSet A);
  friend bool operator==(const EWPredicate& l, const EWPredicate& r) {
    return same_assembly(l.base, r.base) && l.support == r.support;
  }
};

bool operator==(const EWKey& l, const EWKey& r);

struct EWWitness {
  Term ell1, ell2;
};

/// f <= g via (l1, l2): for each supported (x, a), l1 <phi(x), a> = a' with
/// g(x, a') nonempty, and every A in f(x, a) has some B in g(x, a') with
/// l2 <a, q> in A for all q in B.
Verdict leq_extW(const Context& ctx, const EWPredicate& f, const EWPredicate& g,
                 const EWWitness& w);
EWWitness extW_refl();
/// Composite witness, available when every element of the base has the same
/// name c: (\xi. m1 <p1 xi, l1 xi>, \xi. l2 <p1 xi, m2 <l1 <c, p1 xi>, p2 xi>>).
std::optional<EWWitness> extW_trans(const Asm& base, const EWWitness& w1, const EWWitness& w2);

/// (y, <psi(y), a>) -> g(h(y), a).
EWPredicate eW_reindex(const Morphism& h, const EWPredicate& g);

/// F: (x, a) -> {alpha(y) | f(y) = x, psi(y) = a}.
EWPredicate to_eW(const IRPredicate& p);

struct GCarrier {
  IRPredicate pred;
  std::vector<std::size_t> x;
  std::vector<Term> a;
  std::vector<TermSet> A;
  std::optional<std::size_t> index(std::size_t x, const Term& a, const TermSet& A) const;
};
/// G: carrier {(x, a, A) | A in g(x, a)} named <phi(x), a>, display the first
/// projection, predicate the third.
GCarrier to_iR_carrier(const EWPredicate& g);
inline IRPredicate to_iR(const EWPredicate& g) { return to_iR_carrier(g).pred; }

/// F(G(g)) <= g via (\xi. p2 (p2 xi), p2).
EWWitness fg_down();
/// g <= F(G(g)) via (I, p2).
EWWitness fg_up();
/// p <= G(F(p)) via y -> (f(y), psi(y), alpha(y)), realised by \y. <rf y, y>, l = p2.
IRWitness gf_up(const IRPredicate& p);
/// G(F(p)) <= p via the least y with the given data, realised by p2, l = p2.
IRWitness gf_down(const IRPredicate& p);

/// eW_reindex(k, F(p)) <= F(iR_reindex(k, p)) and back. The keys differ by
/// the order of the pair: (\xi. <p2 (p2 xi), p1 xi>, p2) and
/// (\xi. <p1 xi, p1 (p2 xi)>, p2).
std::pair<EWWitness, EWWitness> naturality_witnesses();

/// G(eW_reindex(k, e)) <= iR_reindex(k, G(e)) and back, l = p2 both ways.
/// (x', <phi'(x'), a>, A) -> ((k x', a, A), x') by
/// \u. <<rk (p1 u), p2 (p2 u)>, p1 u>; the inverse by \u. <p2 u, <p2 u, p2 (p1 u)>>.
std::pair<IRWitness, IRWitness> G_naturality(const Morphism& k, const EWPredicate& e);

/// From w: p <= q in iR, F(p) <= F(q) via (\xi. r (p2 xi), l).
EWWitness F_monotone(const IRWitness& w);
/// From w: f <= g in eW, G(f) <= G(g) via (x, a, A) -> (x, l1 <phi x, a>, B)
/// realised by \u. <p1 u, l1 u>, with l = \xi. l2 <p2 (p1 xi), p2 xi>.
/// nullopt if w does not verify at some point.
std::optional<IRWitness> G_monotone(const Context& ctx, const EWPredicate& f,
                                    const EWPredicate& g, const EWWitness& w);

/// Fibre structure transported from iR.
EWPredicate eW_top(const Asm& x);
EWPredicate eW_bottom(const Asm& x);
EWPredicate eW_meet(const EWPredicate& f, const EWPredicate& g);
EWPredicate eW_exists(const Morphism& f, const EWPredicate& g);

/// A reason no witness can exist: some point supported in f has no
/// supported key in g.
std::optional<std::string> extW_obstruction(const EWPredicate& f, const EWPredicate& g);

/// Witness for f <= g: l1 synthesised from the supported targets, then l2
/// for a choice of B per (x, a, A), smallest B first; pool fallback.
std::optional<EWWitness> search_extW(const Context& ctx, const EWPredicate& f,
                                     const EWPredicate& g, const SearchOptions& opt);

// ---------------------------------------------------------------------------
// Degrees over the algebra alone: f <= g via (l1, l2) iff for every p with
// f(p) nonempty, g(l1 p) is nonempty and every A in f(p) has a B in g(l1 p)
// with l2 <p, q> in A for all q in B.

using Degree = std::map<Term, TermFamily, TermLess>;

Verdict leq_degree(const Context& ctx, const Degree& f, const Degree& g, const Term& l1,
                   const Term& l2);
/// Degree read off the terminal fibre: D(a) = f(*, a).
Degree as_degree(const EWPredicate& f);
/// Predicate over the terminal assembly with f(*, a) = D(a).
EWPredicate from_degree(const Degree& d);

}  // namespace ewt
