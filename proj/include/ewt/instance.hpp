#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ewt/assembly.hpp"
#include "ewt/term.hpp"
#include "ewt/verdict.hpp"

namespace ewt {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// ---------------------------------------------------------------------------
// Elementary doctrine: predicates are maps from a carrier to finite term sets.

struct BasePredicate {
  Asm base;
  std::vector<TermSet> values;
};

BasePredicate eiR_top(const Asm& x);
/// Pointwise oplus.
BasePredicate eiR_meet(const BasePredicate& a, const BasePredicate& b);
BasePredicate eiR_reindex(const Morphism& h, const BasePredicate& b);
/// alpha <= beta via hbar: hbar <phi(x), q> lands in alpha(x) for q in beta(x).
Verdict leq_eiR(const Context& ctx, const BasePredicate& alpha, const BasePredicate& beta,
                const Term& hbar);

// ---------------------------------------------------------------------------
// Existential completion: a predicate is a display map plus a predicate on
// its source.

struct IRPredicate {
  Morphism display;
  std::vector<TermSet> alpha;

  const Asm& base() const { return display.tgt; }
  const Asm& source() const { return display.src; }
};

struct IRWitness {
  Morphism mediator;
  Term ell;
};

/// p <= q via (h, l): h is a realised map source(p) -> source(q) over the
/// base, and l <psi(y), b> lands in alpha(y) for every b in beta(h(y)).
Verdict iR_leq(const Context& ctx, const IRPredicate& p, const IRPredicate& q,
               const IRWitness& w);

IRWitness iR_refl(const IRPredicate& p);
/// From p <= q via w1 and q <= r via w2:
/// (h2 . h1, \xi. l1 <p1 xi, l2 <r1 (p1 xi), p2 xi>>).
IRWitness iR_trans(const IRWitness& w1, const IRWitness& w2);

IRPredicate iR_top(const Asm& x);
IRPredicate iR_bottom(const Asm& x);
/// bottom <= q: empty mediator, any l.
IRWitness iR_bottom_leq(const IRPredicate& q, const Term& ell);
/// p <= top via the display itself.
IRWitness iR_leq_top(const IRPredicate& p);

/// Pullback along h: carrier {(y, x') | f(y) = h(x')}, names <psi(y), phi'(x')>,
/// display the second projection, predicate alpha of the first component.
IRPredicate iR_reindex(const Morphism& h, const IRPredicate& p);
/// Post-composition of the display.
IRPredicate iR_exists(const Morphism& f, const IRPredicate& p);

struct IRMeet {
  IRPredicate left, right;
  IRPredicate pred;
  Pullback pb;
  IRWitness proj1;  // meet <= p
  IRWitness proj2;  // meet <= q
};
/// Pullback of the displays, pairs (y, z) named <psi(y), eta(z)>, predicate
/// alpha(y) (+) beta(z).
IRMeet iR_meet(const IRPredicate& p, const IRPredicate& q);
/// From r <= p via w1 and r <= q via w2, a witness r <= p /\ q.
IRWitness iR_meet_mediator(const IRMeet& m, const IRWitness& w1, const IRWitness& w2);

/// Two predicates over one base with witnesses both ways.
struct IsoWitnesses {
  IRPredicate lhs, rhs;
  IRWitness forward;   // lhs <= rhs
  IRWitness backward;  // rhs <= lhs
};
/// exists_f(f^* alpha /\ beta) against alpha /\ exists_f(beta), f: A -> B.
/// ((y, a), z) -> (y, z) by \u. <p1 (p1 u), p2 u>; (y, z) -> ((y, b z), z) by
/// \u. <<p1 u, rb (p2 u)>, p2 u>; l = p2 both ways.
IsoWitnesses frobenius(const Morphism& f, const IRPredicate& alpha, const IRPredicate& beta);
/// g^* exists_f(beta) against exists_q(p^* beta) for the pullback (p, q) of
/// f and g. (y, c) -> (y, (d y, c)) by \u. <p1 u, <rd (p1 u), p2 u>>;
/// (y, (a, c)) -> (y, c) by \u. <p1 u, p2 (p2 u)>; l = p2 both ways.
IsoWitnesses beck_chevalley(const Morphism& f, const Morphism& g, const IRPredicate& beta);

struct IRJoin {
  IRPredicate pred;
  Coproduct co;
  IRWitness inj1;  // p <= join via (inl, p2)
  IRWitness inj2;  // q <= join via (inr, p2)
};
IRJoin iR_join(const IRPredicate& p, const IRPredicate& q);
/// From p <= r via (k1, l1) and q <= r via (k2, l2): ([k1, k2], l) with
/// l = \xi. case (p1 (p1 xi)) (l1 <p2 (p1 xi), p2 xi>) (l2 <p2 (p1 xi), p2 xi>).
IRWitness iR_join_mediator(const IRJoin& j, const IRWitness& w1, const IRWitness& w2);

// ---------------------------------------------------------------------------
// Implication, approximated over an explicit universe.

struct ImplicationUniverse {
  std::vector<TermSet> values;  // candidate R sets
  std::vector<Term> pool;       // candidate r and l terms (oracles allowed)
};

struct ImplTuple {
  std::size_t x;
  std::vector<std::size_t> k;  // indexed by source(p); npos outside the fibre
  std::size_t R;               // index into universe values
  Term r, l;
};

struct IRImplication {
  IRPredicate p, q;
  IRPredicate pred;
  std::vector<ImplTuple> tuples;
  ImplicationUniverse universe;  // normalised pool actually used
  bool empty_universe = false;
};

/// Carrier: tuples (x, k, R, r, l) with k: f^-1(x) -> g^-1(x) a set map,
/// r in the pool realising k, R in the universe, l in the pool with
/// l <psi(y), b> in R (+) alpha(y) for all y in f^-1(x), b in beta(k(y)).
/// Names <phi(x), <r, l>>, predicate R, display to x.
IRImplication iR_implication(const Context& ctx, const IRPredicate& p, const IRPredicate& q,
                             const ImplicationUniverse& u);

/// Additions needed for a construction to find its tuple.
struct Missing {
  std::vector<TermSet> values;
  std::vector<Term> terms;
  bool empty() const { return values.empty() && terms.empty(); }
  std::string describe() const;
};

struct CurryResult {
  std::optional<IRWitness> witness;
  Missing missing;  // universe-too-small when witness is empty
};

/// From w: r /\ p <= q (rp = iR_meet(r, p)) builds r <= (p => q) with l = p2.
CurryResult iR_curry(const Context& ctx, const IRMeet& rp, const IRWitness& w,
                     const IRImplication& imp);
/// From w: r <= (p => q) builds r /\ p <= q.
IRWitness iR_uncurry(const IRMeet& rp, const IRImplication& imp, const IRWitness& w);
/// Adds the missing values and terms to the universe (keeping order).
ImplicationUniverse extend(const ImplicationUniverse& u, const Missing& m);

struct CurryRun {
  IRImplication imp;
  CurryResult result;
  std::size_t extensions = 0;
};
/// Curry over rp.right => q, extending the universe with whatever is missing
/// and retrying, at most max_rounds times.
CurryRun curry_with_extension(const Context& ctx, const IRMeet& rp, const IRPredicate& q,
                              const IRWitness& w, const ImplicationUniverse& start = {},
                              std::size_t max_rounds = 4);

// ---------------------------------------------------------------------------
// Universal quantification along f.

struct ForallTuple {
  std::size_t x;
  std::vector<std::size_t> k;  // indexed by source(f); npos outside f^-1(x)
  Term e;
};

struct IRForall {
  IRPredicate pred;
  std::vector<ForallTuple> tuples;
  Morphism f;
  IRPredicate p;
};

/// Carrier E = {(x, k, e)}: k a section of g over f^-1(x), e in the pool
/// realising k. Names <phi(x), e>, predicate the union over y in f^-1(x) of
/// {psi(y)} (x) alpha(k(y)), display to x.
IRForall iR_forall(const Context& ctx, const Morphism& f, const IRPredicate& p,
                   const std::vector<Term>& pool);

/// From w: q <= forall_f(p), a witness iR_reindex(f, q) <= p.
IRWitness forall_mate_down(const IRForall& all, const IRPredicate& q, const IRWitness& w);

struct MateResult {
  std::optional<IRWitness> witness;
  Missing missing;
};
/// From w: iR_reindex(f, q) <= p, a witness q <= forall_f(p). Needs the
/// constructed e terms in the pool.
MateResult forall_mate_up(const Context& ctx, const IRForall& all, const IRPredicate& q,
                          const IRWitness& w);

// ---------------------------------------------------------------------------
// Classification by the generic element.

struct Classification {
  IRPredicate source;
  IRPredicate canonical;  // over {(x, psi(y), alpha(y))}
  IRWitness to_canonical;
  IRWitness from_canonical;
  /// chi(x)(a) = {alpha(y) | f(y) = x, psi(y) = a}.
  TermFamily chi(std::size_t x, const Term& a) const;
};

Classification classify(const IRPredicate& p);

// ---------------------------------------------------------------------------
// Assemblies with several realizers per element, and the partitioning lemma.

struct Assembly {
  std::vector<std::string> ids;
  std::vector<TermSet> realizers;  // nonempty
};

struct AsmWitness {
  Term l1, l2;
};

/// phi on X reduces to psi on Y via (l1, l2): for every s realising x,
/// l1 s realises some y with l2 <s, b> in phi(x) for all b in psi(y).
Verdict asm_instance_leq(const Context& ctx, const Assembly& x, const std::vector<TermSet>& phi,
                         const Assembly& y, const std::vector<TermSet>& psi, const AsmWitness& w);

struct Partition {
  Asm carrier;  // {(x, s) | s realises x}, named s
  std::vector<std::size_t> origin;
  BasePredicate alpha;  // alpha(x, s) = {<q, s> | q in phi(x)}
  AsmWitness forward;   // phi <= alpha: (I, \x. p1 (p2 x))
  AsmWitness backward;  // alpha <= phi: (I, \x. <p2 x, p1 x>)
};
Partition partition_predicate(const Assembly& x, const std::vector<TermSet>& phi);
/// The partitioned assembly seen as an assembly with singleton realizer sets.
Assembly as_assembly(const PartitionedAssembly& x);

}  // namespace ewt
