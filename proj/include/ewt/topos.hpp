#pragma once

#include <array>
#include <optional>
#include <string>

#include "ewt/ext_weihrauch.hpp"
#include "ewt/search.hpp"

namespace ewt {

/// Three-fold product ((a, b), c) with the maps onto pairs of factors.
struct Cube {
  Product ab;
  Product abc;
  /// <pi_i, pi_j> : A x B x C -> F_i x F_j, factors numbered 0, 1, 2.
  Morphism select(std::size_t i, std::size_t j, const Product& target) const;
};
Cube cube(const Asm& a, const Asm& b, const Asm& c);

struct ToposObject {
  Asm base;
  Product square;     // base x base
  EWPredicate rho;    // over square.obj
};
ToposObject make_object(const Asm& base, EWPredicate rho);

struct ObjectCertificates {
  EWWitness symmetry;      // rho <= swap^* rho
  EWWitness transitivity;  // rho12 /\ rho23 <= rho13
};

struct ObjectReport {
  Verdict verdict;
  std::optional<ObjectCertificates> certificates;
};

/// Symmetry and transitivity inequalities of a PER.
struct PerConditions {
  EWPredicate sym_lhs, sym_rhs, trans_lhs, trans_rhs;
};
PerConditions per_conditions(const ToposObject& o);

/// Checks the supplied certificates, or searches for them.
ObjectReport validate_object(const Context& ctx, const ToposObject& o,
                             const std::optional<ObjectCertificates>& certs,
                             const SearchOptions& opt);
/// The same conditions checked on the G-transported data in iR.
Verdict validate_object_iR(const Context& ctx, const ToposObject& o, const SearchOptions& opt);

struct ToposArrow {
  ToposObject source, target;
  Product rel;      // source.base x target.base
  EWPredicate phi;  // over rel.obj
  std::array<std::optional<EWWitness>, 5> certificates;
};

/// The five arrow conditions as (lhs, rhs) pairs: strict, left relational,
/// right relational, single valued, total.
std::array<std::pair<EWPredicate, EWPredicate>, 5> arrow_conditions(const ToposArrow& a);

struct ArrowReport {
  Verdict verdict;
  int failed_condition = 0;  // 1..5, 0 if none failed
};

/// Fills in missing certificates by search, then checks all five.
ArrowReport validate_arrow(const Context& ctx, ToposArrow& a, const SearchOptions& opt);
ToposArrow make_arrow(const ToposObject& s, const ToposObject& t, EWPredicate phi);
ToposArrow identity_arrow(const ToposObject& o);

/// exists_{pi13}(pi12^* phi /\ pi23^* psi), computed in iR coordinates.
ToposArrow compose(const Context& ctx, const ToposArrow& a, const ToposArrow& b,
                   const SearchOptions& opt, ArrowReport* report = nullptr);

// ---------------------------------------------------------------------------

/// An object of the weak-subobject doctrine over partitioned assemblies: a
/// display into base x base.
struct WeakSubobjectObject {
  Asm base;
  Morphism rho_display;
};

/// r: a display goes to the predicate with empty value sets.
IRPredicate r_pred(const Morphism& display);
/// l: forgets the value sets.
inline const Morphism& l_pred(const IRPredicate& p) { return p.display; }
/// p <= r(l(p)) via (identity, p2).
IRWitness unit_witness(const IRPredicate& p);

ToposObject embed_R(const WeakSubobjectObject& w);
WeakSubobjectObject project_L(const ToposObject& o);
/// Realised maps both ways between the displays, over base x base.
std::optional<std::pair<Morphism, Morphism>> same_weak_subobject(const Context& ctx,
                                                                 const WeakSubobjectObject& a,
                                                                 const WeakSubobjectObject& b,
                                                                 const SearchOptions& opt);

/// The diagonal as a weak subobject; embed_R of it is the discrete object.
WeakSubobjectObject diagonal(const Asm& x);
/// Graph x -> (x, s(x)) of a realised map s, as the predicate of an arrow
/// between discrete objects.
ToposArrow graph_arrow(const ToposObject& s, const ToposObject& t, const Morphism& f);

}  // namespace ewt
