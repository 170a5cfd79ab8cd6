#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ewt/reduce.hpp"
#include "ewt/term.hpp"
#include "ewt/verdict.hpp"

namespace ewt {

/// Finite set with exactly one name per element. Elements are addressed by
/// position; ids are for reports and workspace references.
struct PartitionedAssembly {
  std::vector<std::string> ids;
  std::vector<Term> names;

  std::size_t size() const { return ids.size(); }
  std::optional<std::size_t> index_of(std::string_view id) const;
  friend bool operator==(const PartitionedAssembly& a, const PartitionedAssembly& b) {
    return a.ids == b.ids && a.names == b.names;
  }
};

using Asm = std::shared_ptr<const PartitionedAssembly>;

/// Throws std::invalid_argument on duplicate ids.
Asm make_assembly(std::vector<std::pair<std::string, Term>> elements);
bool same_assembly(const Asm& a, const Asm& b);

struct Morphism {
  Asm src;
  Asm tgt;
  std::vector<std::size_t> map;
  Term realizer;
};

/// Holds iff the candidate is oracle-free and sends each source name to the
/// name of the image. Fails names the first offending element.
Verdict verify_morphism(const Context& ctx, const Asm& src, const Asm& tgt,
                        const std::vector<std::size_t>& map, const Term& candidate);
Verdict verify(const Context& ctx, const Morphism& m);

/// First pool element realising the map, in pool order.
std::optional<Term> search_realizer(const Context& ctx, const Asm& src, const Asm& tgt,
                                    const std::vector<std::size_t>& map,
                                    const std::vector<Term>& pool);

Morphism identity(const Asm& x);
/// g after f, realised by \x. rg (rf x).
Morphism compose(const Morphism& g, const Morphism& f);
bool same_map(const Morphism& a, const Morphism& b);

Asm terminal();
Morphism to_terminal(const Asm& x);
Asm empty_assembly();
Morphism from_empty(const Asm& x);

struct Product {
  Asm obj;
  Morphism p1, p2;
  std::size_t index(std::size_t i, std::size_t j) const { return i * p2.tgt->size() + j; }
};
/// Carrier in lexicographic order, names <a, b>, projections p1 and p2.
Product product(const Asm& x, const Asm& y);
/// Mediating map <f, g> into a product, realised by \u. <rf u, rg u>.
Morphism pairing(const Morphism& f, const Morphism& g, const Product& p);

struct Pullback {
  Asm obj;
  Morphism p1, p2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::optional<std::size_t> index(std::size_t i, std::size_t j) const;
};
/// Pairs agreeing over the common codomain, named <name, name>.
Pullback pullback(const Morphism& f, const Morphism& g);

struct Coproduct {
  Asm obj;
  Morphism inl, inr;
};
/// Tagged union: inl elements first, named <true, .>, then inr named <false, .>.
Coproduct coproduct(const Asm& y, const Asm& z);
/// Copairing [f, g], realised by \x. case (p1 x) (rf (p2 x)) (rg (p2 x)).
Morphism copair(const Morphism& f, const Morphism& g, const Coproduct& c);

/// All closed S/K terms with exactly n atoms, in term order.
const std::vector<Term>& sk_terms_of_size(std::size_t n);

/// I, K, false, pair, p1, p2, case, then `extra`, then every S/K term up to
/// `max_size` atoms in term order. Duplicates keep their first position.
std::vector<Term> standard_pool(std::size_t max_size = 7, const std::vector<Term>& extra = {});

}  // namespace ewt
