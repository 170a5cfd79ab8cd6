#include "ewt/random.hpp"

#include "ewt/combinators.hpp"

namespace ewt {

std::size_t Gen::below(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

Term Gen::sk_term(std::size_t max_size) {
  std::size_t n = 1 + below(max_size);
  auto build = [&](auto&& self, std::size_t size) -> Term {
    if (size == 1) return coin() ? Term::k() : Term::s();
    std::size_t left = 1 + below(size - 1);
    return Term::app(self(self, left), self(self, size - left));
  };
  return build(build, n);
}

const std::vector<Term>& Gen::atoms() const {
  static const std::vector<Term> a = [] {
    Term k = Term::k(), s = Term::s();
    return std::vector<Term>{k, s, comb_I(), comb_false(), k * s, pair_of(k, s), numeral(1)};
  }();
  return a;
}

TermSet Gen::term_set(std::size_t max_size) {
  TermSet out;
  std::size_t n = below(max_size + 1);
  for (std::size_t i = 0; i < n; ++i) out.insert(atom());
  return out;
}

Asm Gen::assembly(std::size_t max_size, const std::string& prefix, std::size_t min_size) {
  std::size_t n = min_size + below(max_size - min_size + 1);
  std::vector<std::pair<std::string, Term>> els;
  for (std::size_t i = 0; i < n; ++i) els.emplace_back(prefix + std::to_string(i), atom());
  return make_assembly(std::move(els));
}

Morphism Gen::display(const Asm& x, std::size_t max_size, const std::string& prefix,
                      bool same_names) {
  std::size_t n = x->size() == 0 ? 0 : below(max_size + 1);
  std::vector<std::pair<std::string, Term>> els;
  std::vector<std::size_t> map;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t t = below(x->size());
    map.push_back(t);
    els.emplace_back(prefix + std::to_string(i), same_names ? x->names[t] : pair_of(x->names[t], atom()));
  }
  return {make_assembly(std::move(els)), x, std::move(map), same_names ? comb_I() : comb_p1()};
}

IRPredicate Gen::ir_predicate(const Asm& x, std::size_t max_size, const std::string& prefix,
                              std::size_t max_set) {
  IRPredicate p{display(x, max_size, prefix), {}};
  for (std::size_t i = 0; i < p.source()->size(); ++i) p.alpha.push_back(term_set(max_set));
  return p;
}

EWPredicate Gen::ew_predicate(const Asm& x, std::size_t max_entries, std::size_t max_family,
                              std::size_t max_set) {
  EWPredicate out{x, {}};
  if (x->size() == 0) return out;
  std::size_t n = below(max_entries + 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t e = below(x->size());
    Term a = atom();
    std::size_t m = 1 + below(max_family);
    for (std::size_t j = 0; j < m; ++j) out.add(e, a, term_set(max_set));
  }
  return out;
}

Degree Gen::degree(std::size_t max_entries, std::size_t max_family, std::size_t max_set) {
  return as_degree(ew_predicate(terminal(), max_entries, max_family, max_set));
}

}  // namespace ewt
