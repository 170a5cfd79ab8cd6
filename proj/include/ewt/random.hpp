#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ewt/assembly.hpp"
#include "ewt/ext_weihrauch.hpp"
#include "ewt/instance.hpp"

namespace ewt {

/// Seeded generator for desk-scale instances. All draws go through one
/// mt19937_64, so a seed fixes every instance.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n);  // uniform in [0, n), n > 0
  bool coin() { return below(2) == 1; }

  /// Random closed S/K term with between 1 and max_size atoms.
  Term sk_term(std::size_t max_size);
  /// Small normal terms used as names and predicate values.
  const std::vector<Term>& atoms() const;
  Term atom() { return atoms()[below(atoms().size())]; }
  TermSet term_set(std::size_t max_size);

  /// Assembly of 1..max_size elements named from the atoms; ids prefix0, ...
  Asm assembly(std::size_t max_size, const std::string& prefix, std::size_t min_size = 1);
  /// Realised morphism into x: a fresh source whose names are tagged
  /// <phi(f y), t>, realised by p1. With same_names the source reuses the
  /// target names and the realiser is I.
  Morphism display(const Asm& x, std::size_t max_size, const std::string& prefix, bool same_names);
  Morphism display(const Asm& x, std::size_t max_size, const std::string& prefix) {
    return display(x, max_size, prefix, below(3) == 0);
  }
  IRPredicate ir_predicate(const Asm& x, std::size_t max_size, const std::string& prefix,
                           std::size_t max_set = 2);

  /// Up to max_entries supported pairs (x, atom), each with 1..max_family
  /// blocks of at most max_set terms.
  EWPredicate ew_predicate(const Asm& x, std::size_t max_entries, std::size_t max_family = 2,
                           std::size_t max_set = 2);
  Degree degree(std::size_t max_entries, std::size_t max_family = 2, std::size_t max_set = 2);

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace ewt
