#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ewt/instance.hpp"
#include "ewt/synth.hpp"

namespace ewt {

struct SearchOptions {
  std::vector<Term> pool;       // fallback candidates, in order
  SynthOptions synth;
  std::size_t max_choices = 32;  // mediator/target choices tried per search
  std::uint64_t screen_fuel = 1000;  // fuel for pool scans; holding under less fuel implies holding
};

/// Witness hbar for alpha <= beta: synthesised from the required
/// input/output pairs, then the first pool element that verifies.
std::optional<Term> search_eiR(const Context& ctx, const BasePredicate& alpha,
                               const BasePredicate& beta, const SearchOptions& opt);

/// Witness for p <= q: a realised mediator over the base and a matching l.
std::optional<IRWitness> search_iR(const Context& ctx, const IRPredicate& p, const IRPredicate& q,
                                   const SearchOptions& opt);

/// Both directions; nullopt unless both are found.
std::optional<std::pair<IRWitness, IRWitness>> search_iR_equiv(const Context& ctx,
                                                               const IRPredicate& p,
                                                               const IRPredicate& q,
                                                               const SearchOptions& opt);

}  // namespace ewt
