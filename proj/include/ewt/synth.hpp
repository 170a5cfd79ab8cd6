#pragma once

#include <optional>
#include <vector>

#include "ewt/reduce.hpp"
#include "ewt/term.hpp"

namespace ewt {

/// Input/output constraint: the synthesised u must satisfy u input ∈ targets.
struct SynthExample {
  Term input;
  TermSet targets;
};

struct SynthOptions {
  std::size_t path_depth = 6;   // nesting of p1/p2 projections
  std::size_t helper_paths = 4;  // projections fed to helpers
  std::size_t limit = 6;         // candidates kept per subproblem
  int depth = 3;                 // nesting of pair / case constructors
  std::vector<Term> helpers;     // terms that may be applied to projections
};

/// Merges examples with equal inputs by intersecting their targets. Returns
/// nullopt if some intersection is empty.
std::optional<std::vector<SynthExample>> merge_examples(std::vector<SynthExample> ex);

/// Example-guided enumeration of oracle-free terms \u. body, where bodies
/// are built from projections of u, constants common to all targets,
/// helper applications, pairs and case splits on boolean projections.
/// Candidates are returned in a deterministic order; every candidate fits
/// the examples under the evaluation used during synthesis, and callers
/// re-verify with the real checker.
std::vector<Term> synthesize(const Context& ctx, const std::vector<SynthExample>& examples,
                             const SynthOptions& opt = {});

}  // namespace ewt
