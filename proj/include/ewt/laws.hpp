#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ewt/reduce.hpp"
#include "ewt/verdict.hpp"

namespace ewt {

struct LawOptions {
  std::uint64_t seed = 1;
  std::uint64_t fuel = 10000;
  std::size_t pool_size = 5;
  Exec exec = Exec::Parallel;
};

struct LawCase {
  std::string name;
  Verdict verdict;
};

struct SuiteReport {
  std::string suite;
  std::vector<LawCase> cases;
  std::vector<std::string> notes;  // counts and observations, not verdicts
  Verdict verdict;                 // worst over the cases

  std::size_t count(Verdict::Kind k) const;
};

/// Suite names in a fixed order: pca, witnesses, heyting, frobenius, fg,
/// terminal, topos.
const std::vector<std::string>& suite_names();

/// nullopt for an unknown suite name. Deterministic in the options.
std::optional<SuiteReport> run_suite(const std::string& name, const LawOptions& opt);

/// Summary line, then every case that does not hold (every case with
/// all_cases), then the notes.
std::string render_text(const SuiteReport& r, bool all_cases = false);

}  // namespace ewt
