#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "ewt/parallel.hpp"
#include "ewt/term.hpp"

namespace ewt {

using OracleTable = std::map<std::uint64_t, std::uint64_t>;

struct PcaSpec {
  std::map<std::string, OracleTable> oracles;
  std::uint64_t fuel_default = 10000;
};

/// Calling context threaded through every fallible operation. Holds the
/// (immutable) oracle tables and the per-application fuel.
struct Context {
  std::shared_ptr<const PcaSpec> pca = std::make_shared<PcaSpec>();
  std::uint64_t fuel = 10000;
  Exec exec = Exec::Parallel;

  static Context with_fuel(std::uint64_t f) {
    Context c;
    c.fuel = f;
    return c;
  }
};

struct Outcome {
  enum class Status : std::uint8_t { Converged, Stuck, Exhausted };
  Status status = Status::Exhausted;
  Term value;
  std::uint64_t steps = 0;

  bool converged() const { return status == Status::Converged; }
  bool stuck() const { return status == Status::Stuck; }
  bool exhausted() const { return status == Status::Exhausted; }
};

/// Leftmost-outermost weak reduction to full weak normal form.
///
/// Redexes are K a b, S a b c and an oracle applied to one argument. The
/// oracle argument is normalised first; a normal argument that is not a
/// numeral in the table makes the whole term stuck.
Outcome reduce(const PcaSpec& pca, const Term& t, std::uint64_t fuel);
Outcome reduce(const Context& ctx, const Term& t);

Outcome apply(const Context& ctx, const Term& a, const Term& b);
Outcome apply(const Context& ctx, const Term& a, const Term& b, const Term& c);
Outcome apply(const Context& ctx, const Term& a, const Term& b, const Term& c,
              const Term& d);

/// True iff t contains no oracle atom.
inline bool in_subpca(const Term& t) { return !t.has_oracle(); }

}  // namespace ewt
