// Random closed lambda expressions and the compiler agreement check against
// the environment-based evaluator.
#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ewt/combinators.hpp"
#include "ewt/lambda.hpp"
#include "ewt/reduce.hpp"
#include "ewt/syntax.hpp"
#include "support/env_eval.hpp"

namespace ewt::testing {

class LambdaGen {
public:
  explicit LambdaGen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Term constant() {
    static const std::vector<Term> c{Term::s(), Term::k(), comb_I(), comb_p1(), comb_p2(),
                                     comb_false(), comb_pair(), Term::k() * Term::s()};
    return c[below(c.size())];
  }

  Lam expr(int depth, std::vector<std::string>& scope) {
    if (depth == 0 || below(5) == 0) {
      if (!scope.empty() && below(3) != 0) return var(scope[below(scope.size())]);
      return cst(constant());
    }
    switch (below(4)) {
      case 0: {
        std::string x = "v" + std::to_string(scope.size());
        scope.push_back(x);
        Lam body = expr(depth - 1, scope);
        scope.pop_back();
        return lam(x, body);
      }
      case 1:
        return lpair(expr(depth - 1, scope), expr(depth - 1, scope));
      default:
        return lapp(expr(depth - 1, scope), expr(depth - 1, scope));
    }
  }

  Term arg() {
    Term t = constant();
    if (below(3) == 0) t = pair_of(t, constant());
    return t;
  }

private:
  std::mt19937_64 rng_;
};

struct AgreementStats {
  std::size_t conclusive = 0;
  std::size_t converged = 0;
  std::size_t diverged = 0;
  std::size_t inconclusive = 0;
  std::vector<std::string> disagreements;
};

/// Generates expressions until `want` conclusive cases have been compared:
/// the evaluator returns a first-order value or runs out of budget. The
/// compiled term, applied to the same arguments, must converge to the same
/// value, or fail to converge.
inline AgreementStats compiler_agreement(std::uint64_t seed, std::size_t want,
                                         std::size_t max_attempts = 20000) {
  AgreementStats st;
  with_large_stack([&] {
    LambdaGen gen(seed);
    PcaSpec pca;
    for (std::size_t attempt = 0; attempt < max_attempts && st.conclusive < want; ++attempt) {
      std::vector<std::string> scope;
      Lam e = gen.expr(4, scope);
      std::vector<Term> args;
      for (std::size_t i = 0, n = gen.below(4); i < n; ++i) args.push_back(gen.arg());

      EnvEvaluator ev(pca, 100000);
      EnvEvaluator::Outcome ref = ev.run(e, args);
      if (ref.result == EnvEvaluator::Result::Inconclusive ||
          ref.result == EnvEvaluator::Result::Stuck) {
        ++st.inconclusive;
        continue;
      }
      Term t = compile(e);
      for (const Term& a : args) t = t * a;
      Outcome got = reduce(pca, t, 10000);
      ++st.conclusive;
      std::ostringstream why;
      if (ref.result == EnvEvaluator::Result::Value) {
        ++st.converged;
        if (!got.converged())
          why << "evaluator gives " << print(ref.value) << ", reduction does not converge";
        else if (got.value != ref.value)
          why << "evaluator gives " << print(ref.value) << ", reduction gives " << print(got.value);
      } else {
        ++st.diverged;
        if (got.converged()) why << "evaluator diverges, reduction gives " << print(got.value);
      }
      if (!why.str().empty()) st.disagreements.push_back(print(t) + ": " + why.str());
    }
  });
  return st;
}

}  // namespace ewt::testing
