#include "ewt/reduce.hpp"

#include <algorithm>
#include <vector>

#include "ewt/combinators.hpp"

namespace ewt {

namespace {

enum class R { Ok, Stuck, Exhausted };

struct Engine {
  const PcaSpec& pca;
  std::uint64_t fuel;
  std::uint64_t steps = 0;

  bool tick() {
    if (steps >= fuel) return false;
    ++steps;
    return true;
  }

  // Spine machine: head h and its arguments on a stack, first argument on
  // top. Each contraction touches only the arguments it consumes.
  static Term rebuild(Term h, std::vector<Term>& stack) {
    while (!stack.empty()) {
      h = Term::app(std::move(h), std::move(stack.back()));
      stack.pop_back();
    }
    return h;
  }

  static void unwind(Term& h, std::vector<Term>& stack) {
    while (h.is_app()) {
      stack.push_back(h.right());
      Term l = h.left();
      h = std::move(l);
    }
  }

  R norm(Term& t) {
    if (t.is_normal()) return R::Ok;
    std::vector<Term> stack;
    Term h = t;
    unwind(h, stack);
    for (;;) {
      const std::size_t n = stack.size();
      if (h.kind() == Term::Kind::K && n >= 2) {
        if (!tick()) break;
        Term a = std::move(stack.back());
        stack.pop_back();
        stack.pop_back();
        h = std::move(a);
        unwind(h, stack);
        continue;
      }
      if (h.kind() == Term::Kind::S && n >= 3) {
        if (!tick()) break;
        Term x = std::move(stack.back());
        stack.pop_back();
        Term y = std::move(stack.back());
        stack.pop_back();
        Term z = std::move(stack.back());
        stack.pop_back();
        stack.push_back(Term::app(std::move(y), z));
        stack.push_back(std::move(z));
        h = std::move(x);
        unwind(h, stack);
        continue;
      }
      if (h.kind() == Term::Kind::Oracle && n >= 1) {
        R sub = norm(stack.back());
        if (sub != R::Ok) {
          t = rebuild(h, stack);
          return sub;
        }
        auto table = pca.oracles.find(h.name());
        auto m = decode_numeral(stack.back());
        if (table == pca.oracles.end() || !m) {
          t = rebuild(h, stack);
          return R::Stuck;
        }
        auto hit = table->second.find(*m);
        if (hit == table->second.end()) {
          t = rebuild(h, stack);
          return R::Stuck;
        }
        if (!tick()) break;
        stack.pop_back();
        h = numeral(hit->second);
        unwind(h, stack);
        continue;
      }
      // Head normal: normalise the arguments left to right.
      for (std::size_t i = stack.size(); i-- > 0;) {
        R sub = norm(stack[i]);
        if (sub != R::Ok) {
          t = rebuild(h, stack);
          return sub;
        }
      }
      t = rebuild(h, stack);
      return R::Ok;
    }
    t = rebuild(h, stack);
    return R::Exhausted;
  }
};

}  // namespace

Outcome reduce(const PcaSpec& pca, const Term& t, std::uint64_t fuel) {
  Engine e{pca, fuel};
  Term cur = t;
  R r = e.norm(cur);
  Outcome o;
  o.value = std::move(cur);
  o.steps = e.steps;
  o.status = r == R::Ok       ? Outcome::Status::Converged
             : r == R::Stuck ? Outcome::Status::Stuck
                             : Outcome::Status::Exhausted;
  return o;
}

Outcome reduce(const Context& ctx, const Term& t) { return reduce(*ctx.pca, t, ctx.fuel); }

Outcome apply(const Context& ctx, const Term& a, const Term& b) {
  return reduce(ctx, Term::app(a, b));
}

Outcome apply(const Context& ctx, const Term& a, const Term& b, const Term& c) {
  return reduce(ctx, Term::app(Term::app(a, b), c));
}

Outcome apply(const Context& ctx, const Term& a, const Term& b, const Term& c,
              const Term& d) {
  return reduce(ctx, Term::app(Term::app(Term::app(a, b), c), d));
}

}  // namespace ewt
