// Environment-based evaluator for the lambda syntax.
//
// Independent of bracket abstraction: closures, lazy call-by-need thunks,
// S and K interpreted as primitives. Used as the reference the compiler is
// checked against.
#pragma once

#include <pthread.h>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ewt/combinators.hpp"
#include "ewt/lambda.hpp"
#include "ewt/reduce.hpp"

namespace ewt::testing {

class EnvEvaluator {
public:
  enum class Result { Value, Stuck, Diverged, Inconclusive };

  struct Outcome {
    Result result;
    Term value;
  };

  EnvEvaluator(const PcaSpec& pca, std::uint64_t budget) : pca_(pca), budget_(budget) {}

  /// Evaluates e applied to args and reads the result back as a term.
  Outcome run(const Lam& e, const std::vector<Term>& args) {
    steps_ = 0;
    try {
      VPtr v = eval(e, nullptr);
      for (const Term& a : args) v = apply(v, ready(eval_term(a)));
      return {Result::Value, readback(v)};
    } catch (const StuckSignal&) {
      return {Result::Stuck, {}};
    } catch (const DivergeSignal&) {
      return {Result::Diverged, {}};
    } catch (const ClosureSignal&) {
      return {Result::Inconclusive, {}};
    }
  }

private:
  struct StuckSignal {};
  struct DivergeSignal {};
  struct ClosureSignal {};

  struct Value;
  using VPtr = std::shared_ptr<Value>;

  struct Thunk {
    std::function<VPtr()> code;
    VPtr value;
    VPtr force() {
      if (!value) {
        auto c = std::move(code);
        value = c();
      }
      return value;
    }
  };
  using TPtr = std::shared_ptr<Thunk>;

  struct EnvNode {
    std::string name;
    TPtr thunk;
    std::shared_ptr<const EnvNode> next;
  };
  using Env = std::shared_ptr<const EnvNode>;

  struct Value {
    bool closure;
    // closure
    std::string var;
    Lam body;
    Env env;
    // primitive: S, K or oracle atom with pending arguments
    Term atom;
    std::vector<TPtr> args;
  };

  static TPtr ready(VPtr v) {
    auto t = std::make_shared<Thunk>();
    t->value = std::move(v);
    return t;
  }

  TPtr delay(std::function<VPtr()> f) {
    auto t = std::make_shared<Thunk>();
    t->code = std::move(f);
    return t;
  }

  void tick() {
    if (++steps_ > budget_) throw DivergeSignal{};
  }

  VPtr prim(const Term& atom, std::vector<TPtr> args = {}) {
    auto v = std::make_shared<Value>();
    v->closure = false;
    v->atom = atom;
    v->args = std::move(args);
    return v;
  }

  VPtr eval_term(const Term& t) {
    if (t.is_atom()) return prim(t);
    VPtr f = eval_term(t.left());
    Term r = t.right();
    return apply(f, delay([this, r] { return eval_term(r); }));
  }

  VPtr eval(const Lam& e, const Env& env) {
    switch (e->kind) {
      case LambdaExpr::Kind::Var: {
        for (const EnvNode* n = env.get(); n; n = n->next.get())
          if (n->name == e->name) return n->thunk->force();
        throw UnboundVariable(e->name);
      }
      case LambdaExpr::Kind::Const:
        return eval_term(e->constant);
      case LambdaExpr::Kind::Abs: {
        auto v = std::make_shared<Value>();
        v->closure = true;
        v->var = e->name;
        v->body = e->a;
        v->env = env;
        return v;
      }
      case LambdaExpr::Kind::App: {
        VPtr f = eval(e->a, env);
        Lam arg = e->b;
        return apply(f, delay([this, arg, env] { return eval(arg, env); }));
      }
      case LambdaExpr::Kind::Pair: {
        Lam l = e->a, r = e->b;
        Env ext = std::make_shared<const EnvNode>(
            EnvNode{"$l", delay([this, l, env] { return eval(l, env); }), env});
        ext = std::make_shared<const EnvNode>(
            EnvNode{"$r", delay([this, r, env] { return eval(r, env); }), ext});
        auto v = std::make_shared<Value>();
        v->closure = true;
        v->var = "$f";
        v->body = lapp(lapp(ewt::var("$f"), ewt::var("$l")), ewt::var("$r"));
        v->env = ext;
        return v;
      }
    }
    throw UnboundVariable("?");
  }

  VPtr apply(const VPtr& f, const TPtr& a) {
    tick();
    if (f->closure) {
      Env env = std::make_shared<const EnvNode>(EnvNode{f->var, a, f->env});
      return eval(f->body, env);
    }
    std::vector<TPtr> args = f->args;
    args.push_back(a);
    switch (f->atom.kind()) {
      case Term::Kind::K:
        if (args.size() == 2) return args[0]->force();
        return prim(f->atom, std::move(args));
      case Term::Kind::S:
        if (args.size() == 3) {
          TPtr x = args[0], y = args[1], z = args[2];
          VPtr xz = apply(x->force(), z);
          return apply(xz, delay([this, y, z] { return apply(y->force(), z); }));
        }
        return prim(f->atom, std::move(args));
      case Term::Kind::Oracle: {
        Term n = readback(a->force());
        auto table = pca_.oracles.find(f->atom.name());
        auto m = decode_numeral(n);
        if (table == pca_.oracles.end() || !m) throw StuckSignal{};
        auto hit = table->second.find(*m);
        if (hit == table->second.end()) throw StuckSignal{};
        return eval_term(numeral(hit->second));
      }
      default:
        break;
    }
    throw StuckSignal{};
  }

  Term readback(const VPtr& v) {
    if (v->closure) throw ClosureSignal{};
    Term t = v->atom;
    for (const TPtr& a : v->args) t = Term::app(t, readback(a->force()));
    return t;
  }

  const PcaSpec& pca_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
};

/// Runs fn on a thread with a large stack; the evaluator recurses once per
/// application on divergent inputs.
inline void with_large_stack(const std::function<void()>& fn, std::size_t bytes = 512u << 20) {
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, bytes);
  pthread_t th;
  auto* payload = new std::function<void()>(fn);
  pthread_create(
      &th, &attr,
      [](void* p) -> void* {
        auto* f = static_cast<std::function<void()>*>(p);
        (*f)();
        delete f;
        return nullptr;
      },
      payload);
  pthread_join(th, nullptr);
  pthread_attr_destroy(&attr);
}

}  // namespace ewt::testing
