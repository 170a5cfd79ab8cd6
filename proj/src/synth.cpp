#include "ewt/synth.hpp"

#include <map>
#include <unordered_set>

#include "ewt/combinators.hpp"
#include "ewt/lambda.hpp"

namespace ewt {

std::optional<std::vector<SynthExample>> merge_examples(std::vector<SynthExample> ex) {
  std::map<Term, TermSet, TermLess> by_input;
  std::vector<Term> order;
  for (auto& e : ex) {
    auto it = by_input.find(e.input);
    if (it == by_input.end()) {
      order.push_back(e.input);
      by_input.emplace(e.input, std::move(e.targets));
      continue;
    }
    TermSet keep;
    for (const Term& t : it->second)
      if (e.targets.count(t)) keep.insert(t);
    it->second = std::move(keep);
  }
  std::vector<SynthExample> out;
  for (const Term& in : order) {
    TermSet& t = by_input[in];
    if (t.empty()) return std::nullopt;
    out.push_back({in, std::move(t)});
  }
  return out;
}

namespace {

struct Cand {
  Lam body;
  std::vector<Term> vals;  // one per example of the full problem; unset slots unused
};

class Synth {
public:
  Synth(const Context& ctx, const std::vector<SynthExample>& ex, const SynthOptions& opt)
      : ctx_(ctx), ex_(ex), opt_(opt) {
    build_atoms();
  }

  std::vector<Term> run() {
    std::vector<std::size_t> idx(ex_.size());
    std::vector<TermSet> targets(ex_.size());
    for (std::size_t i = 0; i < ex_.size(); ++i) {
      idx[i] = i;
      targets[i] = ex_[i].targets;
    }
    std::vector<Term> out;
    std::unordered_set<Term, TermHash> seen;
    for (const Cand& c : solve(idx, targets, opt_.depth)) {
      Term t = compile(lam("u", c.body));
      if (in_subpca(t) && seen.insert(t).second) out.push_back(t);
    }
    return out;
  }

private:
  void build_atoms() {
    const Lam u = var("u");
    // Projection paths, breadth first.
    std::vector<Cand> frontier{{u, {}}};
    for (const auto& e : ex_) frontier[0].vals.push_back(e.input);
    for (std::size_t d = 0; d <= opt_.path_depth && !frontier.empty(); ++d) {
      std::vector<Cand> next;
      for (Cand& c : frontier) {
        paths_.push_back(c);
        if (d == opt_.path_depth) continue;
        for (int side = 0; side < 2; ++side) {
          Cand n{lapp(cst(side == 0 ? comb_p1() : comb_p2()), c.body), {}};
          bool ok = true;
          for (const Term& v : c.vals) {
            auto m = match_pair(v);
            if (!m) {
              ok = false;
              break;
            }
            n.vals.push_back(side == 0 ? m->first : m->second);
          }
          if (ok) next.push_back(std::move(n));
        }
      }
      frontier = std::move(next);
    }
    atoms_ = paths_;

    for (const Cand& p : paths_) {
      bool all_bool = true, has_t = false, has_f = false;
      for (const Term& v : p.vals) {
        if (v == comb_true()) has_t = true;
        else if (v == comb_false()) has_f = true;
        else all_bool = false;
      }
      if (all_bool && has_t && has_f) bools_.push_back(p);
    }

    // Helpers applied to short projections and to pairs of them.
    std::size_t np = std::min(paths_.size(), opt_.helper_paths);
    std::vector<Cand> args(paths_.begin(), paths_.begin() + np);
    for (std::size_t i = 0; i < np; ++i)
      for (std::size_t j = 0; j < np; ++j) {
        Cand c{lpair(paths_[i].body, paths_[j].body), {}};
        for (std::size_t k = 0; k < ex_.size(); ++k)
          c.vals.push_back(pair_of(paths_[i].vals[k], paths_[j].vals[k]));
        args.push_back(std::move(c));
      }
    for (const Term& h : opt_.helpers) {
      if (!in_subpca(h)) continue;
      for (const Cand& a : args) {
        Cand c{lapp(cst(h), a.body), {}};
        bool ok = true;
        for (const Term& v : a.vals) {
          Outcome o = apply(ctx_, h, v);
          if (!o.converged()) {
            ok = false;
            break;
          }
          c.vals.push_back(o.value);
        }
        if (ok) atoms_.push_back(std::move(c));
      }
    }
  }

  static bool fits(const Cand& c, const std::vector<std::size_t>& idx,
                   const std::vector<TermSet>& targets) {
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (!targets[k].count(c.vals[idx[k]])) return false;
    return true;
  }

  Cand blank() const { return {nullptr, std::vector<Term>(ex_.size())}; }

  std::vector<Cand> solve(const std::vector<std::size_t>& idx, const std::vector<TermSet>& targets,
                          int depth) {
    std::vector<Cand> out;
    auto full = [&] { return out.size() >= opt_.limit; };

    if (idx.empty()) {
      Cand c = blank();
      c.body = var("u");
      out.push_back(std::move(c));
      return out;
    }
    for (const Cand& a : atoms_) {
      if (fits(a, idx, targets)) out.push_back(a);
      if (full()) return out;
    }
    // Constants common to every target.
    for (const Term& t : targets[0]) {
      if (!in_subpca(t)) continue;
      bool common = true;
      for (std::size_t k = 1; k < idx.size() && common; ++k) common = targets[k].count(t) > 0;
      if (!common) continue;
      Cand c = blank();
      c.body = cst(t);
      for (std::size_t k : idx) c.vals[k] = t;
      out.push_back(std::move(c));
      if (full()) return out;
    }
    if (depth <= 0) return out;

    // Pair construction.
    std::vector<TermSet> lefts(idx.size());
    bool pairable = true;
    for (std::size_t k = 0; k < idx.size() && pairable; ++k) {
      for (const Term& t : targets[k])
        if (auto m = match_pair(t)) lefts[k].insert(m->first);
      pairable = !lefts[k].empty();
    }
    if (pairable) {
      for (const Cand& l : solve(idx, lefts, depth - 1)) {
        std::vector<TermSet> rights(idx.size());
        bool ok = true;
        for (std::size_t k = 0; k < idx.size() && ok; ++k) {
          for (const Term& t : targets[k])
            if (auto m = match_pair(t); m && m->first == l.vals[idx[k]]) rights[k].insert(m->second);
          ok = !rights[k].empty();
        }
        if (!ok) continue;
        for (const Cand& r : solve(idx, rights, depth - 1)) {
          Cand c = blank();
          c.body = lpair(l.body, r.body);
          for (std::size_t k : idx) c.vals[k] = pair_of(l.vals[k], r.vals[k]);
          out.push_back(std::move(c));
          if (full()) return out;
        }
      }
    }

    // Case split on a boolean projection.
    for (const Cand& b : bools_) {
      std::vector<std::size_t> it, iff;
      std::vector<TermSet> tt, tf;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (b.vals[idx[k]] == comb_true()) {
          it.push_back(idx[k]);
          tt.push_back(targets[k]);
        } else {
          iff.push_back(idx[k]);
          tf.push_back(targets[k]);
        }
      }
      if (it.empty() || iff.empty()) continue;
      auto st = solve(it, tt, depth - 1);
      if (st.empty()) continue;
      auto sf = solve(iff, tf, depth - 1);
      for (std::size_t i = 0; i < std::min<std::size_t>(st.size(), 2); ++i)
        for (std::size_t j = 0; j < std::min<std::size_t>(sf.size(), 2); ++j) {
          Cand c = blank();
          c.body = lapp(lapp(lapp(cst(comb_case()), b.body), st[i].body), sf[j].body);
          for (std::size_t k : it) c.vals[k] = st[i].vals[k];
          for (std::size_t k : iff) c.vals[k] = sf[j].vals[k];
          out.push_back(std::move(c));
          if (full()) return out;
        }
    }
    return out;
  }

  const Context& ctx_;
  const std::vector<SynthExample>& ex_;
  const SynthOptions& opt_;
  std::vector<Cand> paths_;
  std::vector<Cand> atoms_;
  std::vector<Cand> bools_;
};

}  // namespace

std::vector<Term> synthesize(const Context& ctx, const std::vector<SynthExample>& examples,
                             const SynthOptions& opt) {
  for (const auto& e : examples)
    if (e.targets.empty()) return {};
  return Synth(ctx, examples, opt).run();
}

}  // namespace ewt
