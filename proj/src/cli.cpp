#include "ewt/cli.hpp"

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ewt/combinators.hpp"
#include "ewt/laws.hpp"
#include "ewt/search.hpp"
#include "ewt/workspace.hpp"

namespace ewt::cli {

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// -- reports ------------------------------------------------------------------

struct Report {
  std::string command;
  std::string text;
  json data = json::object();
  Verdict verdict;

  void field(const std::string& key, const std::string& value) {
    text += key + ": " + value + "\n";
    data[key] = value;
  }
  void block(const std::string& key, const std::string& value) {
    text += value;
    data[key] = value;
  }
};

int exit_code(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::Holds: return kHolds;
    case Verdict::Kind::Fails: return kFails;
    case Verdict::Kind::Unknown: return kUnknown;
  }
  return kInputError;
}

std::string render(const Report& r, bool machine, std::optional<double> ms) {
  if (machine) {
    json j;
    j["command"] = r.command;
    j["verdict"] = to_string(r.verdict.kind);
    j["detail"] = r.verdict.detail;
    for (auto it = r.data.begin(); it != r.data.end(); ++it) j[it.key()] = it.value();
    if (ms) j["time_ms"] = *ms;
    return j.dump(2) + "\n";
  }
  std::string out = "command: " + r.command + "\n" + r.text + "verdict: " + to_string(r.verdict.kind);
  if (!r.verdict.detail.empty()) out += " (" + r.verdict.detail + ")";
  out += "\n";
  if (ms) {
    std::ostringstream s;
    s << "time: " << *ms << " ms\n";
    out += s.str();
  }
  return out;
}

// -- session ------------------------------------------------------------------

struct Session {
  Workspace ws;
  Context ctx;
  SearchOptions search;

  // Generated declarations already printed, keyed by id.
  std::set<std::string> printed;

  template <class M>
  const typename M::mapped_type& get(const M& m, const std::string& id, const char* what) const {
    auto it = m.find(id);
    if (it == m.end()) throw InputError(std::string("unresolved reference: no ") + what + " '" + id + "'");
    return it->second;
  }

  const Morphism& morphism(const std::string& id) const { return get(ws.morphisms, id, "morphism"); }

  // F(...) and G(...) wrap a reference; returns the inner text.
  static std::optional<std::string> unwrap(const std::string& e, char f) {
    if (e.size() < 4 || e[0] != f || e[1] != '(' || e.back() != ')') return std::nullopt;
    return e.substr(2, e.size() - 3);
  }

  IRPredicate ir(const std::string& e) const {
    if (auto inner = unwrap(e, 'G')) return to_iR(ew(*inner));
    return get(ws.ir_predicates, e, "ir predicate");
  }

  EWPredicate ew(const std::string& e) const {
    if (auto inner = unwrap(e, 'F')) return to_eW(ir(*inner));
    return get(ws.ew_predicates, e, "ew predicate");
  }

  bool is_ew(const std::string& e) const {
    if (unwrap(e, 'F')) return true;
    if (unwrap(e, 'G')) return false;
    if (ws.ew_predicates.count(e)) return true;
    if (ws.ir_predicates.count(e)) return false;
    throw InputError("unresolved reference: no predicate '" + e + "'");
  }

  const WitnessDecl* witness_decl(const std::string& id) const {
    auto it = ws.witnesses.find(id);
    return it == ws.witnesses.end() ? nullptr : &it->second;
  }

  // Workspace id of an assembly, or a declaration for it under `fallback`.
  std::string assembly_id(const Asm& a, const std::string& fallback, std::string& decls) {
    for (const auto& [id, x] : ws.assemblies)
      if (same_assembly(x, a)) return id;
    if (printed.insert(fallback).second) decls += print_assembly(fallback, a);
    return fallback;
  }

  std::string ir_decls(const std::string& name, const IRPredicate& p) {
    std::string out;
    std::string base = assembly_id(p.base(), name + ".base", out);
    std::string src = assembly_id(p.source(), name + ".carrier", out);
    out += print_morphism(name + ".display", src, base, p.display);
    out += print_ir(name, name + ".display", p);
    return out;
  }

  std::string ew_decls(const std::string& name, const EWPredicate& g) {
    std::string out;
    std::string base = assembly_id(g.base, name + ".base", out);
    out += print_ew(name, base, g);
    return out;
  }
};

// -- witnesses ----------------------------------------------------------------

std::string ew_witness_text(const EWWitness& w) {
  return "(" + print(w.ell1) + ", " + print(w.ell2) + ")";
}

std::string ir_witness_text(const IRWitness& w) {
  std::string out = "mediator {";
  const Morphism& h = w.mediator;
  for (std::size_t y = 0; y < h.map.size(); ++y)
    out += std::string(y ? ", " : "") + h.src->ids[y] + " -> " + h.tgt->ids[h.map[y]];
  return out + "} realizer " + print(h.realizer) + ", l " + print(w.ell);
}

EWWitness ew_witness(const Session& s, const std::string& id) {
  if (const WitnessDecl* w = s.witness_decl(id)) {
    if (w->kind != WitnessDecl::Kind::ExtW) throw InputError("witness '" + id + "' is not an extW witness");
    return w->ew;
  }
  if (id == "refl") return extW_refl();
  if (id == "fg_down") return fg_down();
  if (id == "fg_up") return fg_up();
  if (id == "fg_k") return {Term::k(), comb_p2()};
  throw InputError("unresolved reference: no extW witness '" + id + "'");
}

IRWitness ir_witness(const Session& s, const std::string& id, const IRPredicate& p, const IRPredicate& q) {
  if (const WitnessDecl* w = s.witness_decl(id)) {
    if (w->kind != WitnessDecl::Kind::IR) throw InputError("witness '" + id + "' is not an iR witness");
    return {s.morphism(w->mediator), w->term};
  }
  if (id == "refl") return iR_refl(p);
  if (id == "gf_up") return gf_up(p);
  if (id == "gf_down") return gf_down(q);
  throw InputError("unresolved reference: no iR witness '" + id + "'");
}

Term eiR_witness(const Session& s, const std::string& id) {
  if (const WitnessDecl* w = s.witness_decl(id)) {
    if (w->kind != WitnessDecl::Kind::EiR) throw InputError("witness '" + id + "' is not an eiR witness");
    return w->term;
  }
  if (id == "refl") return comb_p2();
  throw InputError("unresolved reference: no eiR witness '" + id + "'");
}

// A point of p with nothing over its image in q.
std::optional<std::string> iR_obstruction(const IRPredicate& p, const IRPredicate& q) {
  std::vector<bool> covered(q.base()->size(), false);
  for (std::size_t z : q.display.map) covered[z] = true;
  for (std::size_t y = 0; y < p.display.map.size(); ++y)
    if (!covered[p.display.map[y]])
      return "nothing over " + p.base()->ids[p.display.map[y]] + " for " + p.source()->ids[y];
  return std::nullopt;
}

std::optional<std::string> eiR_obstruction(const BasePredicate& a, const BasePredicate& b) {
  for (std::size_t x = 0; x < a.values.size(); ++x)
    if (a.values[x].empty() && !b.values[x].empty()) return "empty lhs value at " + a.base->ids[x];
  return std::nullopt;
}

// -- commands -----------------------------------------------------------------

void need(const std::vector<std::string>& args, std::size_t n, const char* usage) {
  if (args.size() != n) throw InputError(std::string("usage: ") + usage);
}

void check(Session& s, Report& r, const std::vector<std::string>& a, const std::string& wid,
           bool search_only) {
  need(a, 3, search_only ? "search eiR|iR|extW <lhs> <rhs>" : "check eiR|iR|extW <lhs> <rhs> [--witness <id>]");
  const std::string& order = a[0];
  if (order == "eiR") {
    const BasePredicate& p = s.get(s.ws.base_predicates, a[1], "base predicate");
    const BasePredicate& q = s.get(s.ws.base_predicates, a[2], "base predicate");
    if (!same_assembly(p.base, q.base)) throw InputError("predicates over different assemblies");
    std::optional<Term> w;
    if (!wid.empty()) w = eiR_witness(s, wid);
    else w = search_eiR(s.ctx, p, q, s.search);
    if (!w) {
      auto why = eiR_obstruction(p, q);
      r.verdict = why ? Verdict::fails(*why) : Verdict::unknown("no witness found within the search bounds");
      return;
    }
    r.field("witness", print(*w));
    r.verdict = leq_eiR(s.ctx, p, q, *w);
  } else if (order == "iR") {
    IRPredicate p = s.ir(a[1]), q = s.ir(a[2]);
    if (!same_assembly(p.base(), q.base())) throw InputError("predicates over different assemblies");
    std::optional<IRWitness> w;
    if (!wid.empty()) w = ir_witness(s, wid, p, q);
    else w = search_iR(s.ctx, p, q, s.search);
    if (!w) {
      auto why = iR_obstruction(p, q);
      r.verdict = why ? Verdict::fails(*why) : Verdict::unknown("no witness found within the search bounds");
      return;
    }
    r.field("witness", ir_witness_text(*w));
    r.verdict = iR_leq(s.ctx, p, q, *w);
  } else if (order == "extW") {
    EWPredicate f = s.ew(a[1]), g = s.ew(a[2]);
    if (!same_assembly(f.base, g.base)) throw InputError("predicates over different assemblies");
    std::optional<EWWitness> w;
    if (!wid.empty()) w = ew_witness(s, wid);
    else w = search_extW(s.ctx, f, g, s.search);
    if (!w) {
      auto why = extW_obstruction(f, g);
      r.verdict = why ? Verdict::fails(*why) : Verdict::unknown("no witness found within the search bounds");
      return;
    }
    r.field("witness", ew_witness_text(*w));
    r.verdict = leq_extW(s.ctx, f, g, *w);
  } else {
    throw InputError("unknown order '" + order + "': expected eiR, iR or extW");
  }
}

ImplicationUniverse default_universe(const IRPredicate& p, const IRPredicate& q) {
  ImplicationUniverse u;
  std::set<TermSet, TermSetLess> vals{TermSet{}};
  for (const TermSet& A : p.alpha) vals.insert(A);
  for (const TermSet& A : q.alpha) vals.insert(A);
  u.values.assign(vals.begin(), vals.end());
  u.pool = {comb_I(), comb_p1(), comb_p2(), Term::k()};
  return u;
}

void op(Session& s, Report& r, const std::vector<std::string>& a, const std::string& universe) {
  if (a.empty()) throw InputError("usage: op meet|join|implies|exists|forall|reindex|classify <ids>");
  const std::string& name = a[0];
  std::string label = name + "(";
  for (std::size_t i = 1; i < a.size(); ++i) label += (i > 1 ? "," : "") + a[i];
  label += ")";
  if (name == "meet") {
    need(a, 3, "op meet <lhs> <rhs>");
    if (s.is_ew(a[1]) && s.is_ew(a[2])) {
      EWPredicate f = s.ew(a[1]), g = s.ew(a[2]);
      if (!same_assembly(f.base, g.base)) throw InputError("predicates over different assemblies");
      r.block("result", s.ew_decls(label, eW_meet(f, g)));
      return;
    }
    IRPredicate p = s.ir(a[1]), q = s.ir(a[2]);
    if (!same_assembly(p.base(), q.base())) throw InputError("predicates over different assemblies");
    IRMeet m = iR_meet(p, q);
    r.block("result", s.ir_decls(label, m.pred));
    r.verdict = iR_leq(s.ctx, m.pred, p, m.proj1);
    r.verdict &= iR_leq(s.ctx, m.pred, q, m.proj2);
    r.field("projections", to_string(r.verdict.kind));
  } else if (name == "join") {
    need(a, 3, "op join <lhs> <rhs>");
    IRPredicate p = s.ir(a[1]), q = s.ir(a[2]);
    if (!same_assembly(p.base(), q.base())) throw InputError("predicates over different assemblies");
    IRJoin j = iR_join(p, q);
    r.block("result", s.ir_decls(label, j.pred));
    r.verdict = iR_leq(s.ctx, p, j.pred, j.inj1);
    r.verdict &= iR_leq(s.ctx, q, j.pred, j.inj2);
    r.field("injections", to_string(r.verdict.kind));
  } else if (name == "implies") {
    need(a, 3, "op implies <lhs> <rhs> [--universe <id>]");
    IRPredicate p = s.ir(a[1]), q = s.ir(a[2]);
    if (!same_assembly(p.base(), q.base())) throw InputError("predicates over different assemblies");
    ImplicationUniverse u = universe.empty() ? default_universe(p, q)
                                             : s.get(s.ws.universes, universe, "universe");
    IRImplication imp = iR_implication(s.ctx, p, q, u);
    r.field("tuples", std::to_string(imp.tuples.size()));
    if (imp.empty_universe) r.field("note", "empty universe");
    r.block("result", s.ir_decls(label, imp.pred));
  } else if (name == "exists" || name == "reindex") {
    need(a, 3, name == "exists" ? "op exists <morphism> <predicate>" : "op reindex <morphism> <predicate>");
    const Morphism& f = s.morphism(a[1]);
    bool ex = name == "exists";
    if (s.is_ew(a[2])) {
      EWPredicate g = s.ew(a[2]);
      if (!same_assembly(ex ? f.src : f.tgt, g.base)) throw InputError("morphism does not fit the predicate");
      r.block("result", s.ew_decls(label, ex ? eW_exists(f, g) : eW_reindex(f, g)));
    } else {
      IRPredicate p = s.ir(a[2]);
      if (!same_assembly(ex ? f.src : f.tgt, p.base())) throw InputError("morphism does not fit the predicate");
      r.block("result", s.ir_decls(label, ex ? iR_exists(f, p) : iR_reindex(f, p)));
    }
  } else if (name == "forall") {
    need(a, 3, "op forall <morphism> <predicate>");
    const Morphism& f = s.morphism(a[1]);
    IRPredicate p = s.ir(a[2]);
    if (!same_assembly(f.src, p.base())) throw InputError("morphism does not fit the predicate");
    IRForall all = iR_forall(s.ctx, f, p, s.search.pool);
    r.field("tuples", std::to_string(all.tuples.size()));
    r.block("result", s.ir_decls(label, all.pred));
  } else if (name == "classify") {
    need(a, 2, "op classify <predicate>");
    IRPredicate p = s.ir(a[1]);
    Classification c = classify(p);
    r.block("result", s.ir_decls(label, c.canonical));
    r.field("to_canonical", ir_witness_text(c.to_canonical));
    r.field("from_canonical", ir_witness_text(c.from_canonical));
    r.verdict = iR_leq(s.ctx, p, c.canonical, c.to_canonical);
    r.verdict &= iR_leq(s.ctx, c.canonical, p, c.from_canonical);
  } else {
    throw InputError("unknown operation '" + name + "'");
  }
}

void translate(Session& s, Report& r, const std::vector<std::string>& a) {
  need(a, 2, "translate F|G <id>");
  if (a[0] == "F") {
    r.block("result", s.ew_decls("F(" + a[1] + ")", to_eW(s.ir(a[1]))));
  } else if (a[0] == "G") {
    r.block("result", s.ir_decls("G(" + a[1] + ")", to_iR(s.ew(a[1]))));
  } else {
    throw InputError("unknown translation '" + a[0] + "': expected F or G");
  }
}

void laws(Session& s, Report& r, const std::vector<std::string>& a, std::uint64_t seed,
          std::size_t pool) {
  need(a, 1, "laws <suite>|all");
  std::vector<std::string> names;
  if (a[0] == "all") names = suite_names();
  else names = {a[0]};
  LawOptions opt;
  opt.seed = seed;
  opt.fuel = s.ctx.fuel;
  opt.pool_size = pool;
  json suites = json::array();
  for (const std::string& n : names) {
    auto rep = run_suite(n, opt);
    if (!rep) throw InputError("unknown suite '" + n + "'");
    r.text += render_text(*rep);
    json j;
    j["suite"] = n;
    j["verdict"] = to_string(rep->verdict.kind);
    json cases = json::array();
    for (const LawCase& c : rep->cases)
      cases.push_back({{"name", c.name}, {"verdict", to_string(c.verdict.kind)}, {"detail", c.verdict.detail}});
    j["cases"] = cases;
    j["notes"] = rep->notes;
    suites.push_back(j);
    r.verdict &= rep->verdict;
  }
  r.data["suites"] = suites;
}

ToposObject object_of(const Session& s, const std::string& id) {
  const ObjectDecl& d = s.get(s.ws.objects, id, "topos object");
  return make_object(s.ws.assemblies.at(d.assembly), s.ws.ew_predicates.at(d.rho));
}

ToposArrow arrow_of(const Session& s, const std::string& id) {
  const ArrowDecl& d = s.get(s.ws.arrows, id, "topos arrow");
  ToposArrow a = make_arrow(object_of(s, d.source), object_of(s, d.target), s.ws.ew_predicates.at(d.phi));
  for (std::size_t i = 0; i < d.certificates.size(); ++i) a.certificates[i] = s.ws.witnesses.at(d.certificates[i]).ew;
  return a;
}

void topos(Session& s, Report& r, const std::vector<std::string>& a) {
  if (a.empty()) throw InputError("usage: topos validate|compose|embed <ids>");
  if (a[0] == "validate") {
    need(a, 2, "topos validate <object-or-arrow>");
    if (s.ws.objects.count(a[1])) {
      const ObjectDecl& d = s.ws.objects.at(a[1]);
      std::optional<ObjectCertificates> certs;
      if (!d.certificates.empty())
        certs = ObjectCertificates{s.ws.witnesses.at(d.certificates[0]).ew, s.ws.witnesses.at(d.certificates[1]).ew};
      ObjectReport rep = validate_object(s.ctx, object_of(s, a[1]), certs, s.search);
      if (rep.certificates) {
        r.field("symmetry", ew_witness_text(rep.certificates->symmetry));
        r.field("transitivity", ew_witness_text(rep.certificates->transitivity));
      }
      r.verdict = rep.verdict;
    } else {
      ToposArrow arr = arrow_of(s, a[1]);
      ArrowReport rep = validate_arrow(s.ctx, arr, s.search);
      static const char* names[5] = {"strict", "left_relational", "right_relational", "single_valued", "total"};
      for (std::size_t i = 0; i < 5; ++i)
        if (arr.certificates[i]) r.field(names[i], ew_witness_text(*arr.certificates[i]));
      r.field("failed_condition", std::to_string(rep.failed_condition));
      r.verdict = rep.verdict;
    }
  } else if (a[0] == "compose") {
    need(a, 3, "topos compose <arrow> <arrow>");
    ToposArrow f = arrow_of(s, a[1]), g = arrow_of(s, a[2]);
    if (!same_assembly(f.target.base, g.source.base)) throw InputError("arrows do not compose");
    ArrowReport rep;
    ToposArrow c = compose(s.ctx, f, g, s.search, &rep);
    std::string label = "compose(" + a[1] + "," + a[2] + ")";
    r.block("result", s.ew_decls(label, c.phi));
    r.field("failed_condition", std::to_string(rep.failed_condition));
    r.verdict = rep.verdict;
  } else if (a[0] == "embed") {
    need(a, 2, "topos embed <object>");
    ToposObject o = object_of(s, a[1]);
    WeakSubobjectObject l = project_L(o);
    ToposObject ro = embed_R(l);
    std::string label = "embed(" + a[1] + ")";
    std::string decls;
    std::string sq = s.assembly_id(o.square.obj, label + ".square", decls);
    std::string src = s.assembly_id(l.rho_display.src, label + ".carrier", decls);
    decls += print_morphism(label + ".display", src, sq, l.rho_display);
    decls += print_ew(label + ".rho", sq, ro.rho);
    r.block("result", decls);
    auto same = same_weak_subobject(s.ctx, project_L(ro), l, s.search);
    r.field("L(R(L(o))) = L(o)", same ? "holds" : "unknown");
    r.verdict = same ? Verdict::holds() : Verdict::unknown("no maps found between the displays");
  } else {
    throw InputError("unknown topos command '" + a[0] + "'");
  }
}

void reduce_cmd(Session& s, Report& r, const std::vector<std::string>& a) {
  need(a, 1, "reduce <term>");
  Term t;
  try {
    t = parse_term(a[0], s.ws.terms);
  } catch (const std::exception& e) {
    throw InputError(std::string("term: ") + e.what());
  }
  Outcome o = reduce(s.ctx, t);
  r.field("term", print(t));
  r.field("status", o.converged() ? "converged" : o.stuck() ? "stuck" : "exhausted");
  r.field("steps", std::to_string(o.steps));
  r.data["steps"] = o.steps;
  if (o.converged() || o.stuck()) r.field("value", print(o.value));
  if (o.stuck()) r.verdict = Verdict::fails("stuck");
  if (o.exhausted()) r.verdict = Verdict::unknown("fuel exhausted");
}

void degree(Session& s, Report& r, const std::vector<std::string>& a, const std::string& wid) {
  need(a, 2, "degree <lhs> <rhs> --witness <id>");
  if (wid.empty()) throw InputError("degree needs --witness");
  EWPredicate f = s.ew(a[0]), g = s.ew(a[1]);
  if (f.base->size() != 1 || g.base->size() != 1)
    throw InputError("degree predicates must be over a one-element assembly");
  // Degree witnesses read the point directly, so reflexivity is (I, p2).
  EWWitness w = wid == "refl" && !s.witness_decl(wid) ? EWWitness{comb_I(), comb_p2()} : ew_witness(s, wid);
  r.field("witness", ew_witness_text(w));
  r.verdict = leq_degree(s.ctx, as_degree(f), as_degree(g), w.ell1, w.ell2);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for instance reducibility and extended Weihrauch degrees", "ewt"};
  app.require_subcommand(1);
  std::string workspace, format = "text";
  std::optional<std::uint64_t> fuel, pool, seed;
  bool timing = false;
  app.add_option("--workspace", workspace, "workspace file");
  app.add_option("--fuel", fuel, "fuel per application");
  app.add_option("--pool-size", pool, "largest S/K term in the search pool");
  app.add_option("--seed", seed, "seed for sampled law suites");
  app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--timing", timing, "append the wall-clock time");

  std::vector<std::string> pos;
  std::string wid, universe;
  auto sub = [&](const char* name, const char* desc) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->fallthrough();
    c->add_option("args", pos);
    return c;
  };
  CLI::App* c_check = sub("check", "check an order, with a witness or by search");
  c_check->add_option("--witness", wid);
  CLI::App* c_search = sub("search", "search for a witness");
  CLI::App* c_op = sub("op", "construct a predicate");
  c_op->add_option("--universe", universe);
  CLI::App* c_translate = sub("translate", "apply F or G");
  CLI::App* c_laws = sub("laws", "run a law suite");
  CLI::App* c_topos = sub("topos", "validate, compose or embed topos data");
  CLI::App* c_reduce = sub("reduce", "reduce a term");
  CLI::App* c_degree = sub("degree", "check degrees over the terminal assembly");
  c_degree->add_option("--witness", wid);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  auto t0 = std::chrono::steady_clock::now();
  Report r;
  for (std::size_t i = 0; i < args.size(); ++i) r.command += (i ? " " : "") + args[i];
  try {
    Session s;
    if (!workspace.empty()) s.ws = load_workspace(workspace);
    if (fuel) s.ws.pca.fuel_default = *fuel;
    if (pool) s.ws.pool_size = *pool;
    if (seed) s.ws.seed = *seed;
    s.ctx.pca = std::make_shared<PcaSpec>(s.ws.pca);
    s.ctx.fuel = s.ws.pca.fuel_default;
    s.search.pool = standard_pool(s.ws.pool_size);
    for (const auto& [id, m] : s.ws.morphisms) s.search.synth.helpers.push_back(m.realizer);

    if (c_check->parsed()) check(s, r, pos, wid, false);
    else if (c_search->parsed()) check(s, r, pos, "", true);
    else if (c_op->parsed()) op(s, r, pos, universe);
    else if (c_translate->parsed()) translate(s, r, pos);
    else if (c_laws->parsed()) laws(s, r, pos, s.ws.seed, s.ws.pool_size);
    else if (c_topos->parsed()) topos(s, r, pos);
    else if (c_reduce->parsed()) reduce_cmd(s, r, pos);
    else if (c_degree->parsed()) degree(s, r, pos, wid);
  } catch (const ParseError& e) {
    err << "parse error: " << workspace << ":" << e.what() << "\n";
    return kInputError;
  } catch (const ReferenceError& e) {
    err << "reference error: " << workspace << ":" << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  std::optional<double> ms;
  if (timing) ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  out << render(r, format == "machine", ms);
  return exit_code(r.verdict);
}

}  // namespace ewt::cli
