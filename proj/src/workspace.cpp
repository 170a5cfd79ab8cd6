#include "ewt/workspace.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ewt/combinators.hpp"
#include "ewt/synth.hpp"

namespace ewt {

namespace {

bool id_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool id_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Reader {
public:
  explicit Reader(std::string_view s) : s_(s) {}

  Workspace run() {
    skip();
    while (pos_ < s_.size()) {
      decl();
      skip();
    }
    return std::move(ws_);
  }

private:
  // -- lexing ---------------------------------------------------------------

  [[noreturn]] void fail(const std::string& m) { throw ParseError(line_, col_, m); }
  [[noreturn]] void ref_fail(int l, int c, const std::string& m) { throw ReferenceError(l, c, m); }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip(bool newlines = true) {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '/' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '/') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        advance();
      } else {
        break;
      }
    }
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool peek_str(std::string_view w) {
    skip();
    return s_.substr(pos_, w.size()) == w;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    advance();
  }

  void expect_str(std::string_view w) {
    if (!peek_str(w)) fail("expected '" + std::string(w) + "'");
    for (std::size_t i = 0; i < w.size(); ++i) advance();
  }

  bool at_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    std::size_t e = pos_ + w.size();
    return e >= s_.size() || !id_char(s_[e]);
  }

  std::string ident() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '"') {
      advance();
      std::size_t b = pos_;
      while (pos_ < s_.size() && s_[pos_] != '"' && s_[pos_] != '\n') advance();
      if (pos_ >= s_.size() || s_[pos_] != '"') fail("unterminated quoted id");
      std::string out(s_.substr(b, pos_ - b));
      advance();
      return out;
    }
    if (pos_ >= s_.size() || !id_start(s_[pos_])) fail("expected identifier");
    std::size_t b = pos_;
    while (pos_ < s_.size() && id_char(s_[pos_])) advance();
    return std::string(s_.substr(b, pos_ - b));
  }

  void keyword(std::string_view w) {
    if (!at_word(w)) fail("expected '" + std::string(w) + "'");
    for (std::size_t i = 0; i < w.size(); ++i) advance();
  }

  std::uint64_t number() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) advance();
    if (b == pos_) fail("expected a number");
    std::string d(s_.substr(b, pos_ - b));
    if (d.size() > 18) fail("number too large");
    return std::stoull(d);
  }

  // A term runs to the first top-level delimiter. With to_eol it runs to the
  // end of the line instead.
  Term term(bool to_eol = false) {
    skip(!to_eol);
    int l0 = line_, c0 = col_;
    std::size_t b = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '/' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '/') break;
      if (c == '(' || c == '<') ++depth;
      if (depth == 0) {
        if (to_eol ? c == '\n' : (c == ',' || c == '}' || c == ']' || c == ')')) break;
      }
      if (c == ')' || c == '>') --depth;
      if (depth < 0) fail("unbalanced brackets in term");
      advance();
    }
    std::string_view text = s_.substr(b, pos_ - b);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError(l0, c0, "expected a term");
    try {
      return compile(parse_lambda(text, ws_.terms, l0, c0));
    } catch (const UnboundVariable& e) {
      throw ParseError(l0, c0, e.what());
    }
  }

  std::vector<Term> term_list() {
    std::vector<Term> out;
    expect('[');
    if (peek(']')) {
      advance();
      return out;
    }
    for (;;) {
      out.push_back(term());
      if (peek(']')) break;
      expect(',');
    }
    expect(']');
    return out;
  }

  TermSet term_set() {
    std::vector<Term> v = term_list();
    return TermSet(v.begin(), v.end());
  }

  // -- references -------------------------------------------------------------

  template <class M>
  const typename M::mapped_type& lookup(const M& m, const char* what) {
    skip();
    int l = line_, c = col_;
    std::string id = ident();
    auto it = m.find(id);
    if (it == m.end()) ref_fail(l, c, std::string("undefined ") + what + " '" + id + "'");
    last_ref_ = id;
    return it->second;
  }

  std::string ref_id(bool ok, int l, int c, const std::string& id, const char* what) {
    if (!ok) ref_fail(l, c, std::string("undefined ") + what + " '" + id + "'");
    return id;
  }

  template <class M>
  std::string fresh(const M& m, const char* what) {
    skip();
    int l = line_, c = col_;
    std::string id = ident();
    if (m.count(id)) ref_fail(l, c, std::string("duplicate ") + what + " id '" + id + "'");
    return id;
  }

  std::size_t element(const Asm& a) {
    skip();
    int l = line_, c = col_;
    std::string id = ident();
    auto i = a->index_of(id);
    if (!i) ref_fail(l, c, "no element '" + id + "'");
    return *i;
  }

  // -- declarations -----------------------------------------------------------

  void decl() {
    if (at_word("pca")) return pca();
    if (at_word("term")) return term_decl();
    if (at_word("assembly")) return assembly();
    if (at_word("morphism")) return morphism();
    if (at_word("base")) return base();
    if (at_word("ir")) return ir();
    if (at_word("ew")) return ew();
    if (at_word("witness")) return witness();
    if (at_word("universe")) return universe();
    if (at_word("object")) return object();
    if (at_word("arrow")) return arrow();
    fail("expected a declaration");
  }

  void pca() {
    keyword("pca");
    expect('{');
    while (!peek('}')) {
      if (at_word("fuel")) {
        keyword("fuel");
        ws_.pca.fuel_default = number();
      } else if (at_word("pool")) {
        keyword("pool");
        ws_.pool_size = number();
      } else if (at_word("seed")) {
        keyword("seed");
        ws_.seed = number();
      } else if (at_word("oracle")) {
        keyword("oracle");
        int l = line_, c = col_;
        std::string name = ident();
        if (ws_.pca.oracles.count(name)) ref_fail(l, c, "duplicate oracle '" + name + "'");
        OracleTable& t = ws_.pca.oracles[name];
        expect('{');
        while (!peek('}')) {
          std::uint64_t a = number();
          expect_str("->");
          t[a] = number();
          if (!peek('}')) expect(',');
        }
        expect('}');
      } else {
        fail("expected fuel, pool, seed or oracle");
      }
    }
    expect('}');
  }

  void term_decl() {
    keyword("term");
    std::string id = fresh(ws_.terms, "term");
    expect('=');
    Term t = term(true);
    ws_.terms.emplace(id, t);
  }

  void assembly() {
    keyword("assembly");
    std::string id = fresh(ws_.assemblies, "assembly");
    if (peek('=')) {
      advance();
      Asm x = lookup(ws_.assemblies, "assembly");
      expect('*');
      Asm y = lookup(ws_.assemblies, "assembly");
      ws_.assemblies.emplace(id, product(x, y).obj);
      return;
    }
    expect('{');
    std::vector<std::pair<std::string, Term>> els;
    while (!peek('}')) {
      skip();
      int l = line_, c = col_;
      std::string e = ident();
      for (const auto& [x, _] : els)
        if (x == e) ref_fail(l, c, "duplicate element '" + e + "' in assembly '" + id + "'");
      expect('=');
      els.emplace_back(e, term());
      if (!peek('}')) expect(',');
    }
    expect('}');
    ws_.assemblies.emplace(id, make_assembly(std::move(els)));
  }

  void morphism() {
    keyword("morphism");
    skip();
    int l = line_, c = col_;
    std::string id = fresh(ws_.morphisms, "morphism");
    expect(':');
    Asm src = lookup(ws_.assemblies, "assembly");
    expect_str("->");
    Asm tgt = lookup(ws_.assemblies, "assembly");
    Morphism m{src, tgt, std::vector<std::size_t>(src->size(), npos), {}};
    expect('{');
    while (!peek('}')) {
      std::size_t a = element(src);
      expect_str("->");
      m.map[a] = element(tgt);
      if (!peek('}')) expect(',');
    }
    expect('}');
    for (std::size_t i = 0; i < m.map.size(); ++i)
      if (m.map[i] == npos) ref_fail(l, c, "morphism '" + id + "' does not map '" + src->ids[i] + "'");
    Context ctx;
    ctx.pca = std::make_shared<PcaSpec>(ws_.pca);
    ctx.fuel = ws_.pca.fuel_default;
    if (at_word("realizer")) {
      keyword("realizer");
      m.realizer = term(true);
      Verdict v = verify(ctx, m);
      if (!v.ok()) ref_fail(l, c, "realizer of '" + id + "' " + to_string(v.kind) + ": " + v.detail);
    } else {
      auto r = search_realizer(ctx, src, tgt, m.map, standard_pool(ws_.pool_size));
      if (!r) {
        std::vector<SynthExample> ex;
        for (std::size_t i = 0; i < m.map.size(); ++i) ex.push_back({src->names[i], {tgt->names[m.map[i]]}});
        if (auto merged = merge_examples(ex))
          for (const Term& t : synthesize(ctx, *merged))
            if (verify_morphism(ctx, src, tgt, m.map, t).ok()) {
              r = t;
              break;
            }
      }
      if (!r) ref_fail(l, c, "no realizer for '" + id + "' found in the pool or by synthesis");
      m.realizer = *r;
    }
    ws_.morphisms.emplace(id, std::move(m));
  }

  void base() {
    keyword("base");
    std::string id = fresh(ws_.base_predicates, "base predicate");
    keyword("on");
    Asm x = lookup(ws_.assemblies, "assembly");
    BasePredicate b{x, std::vector<TermSet>(x->size())};
    expect('{');
    while (!peek('}')) {
      std::size_t e = element(x);
      expect('=');
      b.values[e] = term_set();
      if (!peek('}')) expect(',');
    }
    expect('}');
    ws_.base_predicates.emplace(id, std::move(b));
  }

  void ir() {
    keyword("ir");
    std::string id = fresh(ws_.ir_predicates, "ir predicate");
    keyword("via");
    const Morphism& d = lookup(ws_.morphisms, "morphism");
    IRPredicate p{d, std::vector<TermSet>(d.src->size())};
    expect('{');
    while (!peek('}')) {
      std::size_t e = element(d.src);
      expect('=');
      p.alpha[e] = term_set();
      if (!peek('}')) expect(',');
    }
    expect('}');
    ws_.ir_predicates.emplace(id, std::move(p));
  }

  void ew() {
    keyword("ew");
    std::string id = fresh(ws_.ew_predicates, "ew predicate");
    keyword("on");
    Asm x = lookup(ws_.assemblies, "assembly");
    EWPredicate g{x, {}};
    expect('{');
    while (!peek('}')) {
      expect('(');
      std::size_t e = element(x);
      expect(',');
      Term a = term();
      expect(')');
      expect('=');
      expect('[');
      if (peek(']')) fail("an entry needs at least one set; leave the pair out instead");
      for (;;) {
        g.add(e, a, term_set());
        if (peek(']')) break;
        expect(',');
      }
      expect(']');
      if (!peek('}')) expect(',');
    }
    expect('}');
    ws_.ew_predicates.emplace(id, std::move(g));
  }

  void witness() {
    keyword("witness");
    std::string id = fresh(ws_.witnesses, "witness");
    WitnessDecl w{};
    if (at_word("eiR")) {
      keyword("eiR");
      w.kind = WitnessDecl::Kind::EiR;
      w.term = term(true);
    } else if (at_word("iR")) {
      keyword("iR");
      w.kind = WitnessDecl::Kind::IR;
      lookup(ws_.morphisms, "morphism");
      w.mediator = last_ref_;
      w.term = term(true);
    } else if (at_word("extW")) {
      keyword("extW");
      w.kind = WitnessDecl::Kind::ExtW;
      expect('(');
      w.ew.ell1 = term();
      expect(',');
      w.ew.ell2 = term();
      expect(')');
    } else {
      fail("expected eiR, iR or extW");
    }
    ws_.witnesses.emplace(id, std::move(w));
  }

  void universe() {
    keyword("universe");
    std::string id = fresh(ws_.universes, "universe");
    ImplicationUniverse u;
    expect('{');
    while (!peek('}')) {
      if (at_word("values")) {
        keyword("values");
        expect('[');
        while (!peek(']')) {
          u.values.push_back(term_set());
          if (!peek(']')) expect(',');
        }
        expect(']');
      } else if (at_word("pool")) {
        keyword("pool");
        for (const Term& t : term_list()) u.pool.push_back(t);
      } else {
        fail("expected values or pool");
      }
    }
    expect('}');
    ws_.universes.emplace(id, std::move(u));
  }

  std::vector<std::string> certificates(std::size_t n) {
    std::vector<std::string> out;
    if (!at_word("certificates")) return out;
    keyword("certificates");
    for (std::size_t i = 0; i < n; ++i) {
      const WitnessDecl& w = lookup(ws_.witnesses, "witness");
      if (w.kind != WitnessDecl::Kind::ExtW) fail("certificate '" + last_ref_ + "' is not an extW witness");
      out.push_back(last_ref_);
    }
    return out;
  }

  void object() {
    keyword("object");
    std::string id = fresh(ws_.objects, "object");
    ObjectDecl o;
    keyword("on");
    skip();
    int l = line_, c = col_;
    Asm x = lookup(ws_.assemblies, "assembly");
    o.assembly = last_ref_;
    keyword("rho");
    const EWPredicate& rho = lookup(ws_.ew_predicates, "ew predicate");
    o.rho = last_ref_;
    if (!same_assembly(rho.base, product(x, x).obj))
      ref_fail(l, c, "rho of '" + id + "' is not over " + o.assembly + " x " + o.assembly);
    o.certificates = certificates(2);
    ws_.objects.emplace(id, std::move(o));
  }

  void arrow() {
    keyword("arrow");
    std::string id = fresh(ws_.arrows, "arrow");
    ArrowDecl a;
    expect(':');
    skip();
    int l = line_, c = col_;
    const ObjectDecl& s = lookup(ws_.objects, "object");
    a.source = last_ref_;
    expect_str("->");
    const ObjectDecl& t = lookup(ws_.objects, "object");
    a.target = last_ref_;
    keyword("phi");
    const EWPredicate& phi = lookup(ws_.ew_predicates, "ew predicate");
    a.phi = last_ref_;
    if (!same_assembly(phi.base, product(ws_.assemblies.at(s.assembly), ws_.assemblies.at(t.assembly)).obj))
      ref_fail(l, c, "phi of '" + id + "' is not over " + s.assembly + " x " + t.assembly);
    a.certificates = certificates(5);
    ws_.arrows.emplace(id, std::move(a));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Workspace ws_;
  std::string last_ref_;
};

bool plain_id(const std::string& s) {
  if (s.empty() || !id_start(s[0])) return false;
  for (char c : s)
    if (!id_char(c)) return false;
  return true;
}

std::string quote(const std::string& s) { return plain_id(s) ? s : "\"" + s + "\""; }

std::string print_set(const TermSet& s) {
  std::string out = "[";
  for (const Term& t : s) out += (out.size() > 1 ? ", " : "") + print(t);
  return out + "]";
}

}  // namespace

Workspace parse_workspace(std::string_view src) { return Reader(src).run(); }

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_workspace(ss.str());
}

std::string print_assembly(const std::string& id, const Asm& a) {
  std::string out = "assembly " + quote(id) + " {";
  for (std::size_t i = 0; i < a->size(); ++i)
    out += std::string(i ? "," : "") + "\n  " + quote(a->ids[i]) + " = " + print(a->names[i]);
  return out + (a->size() ? "\n}\n" : "}\n");
}

std::string print_morphism(const std::string& id, const std::string& src, const std::string& tgt,
                           const Morphism& m) {
  std::string out = "morphism " + quote(id) + " : " + quote(src) + " -> " + quote(tgt) + " {";
  for (std::size_t i = 0; i < m.map.size(); ++i)
    out += std::string(i ? "," : "") + "\n  " + quote(m.src->ids[i]) + " -> " + quote(m.tgt->ids[m.map[i]]);
  return out + (m.map.empty() ? "}" : "\n}") + " realizer " + print(m.realizer) + "\n";
}

std::string print_ir(const std::string& id, const std::string& display, const IRPredicate& p) {
  std::string out = "ir " + quote(id) + " via " + quote(display) + " {";
  const Asm& y = p.source();
  for (std::size_t i = 0; i < y->size(); ++i)
    out += std::string(i ? "," : "") + "\n  " + quote(y->ids[i]) + " = " + print_set(p.alpha[i]);
  return out + (y->size() ? "\n}\n" : "}\n");
}

std::string print_ew(const std::string& id, const std::string& base, const EWPredicate& g) {
  std::string out = "ew " + quote(id) + " on " + quote(base) + " {";
  bool first = true;
  for (const auto& [k, fam] : g.support) {
    out += std::string(first ? "" : ",") + "\n  (" + quote(g.base->ids[k.x]) + ", " + print(k.a) + ") = [";
    bool f2 = true;
    for (const TermSet& A : fam) {
      out += (f2 ? "" : ", ") + print_set(A);
      f2 = false;
    }
    out += "]";
    first = false;
  }
  return out + (first ? "}\n" : "\n}\n");
}

}  // namespace ewt
