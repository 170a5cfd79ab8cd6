#include "ewt/syntax.hpp"

#include <cctype>
#include <set>
#include <vector>

#include "ewt/combinators.hpp"

namespace ewt {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::optional<Term> builtin(std::string_view n) {
  if (n == "S") return Term::s();
  if (n == "K") return Term::k();
  if (n == "I") return comb_I();
  if (n == "p1") return comb_p1();
  if (n == "p2") return comb_p2();
  if (n == "true") return comb_true();
  if (n == "false") return comb_false();
  if (n == "case") return comb_case();
  if (n == "pair") return comb_pair();
  return std::nullopt;
}

class Parser {
public:
  Parser(std::string_view s, const TermEnv& env, int line, int col)
      : s_(s), env_(env), line_(line), col_(col) {}

  Lam parse() {
    Lam e = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& m) { throw ParseError(line_, col_, m); }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string ident() {
    skip();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail("expected identifier");
    std::size_t b = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) advance();
    return std::string(s_.substr(b, pos_ - b));
  }

  bool at_atom_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return ident_start(c) || c == '#' || c == '(' || c == '<' || c == '\\';
  }

  Lam expr() {
    if (peek('\\')) {
      advance();
      std::vector<std::string> xs;
      xs.push_back(ident());
      while (!peek('.')) xs.push_back(ident());
      expect('.');
      for (const auto& x : xs) bound_.push_back(x);
      Lam body = expr();
      bound_.resize(bound_.size() - xs.size());
      for (auto it = xs.rbegin(); it != xs.rend(); ++it) body = lam(*it, body);
      return body;
    }
    Lam f = atom();
    while (at_atom_start()) {
      if (peek('\\')) return lapp(f, expr());
      f = lapp(f, atom());
    }
    return f;
  }

  Lam atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of term");
    char c = s_[pos_];
    if (c == '(') {
      advance();
      Lam e = expr();
      expect(')');
      return e;
    }
    if (c == '<') {
      advance();
      Lam l = expr();
      expect(',');
      Lam r = expr();
      expect('>');
      return lpair(l, r);
    }
    if (c == '#') {
      advance();
      if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail("expected oracle name after '#'");
      return cst(Term::oracle(ident()));
    }
    int l0 = line_, c0 = col_;
    std::string id = ident();
    if (id == "num" && pos_ < s_.size() && s_[pos_] == ':') {
      advance();
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) advance();
      if (b == pos_) fail("expected digits after 'num:'");
      std::string digits(s_.substr(b, pos_ - b));
      if (digits.size() > 6) fail("numeral too large");
      return cst(numeral(std::stoull(digits)));
    }
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (*it == id) return var(id);
    if (auto e = env_.find(id); e != env_.end()) return cst(e->second);
    if (auto b = builtin(id)) return cst(*b);
    throw ParseError(l0, c0, "unbound identifier '" + id + "'");
  }

  std::string_view s_;
  const TermEnv& env_;
  std::size_t pos_ = 0;
  int line_;
  int col_;
  std::vector<std::string> bound_;
};

struct Named {
  const Term* t;
  const char* name;
};

std::optional<std::string> named(const Term& t) {
  static const Named table[] = {{&comb_I(), "I"},       {&comb_p1(), "p1"},
                                {&comb_p2(), "p2"},     {&comb_false(), "false"},
                                {&comb_case(), "case"}, {&comb_pair(), "pair"}};
  if (t.is_atom()) return std::nullopt;
  for (const auto& n : table)
    if (*n.t == t) return std::string(n.name);
  return std::nullopt;
}

void print_into(const Term& t, std::string& out, bool arg);

bool self_delimited(const Term& t, std::string& out) {
  if (t.is_atom()) {
    switch (t.kind()) {
      case Term::Kind::K: out += 'K'; break;
      case Term::Kind::S: out += 'S'; break;
      default: out += '#'; out += t.name(); break;
    }
    return true;
  }
  if (auto n = decode_numeral(t)) {
    out += "num:" + std::to_string(*n);
    return true;
  }
  if (auto p = match_pair(t)) {
    out += '<';
    print_into(p->first, out, false);
    out += ", ";
    print_into(p->second, out, false);
    out += '>';
    return true;
  }
  if (auto n = named(t)) {
    out += *n;
    return true;
  }
  return false;
}

void print_into(const Term& t, std::string& out, bool arg) {
  if (self_delimited(t, out)) return;
  if (arg) out += '(';
  print_into(t.left(), out, false);
  out += ' ';
  print_into(t.right(), out, true);
  if (arg) out += ')';
}

}  // namespace

Lam parse_lambda(std::string_view src, const TermEnv& env, int line, int column) {
  return Parser(src, env, line, column).parse();
}

Term parse_term(std::string_view src, const TermEnv& env) {
  Lam e = parse_lambda(src, env);
  return compile(e);
}

std::string print(const Term& t) {
  std::string out;
  print_into(t, out, false);
  return out;
}

Term lambda_term(std::string_view src, const TermEnv& params) { return parse_term(src, params); }

}  // namespace ewt
