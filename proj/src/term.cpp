#include "ewt/term.hpp"

#include <limits>

namespace ewt {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r < a ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::size_t mix(std::size_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

}  // namespace

Term::Term() : Term(k()) {}

Term Term::k() {
  static const Term t = [] {
    auto n = std::make_shared<Node>();
    n->kind = n->head = Kind::K;
    n->spine_args = 0;
    n->normal = true;
    n->has_oracle = false;
    n->size = 1;
    n->hash = mix(0x4b);
    return Term(std::shared_ptr<const Node>(std::move(n)));
  }();
  return t;
}

Term Term::s() {
  static const Term t = [] {
    auto n = std::make_shared<Node>();
    n->kind = n->head = Kind::S;
    n->spine_args = 0;
    n->normal = true;
    n->has_oracle = false;
    n->size = 1;
    n->hash = mix(0x53);
    return Term(std::shared_ptr<const Node>(std::move(n)));
  }();
  return t;
}

Term Term::oracle(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = n->head = Kind::Oracle;
  n->spine_args = 0;
  n->normal = true;
  n->has_oracle = true;
  n->size = 1;
  n->hash = mix(std::hash<std::string>{}(name) ^ 0x9e3779b97f4a7c15ULL);
  n->name = std::move(name);
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

Term Term::app(Term fn, Term arg) {
  auto n = std::make_shared<Node>();
  const Node& l = *fn.node_;
  const Node& r = *arg.node_;
  n->kind = Kind::App;
  n->head = l.head;
  n->spine_args = l.spine_args == 255 ? 255 : static_cast<std::uint8_t>(l.spine_args + 1);
  n->has_oracle = l.has_oracle || r.has_oracle;
  n->size = sat_add(l.size, r.size);
  n->hash = mix(l.hash * 31 + mix(r.hash + 0x632be59bd9b4e019ULL));
  bool redex = (n->head == Kind::K && n->spine_args == 2) ||
               (n->head == Kind::S && n->spine_args == 3) ||
               (n->head == Kind::Oracle && n->spine_args == 1);
  n->normal = l.normal && r.normal && !redex;
  n->left = std::make_unique<Term>(std::move(fn));
  n->right = std::make_unique<Term>(std::move(arg));
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::K:
    case Term::Kind::S:
      return true;
    case Term::Kind::Oracle:
      return a.name() == b.name();
    case Term::Kind::App:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

int compare(const Term& a, const Term& b) {
  if (a.same_node(b)) return 0;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Term::Kind::K:
    case Term::Kind::S:
      return 0;
    case Term::Kind::Oracle:
      return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
    case Term::Kind::App:
      if (int c = compare(a.left(), b.left())) return c;
      return compare(a.right(), b.right());
  }
  return 0;
}

bool TermSetLess::operator()(const TermSet& a, const TermSet& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    int c = compare(*ia, *ib);
    if (c) return c < 0;
  }
  return false;
}

Term apply_all(Term head, const std::vector<Term>& args) {
  for (const Term& a : args) head = Term::app(std::move(head), a);
  return head;
}

}  // namespace ewt
