#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace ewt {

/// Closed combinatory-logic term over S, K and named oracle atoms.
///
/// Terms are immutable DAGs with structural sharing. Every node caches its
/// hash, its leaf count, the head of its application spine and whether it is
/// already in weak normal form, so equality and normalisation checks stay
/// cheap even when reduction has produced heavily shared terms.
class Term {
public:
  enum class Kind : std::uint8_t { K, S, Oracle, App };

  Term();  // K

  static Term k();
  static Term s();
  static Term oracle(std::string name);
  static Term app(Term fn, Term arg);

  Kind kind() const { return node_->kind; }
  bool is_app() const { return node_->kind == Kind::App; }
  bool is_atom() const { return node_->kind != Kind::App; }
  const std::string& name() const { return node_->name; }
  const Term& left() const { return *node_->left; }
  const Term& right() const { return *node_->right; }

  /// Number of atom occurrences (S, K, oracle). Saturates at UINT64_MAX.
  std::uint64_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }
  bool is_normal() const { return node_->normal; }
  bool has_oracle() const { return node_->has_oracle; }

  /// Kind of the leftmost atom of the application spine and the number of
  /// arguments it is applied to (saturating at 255).
  Kind head_kind() const { return node_->head; }
  std::uint8_t spine_args() const { return node_->spine_args; }

  bool same_node(const Term& o) const { return node_ == o.node_; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
  struct Node {
    Kind kind;
    Kind head;
    std::uint8_t spine_args;
    bool normal;
    bool has_oracle;
    std::uint64_t size;
    std::size_t hash;
    std::string name;
    std::unique_ptr<Term> left;
    std::unique_ptr<Term> right;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Total order: leaf count, then K < S < oracle (by name) < application,
/// applications compared left-then-right. Enumerations of the search pool
/// and every ordered container in the library use this order.
int compare(const Term& a, const Term& b);

struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

using TermSet = std::set<Term, TermLess>;

struct TermSetLess {
  bool operator()(const TermSet& a, const TermSet& b) const;
};

/// A finite set of finite term sets, the values of extended Weihrauch
/// predicates.
using TermFamily = std::set<TermSet, TermSetLess>;

Term apply_all(Term head, const std::vector<Term>& args);

inline Term operator*(Term f, Term a) { return Term::app(std::move(f), std::move(a)); }

}  // namespace ewt

template <>
struct std::hash<ewt::Term> {
  std::size_t operator()(const ewt::Term& t) const { return t.hash(); }
};
