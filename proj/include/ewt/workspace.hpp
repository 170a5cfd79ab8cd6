#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ewt/assembly.hpp"
#include "ewt/ext_weihrauch.hpp"
#include "ewt/instance.hpp"
#include "ewt/reduce.hpp"
#include "ewt/syntax.hpp"
#include "ewt/topos.hpp"

namespace ewt {

/// Dangling or duplicate ids and type mismatches between declarations.
struct ReferenceError : std::runtime_error {
  ReferenceError(int line, int column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg) {}
};

struct WitnessDecl {
  enum class Kind { EiR, IR, ExtW };
  Kind kind;
  Term term;         // eiR witness; iR l
  std::string mediator;  // iR mediator morphism id
  EWWitness ew;      // extW (l1, l2)
};

struct ObjectDecl {
  std::string assembly;
  std::string rho;  // ew predicate over assembly x assembly
  std::vector<std::string> certificates;  // empty or [symmetry, transitivity]
};

struct ArrowDecl {
  std::string source, target;  // object ids
  std::string phi;             // ew predicate over source x target
  std::vector<std::string> certificates;  // empty or five witness ids
};

/// Parsed workspace. Declaration maps are ordered by id.
struct Workspace {
  PcaSpec pca;
  std::uint64_t pool_size = 5;
  std::uint64_t seed = 1;
  TermEnv terms;
  std::map<std::string, Asm> assemblies;
  std::map<std::string, Morphism> morphisms;
  std::map<std::string, BasePredicate> base_predicates;
  std::map<std::string, IRPredicate> ir_predicates;
  std::map<std::string, EWPredicate> ew_predicates;
  std::map<std::string, WitnessDecl> witnesses;
  std::map<std::string, ImplicationUniverse> universes;
  std::map<std::string, ObjectDecl> objects;
  std::map<std::string, ArrowDecl> arrows;
};

/// Throws ParseError or ReferenceError with line and column.
Workspace parse_workspace(std::string_view src);
Workspace load_workspace(const std::string& path);

/// Declarations in workspace syntax, used to print constructed objects.
std::string print_assembly(const std::string& id, const Asm& a);
std::string print_morphism(const std::string& id, const std::string& src, const std::string& tgt,
                           const Morphism& m);
std::string print_ir(const std::string& id, const std::string& display, const IRPredicate& p);
std::string print_ew(const std::string& id, const std::string& base, const EWPredicate& g);

}  // namespace ewt
