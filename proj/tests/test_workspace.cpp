#include <doctest.h>

#include <string>

#include "ewt/combinators.hpp"
#include "ewt/workspace.hpp"

using namespace ewt;

namespace {

const Term S = Term::s();
const Term K = Term::k();

const char* const kBase = R"(
assembly X { x0 = K, x1 = S }
assembly Y { y0 = <K, K>, y1 = <K, S>, y2 = <S, K> }
morphism f : Y -> X { y0 -> x0, y1 -> x0, y2 -> x1 }
)";

template <class E>
std::string error_of(const std::string& src) {
  try {
    parse_workspace(src);
  } catch (const E& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("workspace: a pca block alone is valid") {
  Workspace ws = parse_workspace("pca { fuel 500 pool 4 seed 9 oracle h { 0 -> 1, 1 -> 0 } }");
  CHECK(ws.pca.fuel_default == 500);
  CHECK(ws.pool_size == 4);
  CHECK(ws.seed == 9);
  CHECK(ws.pca.oracles.at("h").at(1) == 0);
  CHECK(ws.assemblies.empty());
  CHECK(parse_workspace("").assemblies.empty());
}

TEST_CASE("workspace: declarations") {
  Workspace ws = parse_workspace(std::string(kBase) + R"(
// comment
term swap = \u. <p2 u, p1 u>
assembly XY = X * Y
base a on X { x0 = [K, S] }
ir p via f { y0 = [K], y2 = [S, swap] }
ew g on X { (x0, K) = [[S], [K, I]], (x1, <K, K>) = [[]] }
witness w1 eiR p2
witness w2 iR f p2
witness w3 extW (\xi. p2 xi, swap)
universe u { values [[], [K]] pool [I, p2] }
)");
  CHECK(ws.assemblies.size() == 3);
  CHECK(ws.assemblies.at("XY")->size() == 6);
  const Morphism& f = ws.morphisms.at("f");
  CHECK(f.map == std::vector<std::size_t>{0, 0, 1});
  CHECK(verify(Context{}, f).ok());
  CHECK(ws.base_predicates.at("a").values[1].empty());
  const IRPredicate& p = ws.ir_predicates.at("p");
  CHECK(p.alpha[1].empty());
  CHECK(p.alpha[2].size() == 2);
  const EWPredicate& g = ws.ew_predicates.at("g");
  REQUIRE(g.at(0, K) != nullptr);
  CHECK(g.at(0, K)->size() == 2);
  CHECK(g.at(1, pair_of(K, K))->begin()->empty());
  CHECK(g.at(1, S) == nullptr);
  CHECK(ws.witnesses.at("w2").mediator == "f");
  CHECK(ws.witnesses.at("w3").ew.ell2 == ws.terms.at("swap"));
  CHECK(ws.universes.at("u").values.size() == 2);
}

TEST_CASE("workspace: duplicate ids name the id") {
  std::string e = error_of<ReferenceError>("assembly X { x0 = K }\nassembly X { x0 = S }");
  CHECK(e.find("duplicate assembly id 'X'") != std::string::npos);
  CHECK(e.rfind("2:10:", 0) == 0);
  e = error_of<ReferenceError>("assembly X { x0 = K, x0 = S }");
  CHECK(e.find("'x0'") != std::string::npos);
}

TEST_CASE("workspace: dangling references are errors") {
  std::string e = error_of<ParseError>("witness w eiR \\x. missing x");
  CHECK(e.find("missing") != std::string::npos);
  CHECK(e.rfind("1:19:", 0) == 0);
  e = error_of<ReferenceError>(std::string(kBase) + "ir p via g { }");
  CHECK(e.find("undefined morphism 'g'") != std::string::npos);
  e = error_of<ReferenceError>(std::string(kBase) + "base a on X { x7 = [K] }");
  CHECK(e.find("'x7'") != std::string::npos);
  e = error_of<ReferenceError>("object o on X rho r");
  CHECK(e.find("undefined assembly 'X'") != std::string::npos);
}

TEST_CASE("workspace: syntax errors carry positions") {
  std::string e = error_of<ParseError>("assembly X {\n  x0 = K\n  x1 = S }");
  CHECK(e.rfind("3:3:", 0) == 0);
  e = error_of<ParseError>("frobnicate");
  CHECK(e.find("expected a declaration") != std::string::npos);
  e = error_of<ParseError>("assembly X { x0 = (K }");
  CHECK(!e.empty());
}

TEST_CASE("workspace: morphism realizers are checked or found") {
  std::string e = error_of<ReferenceError>(std::string(kBase) + "morphism g : Y -> X { y0 -> x0, y1 -> x0, y2 -> x1 } realizer p2");
  CHECK(e.find("realizer of 'g' fails") != std::string::npos);
  e = error_of<ReferenceError>(std::string(kBase) + "morphism g : Y -> X { y0 -> x0 }");
  CHECK(e.find("does not map 'y1'") != std::string::npos);
  Workspace ws = parse_workspace(std::string(kBase) + "morphism g : X -> Y { x0 -> y0, x1 -> y2 }");
  CHECK(verify(Context{}, ws.morphisms.at("g")).ok());
}

TEST_CASE("workspace: objects and arrows check their bases") {
  std::string src = R"ws(
assembly X { x0 = K, x1 = S }
assembly XX = X * X
ew eq on XX { ("(x0,x0)", <K, K>) = [[]], ("(x1,x1)", <S, S>) = [[]] }
ew bad on X { (x0, K) = [[]] }
witness s extW (I, p2)
object D on X rho eq certificates s s
arrow i : D -> D phi eq
)ws";
  Workspace ws = parse_workspace(src);
  CHECK(ws.objects.at("D").certificates.size() == 2);
  CHECK(ws.arrows.at("i").certificates.empty());
  std::string e = error_of<ReferenceError>(src + "object B on X rho bad");
  CHECK(e.find("not over X x X") != std::string::npos);
}

TEST_CASE("workspace: printed declarations parse back") {
  Workspace ws = parse_workspace(std::string(kBase) + R"(
ir p via f { y0 = [K], y1 = [S, K S] }
ew g on X { (x0, K) = [[S], [K, I]], (x1, <K, K>) = [[]] }
)");
  GCarrier c = to_iR_carrier(ws.ew_predicates.at("g"));
  std::string text = std::string(kBase) + print_assembly("G(g).carrier", c.pred.source()) +
                     print_morphism("G(g).display", "G(g).carrier", "X", c.pred.display) +
                     print_ir("G(g)", "G(g).display", c.pred) +
                     print_ew("F(p)", "X", to_eW(ws.ir_predicates.at("p")));
  Workspace back = parse_workspace(text);
  const IRPredicate& q = back.ir_predicates.at("G(g)");
  CHECK(*q.source() == *c.pred.source());
  CHECK(q.display.map == c.pred.display.map);
  CHECK(q.alpha == c.pred.alpha);
  CHECK(back.ew_predicates.at("F(p)") == to_eW(ws.ir_predicates.at("p")));
}
