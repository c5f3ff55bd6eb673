#include "cayley/chow_ring.hpp"

#include <doctest.h>

using namespace cayley;

namespace {

const WeightDiagram& diagram() {
  static const WeightDiagram d = cayley_plane_diagram();
  return d;
}

const StructureTable& table() {
  static const StructureTable t = solve_structure_constants(diagram());
  return t;
}

ChowClass cls(const std::string& name) { return ChowClass::basis(diagram().size(), *diagram().find_name(name)); }

ChowClass combo(std::initializer_list<std::pair<int, const char*>> terms) {
  ChowClass c(diagram().size());
  for (const auto& [k, name] : terms) c += Rational(k) * cls(name);
  return c;
}

NodeId id(const std::string& name) { return *diagram().find_name(name); }

std::string product(const std::string& a, const std::string& b) {
  return format_class(multiply(cls(a), cls(b), table()), diagram());
}

}  // namespace

TEST_CASE("Pieri rules in codimension 4") {
  const auto& d = diagram();
  CHECK(pieri_hk(d, d.top(), 4) == combo({{1, "s4p"}, {1, "s4pp"}}));
  CHECK(pieri_hk(d, id("s4p"), 4) == combo({{1, "s8"}, {3, "s8p"}, {2, "s8pp"}}));
  CHECK(pieri_hk(d, id("s4pp"), 4) == combo({{1, "s8"}, {4, "s8p"}, {3, "s8pp"}}));
  CHECK(pieri_hk(d, id("s8"), 4) == combo({{1, "s12p"}, {1, "s12pp"}}));
  CHECK(pieri_hk(d, id("s8p"), 4) == combo({{3, "s12p"}, {4, "s12pp"}}));
  CHECK(pieri_hk(d, id("s8pp"), 4) == combo({{2, "s12p"}, {3, "s12pp"}}));
}

TEST_CASE("Pieri edge cases") {
  const auto& d = diagram();
  CHECK(pieri_hk(d, d.bottom(), 1).is_zero());
  CHECK(pieri_hk(d, id("s12p"), 5).is_zero());
  CHECK(pieri_hk(d, id("s4p"), 0) == cls("s4p"));
  CHECK(pieri_hk(d, d.top(), 16) == Rational(78) * cls("s16"));
  CHECK_THROWS_AS(pieri_hk(d, d.top(), -1), std::invalid_argument);
}

TEST_CASE("degree of a class") {
  const auto& d = diagram();
  CHECK(schubert_degree(d, d.top()) == 78);
  CHECK(degree(d, combo({{1, "s8"}, {3, "s8p"}, {2, "s8pp"}})) == 33);
  for (NodeId u = 0; u < d.size(); ++u)
    CHECK(degree(d, pieri_hk(d, u, 16 - d.length(u))) == Rational(Integer(std::to_string(d.degree(u)))));
}

TEST_CASE("formatting") {
  const auto& d = diagram();
  CHECK(format_class(combo({{1, "s8"}, {3, "s8p"}, {2, "s8pp"}}), d) == "s8 + 3*s8p + 2*s8pp");
  CHECK(format_class(ChowClass(d.size()), d) == "0");
  CHECK(format_class(Rational(-3, 4) * cls("s2"), d) == "-3/4*s2");
  CHECK(format_class(cls("s4p") - cls("s4pp"), d) == "s4p - s4pp");
}

TEST_CASE("grades") {
  const auto& d = diagram();
  CHECK(cls("s4p").grade(d) == 4);
  CHECK_FALSE((cls("s4p") + cls("s5p")).grade(d).has_value());
  CHECK_FALSE(ChowClass(d.size()).grade(d).has_value());
}

TEST_CASE("quartic resolution") {
  const auto& r = table().resolution();
  CHECK(r.mu[0] == 1);
  CHECK(r.nu[0] == 1);
  CHECK(r.gamma[0] == 0);
  CHECK(r.a1 == 7);
  CHECK(r.a2 == 5);
  CHECK(r.c == 19);
  // 7 g1 + 5 g2 = 19 has exactly the nonnegative solution (2, 1).
  REQUIRE(r.line_points.size() == 1);
  CHECK(r.line_points[0] == std::array<Integer, 2>{2, 1});
  REQUIRE(r.admissible.size() == 1);
  CHECK(r.gamma[1] == 2);
  CHECK(r.gamma[2] == 1);
}

TEST_CASE("axioms and duality in middle codimension") {
  CHECK(product("s8", "s8") == "s16");
  CHECK(product("s4p", "s8") == "s12p");
  CHECK(product("s4pp", "s8") == "s12pp");
  CHECK(product("s8p", "s8p") == "s16");
  CHECK(product("s8pp", "s8pp") == "s16");
  CHECK(product("s8", "s8p") == "0");
  CHECK(product("s8p", "s8pp") == "0");
  CHECK(product("s8", "s8pp") == "0");
  CHECK(product("s4p", "s12p") == "s16");
  CHECK(product("s4pp", "s12pp") == "s16");
  CHECK(product("s4p", "s12pp") == "0");
  CHECK(product("s4pp", "s12p") == "0");
}

TEST_CASE("products of codimension-4 classes") {
  CHECK(product("s4p", "s4p") == "s8 + s8p + s8pp");
  CHECK(product("s4pp", "s4pp") == "s8 + 2*s8p + 2*s8pp");
  CHECK(product("s4p", "s4pp") == "2*s8p + s8pp");
}

TEST_CASE("products of codimension 4 by codimension 8") {
  CHECK(product("s4p", "s8p") == "s12p + 2*s12pp");
  CHECK(product("s4p", "s8pp") == "s12p + s12pp");
  CHECK(product("s4pp", "s8p") == "2*s12p + 2*s12pp");
  CHECK(product("s4pp", "s8pp") == "s12p + 2*s12pp");
}

TEST_CASE("table properties") {
  const auto& d = diagram();
  const auto& t = table();
  ChowClass unit = ChowClass::basis(d.size(), d.top());
  ChowClass h = cls("h");
  for (NodeId u = 0; u < d.size(); ++u) {
    ChowClass su = ChowClass::basis(d.size(), u);
    CHECK(multiply(unit, su, t) == su);
    CHECK(multiply(h, su, t) == pieri_hk(d, u, 1));
    CHECK(pairing(su, ChowClass::basis(d.size(), d.dual(u)), t) == 1);
    for (NodeId v = 0; v < d.size(); ++v) {
      const ChowClass& p = t.product(u, v);
      CHECK(p == t.product(v, u));
      CHECK(p.is_integral());
      for (NodeId w : p.support()) {
        CHECK(p[w] > 0);
        CHECK(d.length(w) == d.length(u) + d.length(v));
      }
      if (d.length(u) + d.length(v) == 16)
        CHECK(p[d.bottom()] == (v == d.dual(u) ? 1 : 0));
    }
  }
}

TEST_CASE("associativity over all admissible triples") {
  const auto& d = diagram();
  const auto& t = table();
  std::size_t triples = 0;
  for (NodeId u = 0; u < d.size(); ++u)
    for (NodeId v = u; v < d.size(); ++v)
      for (NodeId w = v; w < d.size(); ++w) {
        if (d.length(u) + d.length(v) + d.length(w) > 16) continue;
        ++triples;
        ChowClass left = multiply(t.product(u, v), ChowClass::basis(d.size(), w), t);
        ChowClass right = multiply(ChowClass::basis(d.size(), u), t.product(v, w), t);
        CHECK(left == right);
      }
  CHECK(triples > 0);
}

TEST_CASE("generation by h, s4p, s8") {
  const auto& d = diagram();
  const auto& t = table();
  CHECK(format_gen_poly(t.generation(id("s4pp"))) == "h^4 - s4p");
  CHECK(format_gen_poly(t.generation(d.top())) == "1");
  CHECK(t.integral({16, 0, 0}) == 78);
  CHECK(t.integral({0, 0, 2}) == 1);
  CHECK(t.integral({0, 4, 0}) == 3);  // (s8 + s8p + s8pp)^2
  CHECK_THROWS_AS(t.integral({1, 0, 0}), std::invalid_argument);
  // Re-evaluating each generation polynomial through the table gives back
  // the Schubert class.
  for (NodeId u = 0; u < d.size(); ++u) {
    ChowClass sum(d.size());
    for (const auto& [m, x] : t.generation(u)) {
      ChowClass term = ChowClass::basis(d.size(), d.top());
      for (int i = 0; i < m.h; ++i) term = multiply(term, cls("h"), t);
      for (int i = 0; i < m.s4; ++i) term = multiply(term, cls("s4p"), t);
      for (int i = 0; i < m.s8; ++i) term = multiply(term, cls("s8"), t);
      sum += x * term;
    }
    CHECK(sum == ChowClass::basis(d.size(), u));
  }
}

TEST_CASE("grade overflow") {
  bool overflow = false;
  ChowClass p = multiply(cls("s9p"), cls("s8"), table(), &overflow);
  CHECK(p.is_zero());
  CHECK(overflow);
  multiply(cls("s4p"), cls("s8"), table(), &overflow);
  CHECK_FALSE(overflow);
}

TEST_CASE("pairing") {
  const auto& d = diagram();
  const auto& t = table();
  ChowClass h8 = pieri_hk(d, d.top(), 8);
  CHECK(pairing(h8, h8, t) == 78);
  CHECK(poincare_pairing(d, h8, h8) == 78);
  CHECK(pairing(cls("s4p"), cls("s12p"), t) == 1);
  CHECK_THROWS_AS(pairing(cls("s4p"), cls("s8"), t), std::invalid_argument);
  CHECK_THROWS_AS(poincare_pairing(d, cls("s4p"), cls("s8")), std::invalid_argument);
}

TEST_CASE("inconsistent axioms are rejected") {
  GeometricAxioms wrong;
  wrong.products[2].result = "s12p";
  CHECK_THROWS_AS(solve_structure_constants(diagram(), wrong), SolverError);
  GeometricAxioms missing;
  missing.products.pop_back();
  CHECK_THROWS_AS(solve_structure_constants(diagram(), missing), SolverError);
}
