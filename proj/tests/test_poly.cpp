#include "cayley/poly.hpp"

#include <doctest.h>

#include <random>

using namespace cayley;

namespace {

Poly x(int i) { return Poly::variable(i); }

Poly random_poly(std::mt19937_64& rng, int degree, int terms) {
  std::uniform_int_distribution<int> var(0, Poly::kVars - 1), coef(-9, 9);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Poly::Exponents e{};
    for (int k = 0; k < degree; ++k) ++e[var(rng)];
    p.add_term(e, Rational(coef(rng), 1 + (t % 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("construction and queries") {
  Poly p = x(0) * x(0) + Rational(3, 2) * x(1) - Poly::constant(5);
  CHECK(p.size() == 3);
  CHECK(p.degree() == 2);
  CHECK_FALSE(p.is_homogeneous());
  CHECK(p.constant_term() == -5);
  CHECK(p.coeff({0, 1, 0, 0, 0, 0}) == Rational(3, 2));
  CHECK(Poly().degree() == -1);
  CHECK(Poly().is_zero());
  CHECK(Poly().is_homogeneous());
  CHECK((x(2) * x(3)).is_homogeneous());
}

TEST_CASE("no stored zeros") {
  Poly p = x(0) + x(1);
  p -= x(1);
  CHECK(p.size() == 1);
  p.add_term({1, 0, 0, 0, 0, 0}, -1);
  CHECK(p.is_zero());
  CHECK((0 * x(3)).is_zero());
  CHECK(((x(0) + x(1)) * (x(0) - x(1)) - x(0) * x(0) + x(1) * x(1)).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    Poly a = random_poly(rng, 3, 8), b = random_poly(rng, 2, 6), c = random_poly(rng, 4, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a - a == Poly());
    CHECK(a.pow(3) == a * a * a);
  }
}

TEST_CASE("degree bound") {
  Poly p = x(0).pow(20);
  CHECK(p.degree() == 20);
  CHECK_NOTHROW(x(0).pow(32));
  CHECK_THROWS_AS(p * p, std::overflow_error);
  CHECK_THROWS_AS(Poly::monomial({33, 0, 0, 0, 0, 0}, 1), std::overflow_error);
  CHECK_THROWS_AS(Poly::monomial({-1, 0, 0, 0, 0, 0}, 1), std::invalid_argument);
}

TEST_CASE("coordinate systems do not mix") {
  Poly e = Poly::variable(0, Coordinates::kEpsilon);
  Poly w = Poly::variable(0, Coordinates::kFundamental);
  CHECK_THROWS_AS(e + w, std::invalid_argument);
  CHECK_THROWS_AS(e * w, std::invalid_argument);
  CHECK(e != w);
}

TEST_CASE("printing") {
  CHECK(Poly().to_string() == "0");
  CHECK((x(0) * x(0) - Rational(3, 4) * x(5) + Poly::constant(2)).to_string() == "e1^2 - 3/4*t + 2");
  CHECK((-x(1) * x(2)).to_string() == "-e2*e3");
  CHECK((2 * Poly::variable(5, Coordinates::kFundamental)).to_string() == "2*w6");
}

TEST_CASE("graded lexicographic order") {
  Poly p = x(1) + x(0) * x(0) + x(0) + x(1) * x(1) + Poly::constant(1);
  auto ts = p.terms();
  REQUIRE(ts.size() == 5);
  CHECK(ts[0].first == Poly::Exponents{2, 0, 0, 0, 0, 0});
  CHECK(ts[1].first == Poly::Exponents{0, 2, 0, 0, 0, 0});
  CHECK(ts[2].first == Poly::Exponents{1, 0, 0, 0, 0, 0});
  CHECK(ts[3].first == Poly::Exponents{0, 1, 0, 0, 0, 0});
  CHECK(ts[4].first == Poly::Exponents{});
}

TEST_CASE("linear substitution") {
  LinearMap swap{};
  for (int i = 0; i < Poly::kVars; ++i) swap[i][i] = 1;
  swap[0][0] = 0;
  swap[1][1] = 0;
  swap[0][1] = 1;
  swap[1][0] = 1;
  Poly p = x(0) * x(0) * x(2) + 3 * x(1);
  CHECK(substitute_linear(p, swap, Coordinates::kEpsilon) == x(1) * x(1) * x(2) + 3 * x(0));

  LinearMap shift{};
  for (int i = 0; i < Poly::kVars; ++i) shift[i][i] = 1;
  shift[0][1] = 1;  // x0 -> x0 + x1
  CHECK(substitute_linear(x(0).pow(3), shift, Coordinates::kEpsilon) == (x(0) + x(1)).pow(3));

  LinearMap to_w{};
  for (int i = 0; i < Poly::kVars; ++i) to_w[i][i] = 1;
  CHECK(substitute_linear(x(2), to_w, Coordinates::kFundamental) == Poly::variable(2, Coordinates::kFundamental));
}

TEST_CASE("exact division") {
  std::mt19937_64 rng(2);
  std::array<Rational, Poly::kVars> form{1, -1, 0, Rational(1, 2), 0, 3};
  Poly l = Poly::linear(form);
  for (int i = 0; i < 10; ++i) {
    Poly q = random_poly(rng, 3, 7);
    CHECK(divide_exact(l * q, form) == q);
  }
  std::array<Rational, Poly::kVars> second{0, 0, 2, 0, 0, 0};
  CHECK(divide_exact(4 * (x(2) * x(2)), second) == 2 * x(2));
  CHECK_THROWS_AS(divide_exact(x(0) * x(0) + x(1), form), std::domain_error);
  CHECK_THROWS_AS(divide_exact(x(0), {}), std::domain_error);
  CHECK(divide_exact(Poly(), form).is_zero());
}
