#pragma once

// Schubert-basis Chow ring of the Cayley plane.
//
// The hyperplane action is combinatorial (Pieri/Chevalley: path counts in
// the Hasse diagram). Everything else is pinned down by three geometric
// products (the octonionic line squares to a point, and cuts the two
// codimension-4 classes in the dual classes), a nonnegative-integer search
// for the three codimension-4 squares, and Poincaré duality.

#include "cayley/minuscule.hpp"
#include "cayley/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayley {

/// Finitely supported rational combination of Schubert classes, stored
/// densely over the node ids of a diagram.
class ChowClass {
 public:
  ChowClass() = default;
  explicit ChowClass(std::size_t nodes) : c_(nodes) {}
  static ChowClass basis(std::size_t nodes, NodeId id, const Rational& coeff = 1);

  std::size_t size() const { return c_.size(); }
  const Rational& operator[](NodeId id) const { return c_.at(id); }
  Rational& operator[](NodeId id) { return c_.at(id); }

  ChowClass& operator+=(const ChowClass& o);
  ChowClass& operator-=(const ChowClass& o);
  ChowClass& operator*=(const Rational& s);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(const Rational& s, ChowClass a) { return a *= s; }
  friend bool operator==(const ChowClass& a, const ChowClass& b) { return a.c_ == b.c_; }

  bool is_zero() const;
  std::vector<NodeId> support() const;
  /// Common length of the support; nullopt for zero or mixed classes.
  std::optional<int> grade(const WeightDiagram& d) const;
  bool is_integral() const;

 private:
  std::vector<Rational> c_;
};

/// "s8 + 3*s8p + 2*s8pp", "-3/4*s2", "0".
std::string format_class(const ChowClass& c, const WeightDiagram& d);

/// σ_w · H^k = Σ κ(w,v) σ_v over v with l(v) = l(w) + k.
ChowClass pieri_hk(const WeightDiagram& d, NodeId w, int k);
ChowClass pieri_hk(const WeightDiagram& d, const ChowClass& c, int k);

/// κ(w, bottom).
std::uint64_t schubert_degree(const WeightDiagram& d, NodeId w);

/// ∫ c · H^{dim}: Σ_w c_w · deg σ_w.
Rational degree(const WeightDiagram& d, const ChowClass& c);

/// Σ a_w b_{w*}. Throws std::invalid_argument unless both classes are
/// homogeneous with complementary grades (a zero class matches any grade).
Rational poincare_pairing(const WeightDiagram& d, const ChowClass& a, const ChowClass& b);

/// Exponents of H, σ4', σ8 in a monomial of the generators.
struct GenMonomial {
  int h = 0;
  int s4 = 0;
  int s8 = 0;
  int degree() const { return h + 4 * s4 + 8 * s8; }
  friend auto operator<=>(const GenMonomial&, const GenMonomial&) = default;
  friend GenMonomial operator+(GenMonomial a, const GenMonomial& b) {
    return {a.h + b.h, a.s4 + b.s4, a.s8 + b.s8};
  }
};
using GenPoly = std::map<GenMonomial, Rational>;
std::string format_gen_poly(const GenPoly& p);

/// Product σ_left · σ_right = σ_result, by class name.
struct AxiomProduct {
  std::string left;
  std::string right;
  std::string result;
};

/// Geometric input: two generic octonionic lines meet in a point; the
/// non-extendable / extendable P^4 arguments give σ4'σ8 and σ4''σ8.
struct GeometricAxioms {
  std::vector<AxiomProduct> products = {
      {"s8", "s8", "s16"},
      {"s4p", "s8", "s12p"},
      {"s4pp", "s8", "s12pp"},
  };
};

/// Unknowns of the degree-4 products
///   (σ4')² = Σ μ_i b_i, (σ4'')² = Σ ν_i b_i, σ4'σ4'' = Σ γ_i b_i
/// over the codimension-8 basis b = (s8, s8p, s8pp), and the Diophantine
/// line a1 γ1 + a2 γ2 = c they satisfy.
struct QuarticResolution {
  std::array<Integer, 3> pieri_s4p;   // σ4'·H^4 coefficients
  std::array<Integer, 3> pieri_s4pp;  // σ4''·H^4 coefficients
  std::array<Integer, 3> mu;
  std::array<Integer, 3> nu;
  std::array<Integer, 3> gamma;
  Integer a1, a2, c;
  std::vector<std::array<Integer, 2>> line_points;  // nonnegative integer points
  std::vector<std::array<Integer, 2>> admissible;   // those with μ, ν ≥ 0
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
class Solver;
}

class StructureTable {
 public:
  const WeightDiagram& diagram() const { return d_; }

  /// σ_u · σ_v; the zero class when l(u) + l(v) exceeds the dimension.
  const ChowClass& product(NodeId u, NodeId v) const { return table_.at(u).at(v); }

  /// σ_u written as a polynomial in H, σ4', σ8.
  const GenPoly& generation(NodeId u) const { return generation_.at(u); }

  const QuarticResolution& resolution() const { return resolution_; }

  /// ∫ of a top-degree generator monomial.
  const Rational& integral(const GenMonomial& m) const;

 private:
  friend class detail::Solver;
  explicit StructureTable(WeightDiagram d) : d_(std::move(d)) {}

  WeightDiagram d_;
  std::vector<std::vector<ChowClass>> table_;
  std::vector<GenPoly> generation_;
  std::map<GenMonomial, Rational> integrals_;
  QuarticResolution resolution_;
};

/// Derives the full multiplication table. Throws SolverError when the
/// constraints have no solution, several solutions, or the completed table
/// fails integrality, nonnegativity or the axioms.
StructureTable solve_structure_constants(const WeightDiagram& d, const GeometricAxioms& axioms = {});

/// Bilinear extension of the table. Products landing above the top grade
/// are dropped and reported through `grade_overflow`.
ChowClass multiply(const ChowClass& a, const ChowClass& b, const StructureTable& t,
                   bool* grade_overflow = nullptr);

/// Point-class coefficient of a·b. Throws std::invalid_argument unless the
/// grades sum to the dimension.
Rational pairing(const ChowClass& a, const ChowClass& b, const StructureTable& t);

}  // namespace cayley
