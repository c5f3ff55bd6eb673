#pragma once

// Borel presentation: the Chow ring as W0-invariant polynomials on the
// weight space modulo positive-degree W-invariants. The Schubert
// coefficient of an invariant f on σ_w is the constant obtained by applying
// divided differences along a reduced word of w.
//
// Two routes compute these coefficients. The literal route reflects,
// subtracts and divides exactly, one operator at a time. The functional
// route precomputes, for every node, the coefficient functional on the
// monomial basis in fundamental coordinates; building it checks that all
// chains in the Hasse diagram give the same functional.

#include "cayley/chow_ring.hpp"
#include "cayley/minuscule.hpp"
#include "cayley/poly.hpp"

#include <map>
#include <utility>
#include <stdexcept>
#include <vector>

namespace cayley {

/// A reduced word i1..ik of node w (as returned by WeightDiagram) is read
/// from the node up to the top; ∂_{ik}, the letter next to the top, acts
/// first.
inline constexpr bool kFirstLetterAppliedLast = true;

class BorelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The linear form of a weight in ε-coordinates: Σ c_j ε_j + u·T.
Poly linear_form(const Weight& w);

/// α_i as a linear form in the given coordinates.
Poly simple_root_form(int i, Coordinates coords);

/// Substitution induced by the simple reflection s_i on the variables.
Poly reflect_poly(int i, const Poly& f);

/// (f − s_i f) / α_i. Throws BorelError if the division is not exact.
Poly divided_diff(int i, const Poly& f);

/// Divided differences along a word, oriented by kFirstLetterAppliedLast.
Poly divided_diff_word(const std::vector<int>& word, const Poly& f);

/// Closed form of ∂_i in fundamental coordinates, where s_i only moves ω_i:
/// ∂_i(ω_i^a M) = M Σ_k ω_i^k (s_i ω_i)^(a-1-k).
Poly divided_diff_fundamental(int i, const Poly& f);

/// Rewrites an ε-coordinate polynomial in fundamental coordinates.
Poly to_fundamental(const Poly& f);

struct InvariantGenerators {
  Poly e2, e4, e5, e6, e8;
  /// e_k for k in {0, 2, 4, 5, 6, 8, 10}, with e0 = 1 and e10 = e5².
  Poly e(int k) const;
};

/// e_{2i}: elementary symmetric functions of ε1², …, ε5²; e5 = ε1⋯ε5.
InvariantGenerators invariant_generators();

/// Σ ε_j² + T²/3, the W-invariant quadratic form.
Poly w_invariant_quadratic();

/// Fixed by s1..s5.
bool is_w0_invariant(const Poly& f);

/// Schubert expansion of a homogeneous W0-invariant of degree at most the
/// dimension, by the literal route. Throws std::invalid_argument for
/// inhomogeneous, too large or non-invariant input.
ChowClass expand_invariant(const Poly& f, const WeightDiagram& d);

/// Invariant polynomials (ε-coordinates) whose expansions are single
/// Schubert classes.
struct SchubertRepresentatives {
  Poly h, s4p, s4pp, s8, s8p, s8pp;
};
SchubertRepresentatives schubert_representatives(const WeightDiagram& d);

/// Coefficient functionals of all nodes on the monomial basis of the
/// matching degree in fundamental coordinates.
class CoefficientFunctionals {
 public:
  struct Report {
    std::size_t nodes = 0;
    std::size_t segments = 0;          // pairs (u, w) with u above w
    std::size_t edge_comparisons = 0;  // functionals compared across down-edges
    std::size_t monomials = 0;         // basis monomials evaluated
    std::size_t word_pairs = 0;        // reduced-word pairs covered (capped per node)
  };

  /// Throws BorelError if two chains between the same nodes disagree.
  explicit CoefficientFunctionals(const WeightDiagram& d, std::size_t word_cap = 100);

  /// φ_w(f) for f homogeneous of degree l(w) in fundamental coordinates.
  Rational coefficient(NodeId w, const Poly& f) const;
  /// Σ_w φ_w(f) σ_w over the level of deg f; f in fundamental coordinates.
  ChowClass expand(const Poly& f) const;
  /// Like expand(f · ω6^shift) without forming the product.
  ChowClass expand_shifted(const Poly& f, int shift) const;

  /// φ_w on the monomial of the given rank (see monomial_rank).
  const Integer& value(NodeId w, std::size_t rank) const { return top_.at(w).at(rank); }
  const Report& report() const { return report_; }
  std::size_t size() const { return nodes_; }

 private:
  std::size_t nodes_ = 0;
  std::vector<int> length_;
  std::vector<std::vector<NodeId>> levels_;
  std::vector<std::vector<Integer>> top_;
  Report report_;
};

/// The functional f ↦ divided_diff_word(word, f) on monomials of degree
/// word.size() in fundamental coordinates, indexed by monomial_rank; built
/// with the closed form of divided_diff_fundamental.
std::vector<Integer> word_functional(const std::vector<int>& word);

/// Position of a monomial among all monomials of its degree.
std::size_t monomial_rank(const Poly::Exponents& e);
/// Number of monomials of degree k in six variables.
std::size_t monomial_count(int k);

/// Multiplication of Schubert classes through polynomial representatives.
class BorelEngine {
 public:
  /// Uses the generation of each class by h, s4p, s8 from the table.
  /// Throws BorelError if a representative does not expand to its class.
  explicit BorelEngine(const StructureTable& t);

  const WeightDiagram& diagram() const { return d_; }
  const CoefficientFunctionals& functionals() const { return functionals_; }
  const SchubertRepresentatives& representatives() const { return reps_; }

  /// Expansion of a homogeneous W0-invariant (either coordinate system).
  ChowClass expand(const Poly& f) const;

  /// Representative of σ_u in fundamental coordinates.
  Poly representative(NodeId u) const;

  /// σ_u σ_v, from cached expansions of generator monomials.
  ChowClass multiply(NodeId u, NodeId v) const;
  ChowClass multiply(const ChowClass& a, const ChowClass& b) const;
  /// σ_u σ_v by multiplying the two representatives outright.
  ChowClass multiply_direct(NodeId u, NodeId v) const;

 private:
  WeightDiagram d_;
  CoefficientFunctionals functionals_;
  SchubertRepresentatives reps_;
  std::vector<GenPoly> generation_;
  std::map<std::pair<int, int>, Poly> powers_;  // s4p^b * s8^c
  std::map<GenMonomial, ChowClass> monomial_expansions_;
};

}  // namespace cayley
