#pragma once

// Sparse polynomials in six variables with exact rational coefficients.
//
// The variables are linear forms on the weight space of E6. Two coordinate
// systems are used: the ε-coordinates ε1..ε5, T (T is the weight whose
// scaled coordinate is 1, i.e. √3 ε6) and the fundamental coordinates
// ω1..ω6, in which every simple reflection moves a single variable.

#include "cayley/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cayley {

enum class Coordinates { kEpsilon, kFundamental };

class Poly {
 public:
  static constexpr int kVars = 6;
  static constexpr int kMaxDegree = 32;
  using Exponents = std::array<int, kVars>;

  explicit Poly(Coordinates c = Coordinates::kEpsilon) : coords_(c) {}

  static Poly constant(const Rational& c, Coordinates coords = Coordinates::kEpsilon);
  /// The i-th coordinate variable, 0-based.
  static Poly variable(int i, Coordinates coords = Coordinates::kEpsilon);
  static Poly monomial(const Exponents& e, const Rational& c, Coordinates coords = Coordinates::kEpsilon);
  /// Σ coeffs[i] · x_i.
  static Poly linear(const std::array<Rational, kVars>& coeffs, Coordinates coords = Coordinates::kEpsilon);

  Coordinates coordinates() const { return coords_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponents& e) const;
  /// Constant term.
  Rational constant_term() const { return coeff({}); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  /// Terms in graded-lexicographic order (highest first).
  std::vector<std::pair<Exponents, Rational>> terms() const;

  void add_term(const Exponents& e, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(int k) const;

  /// Variables are named e1..e5, t or w1..w6 by coordinate system.
  std::string to_string() const;

  // Packed exponent access for hot loops: 8 bits per variable.
  using Key = std::uint64_t;
  static Key pack(const Exponents& e);
  static Exponents unpack(Key k);
  const std::unordered_map<Key, Rational>& raw() const { return terms_; }

 private:
  void check_compatible(const Poly& o) const;

  Coordinates coords_;
  std::unordered_map<Key, Rational> terms_;
};

using LinearMap = std::array<std::array<Rational, Poly::kVars>, Poly::kVars>;

/// f(x) with x_j replaced by Σ_i images[j][i] y_i, in the `target` system.
Poly substitute_linear(const Poly& f, const LinearMap& images, Coordinates target);

/// f / ℓ for a nonzero linear form ℓ = Σ form[i] x_i. Throws
/// std::domain_error if ℓ does not divide f.
Poly divide_exact(const Poly& f, const std::array<Rational, Poly::kVars>& form);

}  // namespace cayley
