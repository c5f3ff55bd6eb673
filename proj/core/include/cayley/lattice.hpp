#pragma once

// E6 root and weight lattice in exact coordinates.
//
// A weight is stored as (c1..c5; u): the true vector is
//   c1 ε1 + ... + c5 ε5 + u·√3 ε6,
// so every lattice point has rational coordinates and the Gram matrix
// is diag(1,1,1,1,1,3).

#include "cayley/rational.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace cayley {

class Weight {
 public:
  static constexpr std::size_t kDim = 6;
  /// Index of the scaled sixth coordinate.
  static constexpr std::size_t kScaled = 5;

  Weight() = default;
  explicit Weight(std::array<Rational, kDim> coords) : c_(std::move(coords)) {
    for (auto& x : c_) x.canonicalize();
  }

  /// Weight with a single unit coordinate (ε1..ε5 for i < 5, √3 ε6 for i == 5).
  static Weight unit(std::size_t i);

  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& s);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  Weight operator-() const;

  friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
  friend bool operator<(const Weight& a, const Weight& b);

  bool is_zero() const;

  /// e.g. "(1/2,1/2,1/2,1/2,1/2; 1/6)"
  std::string to_string() const;

  std::size_t hash() const;

 private:
  std::array<Rational, kDim> c_;
};

/// ⟨x,y⟩ = Σ x_i y_i + 3 u_x u_y.
Rational inner(const Weight& x, const Weight& y);

/// A simply-laced root system realized inside the ε-lattice. Simple roots
/// are indexed 1..rank in every public call.
class RootSystem {
 public:
  RootSystem(std::string name, std::vector<Weight> simple_roots);

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(simple_.size()); }

  const Weight& simple_root(int i) const;
  const Weight& fundamental_weight(int i) const;
  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Weight>& fundamental_weights() const { return fundamental_; }

  /// cartan()[i][j] = ⟨α_{i+1}, α_{j+1}⟩.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  /// w − ⟨w, α_i⟩ α_i. Throws std::out_of_range for i outside 1..rank.
  Weight reflect(int i, const Weight& w) const;

  /// Sum of the fundamental weights.
  const Weight& rho() const { return rho_; }

  /// ⟨ρ, w⟩.
  Rational height(const Weight& w) const;

  /// Reduced word of the longest element w0, as found by descending from ρ.
  /// Applying reflect() in this order to a weight computes w0 · weight.
  const std::vector<int>& longest_word() const { return longest_word_; }
  Weight apply_longest(const Weight& w) const;

 private:
  std::string name_;
  std::vector<Weight> simple_;
  std::vector<Weight> fundamental_;
  std::vector<std::vector<int>> cartan_;
  Weight rho_;
  std::vector<int> longest_word_;
};

/// E6 with the labeling α1 = ε1−ε2, α2 = ε2−ε3, α3 = ε3−ε4, α4 = ε4−ε5,
/// α5 = ε4+ε5, α6 = −½(ε1+…+ε5) + (√3/2) ε6.
RootSystem build_e6();

/// The D5 Levi subsystem spanned by α1..α5 of build_e6().
RootSystem build_d5();

}  // namespace cayley

template <>
struct std::hash<cayley::Weight> {
  std::size_t operator()(const cayley::Weight& w) const noexcept { return w.hash(); }
};
