#pragma once

// Octonions and the exceptional Jordan algebra J3(O) over the rationals.
//
// The octonions are the split form, obtained by Cayley–Dickson doubling of
// the quaternions with (a,b)(c,d) = (ca + b̄d, bc + dā). Over C it becomes
// isomorphic to the complexified octonions, and unlike the compact form it
// has rational null vectors, so every identity about isotropic subspaces
// can be checked exactly.
//
// The matrix displays (cells, the part at infinity, ν2) write each entry
// product with its factors in the opposite order to the table used for the
// matrix square: "yx̄" in a display is evaluated as x̄·y. Read that way every
// cell point is rank one and the conditions at infinity are exactly those
// given by squaring the display. With the factors taken literally, the cell
// points are only the transposes of rank-one matrices.

#include "cayley/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cayley {

class Octonion {
 public:
  static constexpr int kDim = 8;

  Octonion() = default;
  explicit Octonion(std::array<Rational, kDim> c);
  static Octonion unit(int i);  // e_i, e_0 = 1
  static Octonion real(const Rational& r);

  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }

  Octonion conj() const;
  /// q(x) = x·x̄, a scalar.
  Rational norm() const;
  /// Polar form: q(x + y) − q(x) − q(y) = 2 inner(x, y).
  friend Rational polar(const Octonion& x, const Octonion& y);
  bool is_zero() const;
  bool is_real() const;

  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(const Rational& s);
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator*(const Rational& s, Octonion a) { return a *= s; }
  friend Octonion operator*(const Octonion& a, const Octonion& b);
  Octonion operator-() const;
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  std::array<Rational, kDim> c_{};
};

using OctMatrix3 = std::array<std::array<Octonion, 3>, 3>;

OctMatrix3 matrix_product(const OctMatrix3& a, const OctMatrix3& b);

/// [[c1, x3, x̄2], [x̄3, c2, x1], [x2, x̄1, c3]].
struct JordanMatrix {
  Rational c1, c2, c3;
  Octonion x1, x2, x3;

  OctMatrix3 matrix() const;
  /// Reads a Hermitian matrix with rational diagonal; nullopt otherwise.
  static std::optional<JordanMatrix> from_matrix(const OctMatrix3& m);
  static JordanMatrix identity();

  Rational trace() const { return c1 + c2 + c3; }
  friend bool operator==(const JordanMatrix&, const JordanMatrix&) = default;
};

/// ½(AB + BA).
JordanMatrix jordan_product(const JordanMatrix& a, const JordanMatrix& b);

/// trace(A∘B).
Rational trace_form(const JordanMatrix& a, const JordanMatrix& b);

/// X² = trace(X)·X, with X² the plain matrix square.
bool rank_one_check(const OctMatrix3& x);
bool rank_one_check(const JordanMatrix& x);

/// Entry product of the displays: display_product(a, b) = b·a.
Octonion display_product(const Octonion& a, const Octonion& b);

/// Points of the three affine cells: kind 1 has entry (1,1) = 1,
/// kind 2 has (2,2) = 1, kind 3 has (3,3) = 1.
OctMatrix3 cell_point(int kind, const Octonion& a, const Octonion& b);

/// [[0, x3, x2], [x̄3, 0, x1], [x̄2, x̄1, 0]], the display of the
/// complement of the three cells.
OctMatrix3 infinity_point(const Octonion& x1, const Octonion& x2, const Octonion& x3);

/// q(x_i) = 0 and x2x̄3 = x1x3 = x̄1x2 = 0, products read as in the displays.
/// Equivalent to the display squaring to zero.
bool infinity_conditions(const Octonion& x1, const Octonion& x2, const Octonion& x3);

/// The same conditions with every product taken literally in the table.
bool infinity_conditions_literal(const Octonion& x1, const Octonion& x2, const Octonion& x3);

enum class Side { kLeft, kRight };

/// Basis of z·O (left) or O·z (right). Throws std::invalid_argument unless
/// z is a nonzero null vector.
std::vector<Octonion> mult_image(const Octonion& z, Side side);

/// Kernel of y ↦ z·y (left) or y ↦ y·z (right).
std::vector<Octonion> mult_kernel(const Octonion& z, Side side);

/// 2×2 Hermitian octonionic matrix [[c1, z], [z̄, c2]].
struct Jordan2 {
  Rational c1, c2;
  Octonion z;
  /// c1·c2 − q(z).
  Rational det() const { return c1 * c2 - z.norm(); }
  bool is_zero() const { return sgn(c1) == 0 && sgn(c2) == 0 && z.is_zero(); }
  friend bool operator==(const Jordan2&, const Jordan2&) = default;
};

/// [[x x̄, x ȳ], [y x̄, y ȳ]], products read as in the displays.
Jordan2 nu2(const Octonion& x, const Octonion& y);

/// Basis of the image of the differential of ν2 at (x, y), each vector
/// written as a Jordan2.
std::vector<Jordan2> nu2_tangent_image(const Octonion& x, const Octonion& y);

/// Random rational octonion with small numerators and denominators.
Octonion random_octonion(std::mt19937_64& rng);

/// Outcome of the randomized property checks; every count refers to
/// individual samples.
struct JordanSelftest {
  std::uint64_t seed = 0;
  int composition_samples = 0, composition_passed = 0;
  int alternative_samples = 0, alternative_passed = 0;
  int cell_samples = 0, cell_passed = 0;
  int jordan_samples = 0, jordan_passed = 0;
  int image_samples = 0, image_passed = 0;
  int nu2_samples = 0, nu2_passed = 0;
  // Points of the display at infinity: the rank-one test compared with the
  // conditions read as in the displays, and read literally.
  int infinity_samples = 0, infinity_agree = 0, infinity_agree_literal = 0;
  bool passed() const;
};

/// Runs every randomized property with `samples` draws each (the
/// subspace checks use a tenth of that).
JordanSelftest run_jordan_selftest(std::uint64_t seed, int samples = 1000);

}  // namespace cayley
