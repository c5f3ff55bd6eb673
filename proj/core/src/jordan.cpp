#include "cayley/jordan.hpp"

#include "cayley/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cayley {

namespace {

using Quat = std::array<Rational, 4>;

Quat qmul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Quat qadd(const Quat& a, const Quat& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }

Quat half(const Octonion& x, int h) { return {x[4 * h], x[4 * h + 1], x[4 * h + 2], x[4 * h + 3]}; }

Octonion join(const Quat& a, const Quat& b) {
  return Octonion({a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]});
}

Matrix multiplication_matrix(const Octonion& z, Side side) {
  Matrix m(Octonion::kDim, Octonion::kDim);
  for (int k = 0; k < Octonion::kDim; ++k) {
    Octonion col = side == Side::kLeft ? z * Octonion::unit(k) : Octonion::unit(k) * z;
    for (int r = 0; r < Octonion::kDim; ++r) m(r, k) = col[r];
  }
  return m;
}

Octonion from_vector(const std::vector<Rational>& v) {
  std::array<Rational, Octonion::kDim> c;
  for (int i = 0; i < Octonion::kDim; ++i) c[i] = v.at(i);
  return Octonion(c);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

// (a, a·p²/N(p)) is null: N(p²/N(p)) = 1.
Octonion random_null_octonion(std::mt19937_64& rng) {
  for (;;) {
    Octonion x = random_octonion(rng);
    Octonion p = random_octonion(rng);
    Quat a = half(x, 0);
    Quat pq = half(p, 0);
    Rational n = pq[0] * pq[0] + pq[1] * pq[1] + pq[2] * pq[2] + pq[3] * pq[3];
    if (sgn(n) == 0) continue;
    Quat u = qmul(pq, pq);
    for (auto& v : u) v /= n;
    Octonion z = join(a, qmul(a, u));
    if (!z.is_zero()) return z;
  }
}

Octonion random_combination(const std::vector<Octonion>& basis, std::mt19937_64& rng) {
  Octonion out;
  for (const auto& b : basis) out += random_rational(rng) * b;
  return out;
}

std::vector<Octonion> common_kernel(const std::vector<std::pair<Octonion, Side>>& maps) {
  Matrix m(Octonion::kDim * maps.size(), Octonion::kDim);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    Matrix part = multiplication_matrix(maps[i].first, maps[i].second);
    for (int r = 0; r < Octonion::kDim; ++r)
      for (int c = 0; c < Octonion::kDim; ++c) m(i * Octonion::kDim + r, c) = part(r, c);
  }
  std::vector<Octonion> out;
  for (const auto& v : null_space_basis(m)) out.push_back(from_vector(v));
  return out;
}

Rational det_polar(const Jordan2& a, const Jordan2& b) {
  Jordan2 s{a.c1 + b.c1, a.c2 + b.c2, a.z + b.z};
  return s.det() - a.det() - b.det();
}

bool totally_isotropic(const std::vector<Octonion>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (sgn(basis[i].norm()) != 0) return false;
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (sgn(polar(basis[i], basis[j])) != 0) return false;
  }
  return true;
}

}  // namespace

Octonion::Octonion(std::array<Rational, kDim> c) : c_(std::move(c)) {
  for (auto& x : c_) x.canonicalize();
}

Octonion Octonion::unit(int i) {
  Octonion o;
  o.c_.at(i) = 1;
  return o;
}

Octonion Octonion::real(const Rational& r) {
  Octonion o;
  o.c_[0] = r;
  return o;
}

Octonion Octonion::conj() const {
  Octonion o = -*this;
  o.c_[0] = c_[0];
  return o;
}

Rational Octonion::norm() const {
  Rational n = 0;
  for (int i = 0; i < 4; ++i) n += c_[i] * c_[i];
  for (int i = 4; i < 8; ++i) n -= c_[i] * c_[i];
  return n;
}

Rational polar(const Octonion& x, const Octonion& y) {
  Rational n = 0;
  for (int i = 0; i < 4; ++i) n += x.c_[i] * y.c_[i];
  for (int i = 4; i < 8; ++i) n -= x.c_[i] * y.c_[i];
  return n;
}

bool Octonion::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Octonion::is_real() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Octonion& Octonion::operator+=(const Octonion& o) {
  for (int i = 0; i < kDim; ++i) c_[i] += o.c_[i];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  for (int i = 0; i < kDim; ++i) c_[i] -= o.c_[i];
  return *this;
}

Octonion& Octonion::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Octonion Octonion::operator-() const {
  Octonion o = *this;
  for (auto& x : o.c_) x = -x;
  return o;
}

Octonion operator*(const Octonion& x, const Octonion& y) {
  Quat a = half(x, 0), b = half(x, 1), c = half(y, 0), d = half(y, 1);
  return join(qadd(qmul(c, a), qmul(qconj(b), d)), qadd(qmul(b, c), qmul(d, qconj(a))));
}

std::string Octonion::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < kDim; ++i) os << (i ? "," : "") << cayley::to_string(c_[i]);
  os << ")";
  return os.str();
}

OctMatrix3 matrix_product(const OctMatrix3& a, const OctMatrix3& b) {
  OctMatrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

OctMatrix3 JordanMatrix::matrix() const {
  return {{{Octonion::real(c1), x3, x2.conj()},
           {x3.conj(), Octonion::real(c2), x1},
           {x2, x1.conj(), Octonion::real(c3)}}};
}

std::optional<JordanMatrix> JordanMatrix::from_matrix(const OctMatrix3& m) {
  for (int i = 0; i < 3; ++i) {
    if (!m[i][i].is_real()) return std::nullopt;
    for (int j = i + 1; j < 3; ++j)
      if (m[j][i] != m[i][j].conj()) return std::nullopt;
  }
  return JordanMatrix{m[0][0][0], m[1][1][0], m[2][2][0], m[1][2], m[2][0], m[0][1]};
}

JordanMatrix JordanMatrix::identity() { return {1, 1, 1, {}, {}, {}}; }

JordanMatrix jordan_product(const JordanMatrix& a, const JordanMatrix& b) {
  OctMatrix3 ab = matrix_product(a.matrix(), b.matrix());
  OctMatrix3 ba = matrix_product(b.matrix(), a.matrix());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ab[i][j] = Rational(1, 2) * (ab[i][j] + ba[i][j]);
  auto out = JordanMatrix::from_matrix(ab);
  if (!out) throw std::logic_error("symmetrized product is not Hermitian");
  return *out;
}

Rational trace_form(const JordanMatrix& a, const JordanMatrix& b) { return jordan_product(a, b).trace(); }

bool rank_one_check(const OctMatrix3& x) {
  Rational tr = x[0][0][0] + x[1][1][0] + x[2][2][0];
  OctMatrix3 sq = matrix_product(x, x);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (sq[i][j] != tr * x[i][j]) return false;
  return true;
}

bool rank_one_check(const JordanMatrix& x) { return rank_one_check(x.matrix()); }

Octonion display_product(const Octonion& a, const Octonion& b) { return b * a; }

OctMatrix3 cell_point(int kind, const Octonion& a, const Octonion& b) {
  const Octonion one = Octonion::real(1);
  auto m = [](const Octonion& p, const Octonion& q) { return display_product(p, q); };
  switch (kind) {
    case 1: {
      const Octonion &x = a, &y = b;
      return {{{one, x, y}, {x.conj(), m(x, x.conj()), m(y, x.conj())}, {y.conj(), m(x, y.conj()), m(y, y.conj())}}};
    }
    case 2: {
      const Octonion &u = a, &v = b;
      return {{{m(u.conj(), u), u, m(v, u)}, {u.conj(), one, v}, {m(u.conj(), v.conj()), v.conj(), m(v, v.conj())}}};
    }
    case 3: {
      const Octonion &s = a, &t = b;
      return {{{m(t.conj(), t), m(s.conj(), t), t}, {m(t.conj(), s), m(s.conj(), s), s}, {t.conj(), s.conj(), one}}};
    }
    default:
      throw std::invalid_argument("cell kind must be 1, 2 or 3");
  }
}

OctMatrix3 infinity_point(const Octonion& x1, const Octonion& x2, const Octonion& x3) {
  return {{{Octonion(), x3, x2}, {x3.conj(), Octonion(), x1}, {x2.conj(), x1.conj(), Octonion()}}};
}

namespace {

template <class Mul>
bool infinity_equations(const Octonion& x1, const Octonion& x2, const Octonion& x3, Mul mul) {
  return sgn(x1.norm()) == 0 && sgn(x2.norm()) == 0 && sgn(x3.norm()) == 0 && mul(x2, x3.conj()).is_zero() &&
         mul(x1, x3).is_zero() && mul(x1.conj(), x2).is_zero();
}

}  // namespace

bool infinity_conditions(const Octonion& x1, const Octonion& x2, const Octonion& x3) {
  return infinity_equations(x1, x2, x3, display_product);
}

bool infinity_conditions_literal(const Octonion& x1, const Octonion& x2, const Octonion& x3) {
  return infinity_equations(x1, x2, x3, [](const Octonion& a, const Octonion& b) { return a * b; });
}

std::vector<Octonion> mult_image(const Octonion& z, Side side) {
  if (z.is_zero() || sgn(z.norm()) != 0) throw std::invalid_argument("mult_image needs a nonzero null octonion");
  std::vector<Octonion> out;
  for (const auto& v : column_space_basis(multiplication_matrix(z, side))) out.push_back(from_vector(v));
  return out;
}

std::vector<Octonion> mult_kernel(const Octonion& z, Side side) { return common_kernel({{z, side}}); }

Jordan2 nu2(const Octonion& x, const Octonion& y) { return {x.norm(), y.norm(), display_product(x, y.conj())}; }

std::vector<Jordan2> nu2_tangent_image(const Octonion& x, const Octonion& y) {
  Matrix jac(2 + Octonion::kDim, 2 * Octonion::kDim);
  for (int k = 0; k < 2 * Octonion::kDim; ++k) {
    Jordan2 d;
    Octonion e = Octonion::unit(k % Octonion::kDim);
    if (k < Octonion::kDim) {
      d = {2 * polar(x, e), 0, display_product(e, y.conj())};
    } else {
      d = {0, 2 * polar(y, e), display_product(x, e.conj())};
    }
    jac(0, k) = d.c1;
    jac(1, k) = d.c2;
    for (int r = 0; r < Octonion::kDim; ++r) jac(2 + r, k) = d.z[r];
  }
  std::vector<Jordan2> out;
  for (const auto& v : column_space_basis(jac)) {
    std::vector<Rational> z(v.begin() + 2, v.end());
    out.push_back({v[0], v[1], from_vector(z)});
  }
  return out;
}

Octonion random_octonion(std::mt19937_64& rng) {
  std::array<Rational, Octonion::kDim> c;
  for (auto& x : c) x = random_rational(rng);
  return Octonion(c);
}

bool JordanSelftest::passed() const {
  return composition_passed == composition_samples && alternative_passed == alternative_samples &&
         cell_passed == cell_samples && jordan_passed == jordan_samples && image_passed == image_samples &&
         nu2_passed == nu2_samples && infinity_agree == infinity_samples;
}

JordanSelftest run_jordan_selftest(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  JordanSelftest r;
  r.seed = seed;
  const int small = std::max(1, samples / 10);

  for (int i = 0; i < samples; ++i) {
    Octonion a = random_octonion(rng), b = random_octonion(rng);
    ++r.composition_samples;
    if ((a * b).norm() == a.norm() * b.norm()) ++r.composition_passed;
  }

  for (int i = 0; i < samples; ++i) {
    Octonion x = random_octonion(rng), y = random_octonion(rng);
    ++r.alternative_samples;
    if (x * (x * y) == (x * x) * y && (y * x) * x == y * (x * x) && (x * y) * x == x * (y * x)) ++r.alternative_passed;
  }

  for (int i = 0; i < samples; ++i) {
    Octonion a = random_octonion(rng), b = random_octonion(rng);
    ++r.cell_samples;
    if (rank_one_check(cell_point(1 + i % 3, a, b))) ++r.cell_passed;
  }

  auto random_jordan = [&] {
    return JordanMatrix{random_rational(rng), random_rational(rng), random_rational(rng),
                        random_octonion(rng),  random_octonion(rng),  random_octonion(rng)};
  };
  for (int i = 0; i < small; ++i) {
    JordanMatrix a = random_jordan(), b = random_jordan(), c = random_jordan();
    ++r.jordan_samples;
    if (jordan_product(a, b) == jordan_product(b, a) &&
        trace_form(jordan_product(a, b), c) == trace_form(a, jordan_product(b, c)) &&
        jordan_product(JordanMatrix::identity(), a) == a)
      ++r.jordan_passed;
  }

  for (int i = 0; i < small; ++i) {
    Octonion z = random_null_octonion(rng);
    ++r.image_samples;
    bool ok = true;
    for (Side side : {Side::kLeft, Side::kRight}) {
      auto image = mult_image(z, side);
      ok = ok && image.size() == 4 && totally_isotropic(image) && mult_kernel(z, side).size() == 4;
    }
    if (ok) ++r.image_passed;
  }

  for (int i = 0; i < small; ++i) {
    Octonion x = random_null_octonion(rng);
    // ν2(x, y) = 0 needs ȳ·x = 0, i.e. ȳ in the kernel of right multiplication by x.
    Octonion y = random_combination(mult_kernel(x, Side::kRight), rng).conj();
    ++r.nu2_samples;
    auto image = nu2_tangent_image(x, y);
    bool ok = nu2(x, y).is_zero() && image.size() == 5;
    for (std::size_t a = 0; ok && a < image.size(); ++a) {
      ok = sgn(image[a].det()) == 0;
      for (std::size_t b = a + 1; ok && b < image.size(); ++b) ok = sgn(det_polar(image[a], image[b])) == 0;
    }
    if (ok) ++r.nu2_passed;
  }

  for (int i = 0; i < small; ++i) {
    Octonion x1 = random_null_octonion(rng), x2, x3;
    switch (i % 3) {
      case 0:  // x3·x1 = x2·x̄1 = x̄3·x2 = 0
        x3 = random_combination(mult_kernel(x1, Side::kRight), rng);
        x2 = random_combination(common_kernel({{x1.conj(), Side::kRight}, {x3.conj(), Side::kLeft}}), rng);
        break;
      case 1:  // x1·x3 = x̄1·x2 = x2·x̄3 = 0
        x3 = random_combination(mult_kernel(x1, Side::kLeft), rng);
        x2 = random_combination(common_kernel({{x1.conj(), Side::kLeft}, {x3.conj(), Side::kRight}}), rng);
        break;
      default:
        x2 = random_null_octonion(rng);
        x3 = random_null_octonion(rng);
        break;
    }
    bool rank_one = rank_one_check(infinity_point(x1, x2, x3));
    ++r.infinity_samples;
    if (rank_one == infinity_conditions(x1, x2, x3)) ++r.infinity_agree;
    if (rank_one == infinity_conditions_literal(x1, x2, x3)) ++r.infinity_agree_literal;
  }
  return r;
}

}  // namespace cayley
