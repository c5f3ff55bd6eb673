#include "cayley/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cayley {

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<std::vector<Rational>> column_space_basis(const Matrix& m) {
  const auto ech = row_reduce(m);
  std::vector<std::vector<Rational>> basis;
  for (std::size_t p : ech.pivots) {
    std::vector<Rational> col(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m(r, p);
    basis.push_back(std::move(col));
  }
  return basis;
}

std::vector<std::vector<Rational>> null_space_basis(const Matrix& m) {
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols());
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto ech = row_reduce(std::move(aug));
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    const std::size_t p = ech.pivots[i];
    if (p == a.cols()) return std::nullopt;
    x[p] = ech.reduced(i, a.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  const auto ech = row_reduce(std::move(aug));
  if (ech.rank() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  return inv;
}

}  // namespace cayley
