#pragma once

// Dense exact linear algebra over Q. Sizes here never exceed a few dozen,
// so everything is plain Gaussian elimination.

#include "cayley/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cayley {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  static Matrix identity(std::size_t n);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of the column space, as columns of `m` selected at pivot positions.
std::vector<std::vector<Rational>> column_space_basis(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> null_space_basis(const Matrix& m);

/// Some solution x of A x = b (free variables set to zero), or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace cayley
