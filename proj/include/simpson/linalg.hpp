#pragma once

// Dense exact linear algebra over Scalar (a field once the entries share
// a radicand, or are all rational / all pi-compatible).

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "simpson/scalar.hpp"

namespace simpson {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

/// Determinant by exact Gaussian elimination.
inline Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      m.swap_rows(pivot, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

struct UniqueSolution {
  std::vector<Scalar> values;
};

/// The system has no solution. `certificate` y satisfies y^T A = 0 and
/// y^T b = `inconsistency` != 0; `rows` lists the equations it combines.
struct Infeasible {
  std::vector<Scalar> certificate;
  std::vector<std::size_t> rows;
  Scalar inconsistency;
  std::string description;
};

struct Underdetermined {
  std::vector<Scalar> particular;
  std::size_t nullity = 0;
};

using LinearSolveOutcome = std::variant<UniqueSolution, Infeasible, Underdetermined>;

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form of [A | b]
  Matrix transform;                 // T with T [A | b] = reduced
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form of `m`, eliminating only in the first
/// `elimination_cols` columns, with the accumulated row transform.
inline RowEchelon row_reduce(Matrix m, std::size_t elimination_cols) {
  const std::size_t rows = m.rows();
  Matrix t = Matrix::identity(rows);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < elimination_cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m(p, col).is_zero()) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);
    t.swap_rows(p, r);
    const Scalar inv = Scalar(1) / m(r, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= inv;
    for (std::size_t c = 0; c < t.cols(); ++c) t(r, c) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      const Scalar f = m(i, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) -= f * m(r, c);
      for (std::size_t c = 0; c < t.cols(); ++c) t(i, c) -= f * t(r, c);
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(m), std::move(t), std::move(pivots)};
}

/// Solves A x = b exactly. Infeasibility and rank deficiency are values.
inline LinearSolveOutcome solve_linear(const Matrix& a, const std::vector<Scalar>& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  RowEchelon ech = row_reduce(std::move(aug), n);
  const std::size_t rank = ech.pivots.size();
  for (std::size_t i = rank; i < a.rows(); ++i) {
    if (ech.reduced(i, n).is_zero()) continue;
    Infeasible out;
    for (std::size_t j = 0; j < a.rows(); ++j) {
      out.certificate.push_back(ech.transform(i, j));
      if (!ech.transform(i, j).is_zero()) out.rows.push_back(j);
    }
    out.inconsistency = ech.reduced(i, n);
    out.description = "a combination of " + std::to_string(out.rows.size()) + " equations reduces to 0 = " +
                      out.inconsistency.to_string();
    return out;
  }
  std::vector<Scalar> x(n, Scalar(0));
  for (std::size_t i = 0; i < rank; ++i) x[ech.pivots[i]] = ech.reduced(i, n);
  if (rank < n) return Underdetermined{std::move(x), n - rank};
  return UniqueSolution{std::move(x)};
}

}  // namespace simpson
