#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gainlap/gain_graph.hpp"

namespace gainlap {

/// Dense row-major complex matrix. Indices are 0-based; vertex v maps to
/// row/column v - 1.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<Complex>& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  double max_abs() const;
  double frobenius_norm() const;
  double row_norm(std::size_t r) const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// max_ij |a_ij - b_ij|; throws DimensionMismatch on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);

/// Square matrix whose construction checks conjugate symmetry within 1e-12
/// and real diagonal. The stored entries are kept exactly as given.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(ComplexMatrix m);

  std::size_t size() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  ComplexMatrix m_;
};

// Hadamard-style magnitude used to scale determinant thresholds:
// prod_j max(1, ||row_j||).
double determinant_scale(const ComplexMatrix& m);

}  // namespace gainlap
