#include "gainlap/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gainlap/errors.hpp"

namespace gainlap {

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw GainError(ErrorCode::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = std::conj((*this)(r, c));
  return t;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double ComplexMatrix::max_abs() const {
  double best = 0.0;
  for (const auto& z : data_) best = std::max(best, std::abs(z));
  return best;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

double ComplexMatrix::row_norm(std::size_t r) const {
  double sum = 0.0;
  for (std::size_t c = 0; c < cols_; ++c) sum += std::norm((*this)(r, c));
  return std::sqrt(sum);
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw GainError(ErrorCode::DimensionMismatch,
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                        "x" + std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw GainError(ErrorCode::DimensionMismatch, "inner dimensions " + std::to_string(a.cols()) + " and " +
                                                      std::to_string(b.rows()) + " differ");
  }
  ComplexMatrix out(a.rows(), b.cols());
  // Fixed summation order per entry keeps results reproducible.
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex left = a(r, k);
      if (left == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += left * b(k, c);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& z : out.data_) z *= s;
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double best = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) best = std::max(best, std::abs(a(r, c) - b(r, c)));
  return best;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (std::abs(m(r, r).imag()) > tol) return false;
    for (std::size_t c = r + 1; c < m.cols(); ++c) {
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
    }
  }
  return true;
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (!is_hermitian(m_)) throw GainError(ErrorCode::NotHermitian, "matrix is not Hermitian within 1e-12");
}

double determinant_scale(const ComplexMatrix& m) {
  double scale = 1.0;
  for (std::size_t r = 0; r < m.rows(); ++r) scale *= std::max(1.0, m.row_norm(r));
  return scale;
}

}  // namespace gainlap
