#include "gainlap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gainlap/errors.hpp"
#include "gainlap/forests.hpp"
#include "gainlap/laplacian.hpp"

namespace gainlap {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q) sum += std::norm(a(p, q));
  return std::sqrt(2.0 * sum);
}

// Zeroes a(p, q) with a unitary similarity: a phase on column/row q makes the
// pivot real, then a plane rotation annihilates it.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const std::size_t n = a.rows();
  const Complex apq = a(p, q);
  const double magnitude = std::abs(apq);
  if (magnitude == 0.0) return;
  const Complex phase = apq / magnitude;

  for (std::size_t k = 0; k < n; ++k) {
    a(k, q) *= std::conj(phase);
    v(k, q) *= std::conj(phase);
  }
  for (std::size_t k = 0; k < n; ++k) a(q, k) *= phase;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * magnitude);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (!std::isfinite(theta * theta)) t = 0.5 / std::abs(theta);
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex kp = a(k, p);
    const Complex kq = a(k, q);
    a(k, p) = c * kp - s * kq;
    a(k, q) = s * kp + c * kq;
    const Complex vp = v(k, p);
    const Complex vq = v(k, q);
    v(k, p) = c * vp - s * vq;
    v(k, q) = s * vp + c * vq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex pk = a(p, k);
    const Complex qk = a(q, k);
    a(p, k) = c * pk - s * qk;
    a(q, k) = s * pk + c * qk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

EigenDecomposition hermitian_eigen(const HermitianMatrix& m) {
  const std::size_t n = m.size();
  ComplexMatrix a = m.matrix();
  // Symmetrize so that roundoff in the input cannot bias the rotations.
  for (std::size_t p = 0; p < n; ++p) {
    a(p, p) = a(p, p).real();
    for (std::size_t q = p + 1; q < n; ++q) {
      const Complex mean = 0.5 * (a(p, q) + std::conj(a(q, p)));
      a(p, q) = mean;
      a(q, p) = std::conj(mean);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = a.frobenius_norm();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-15 * scale) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

Spectrum hermitian_spectrum(const HermitianMatrix& m) { return Spectrum{hermitian_eigen(m).values}; }

Spectrum hermitian_spectrum(const ComplexMatrix& m) { return hermitian_spectrum(HermitianMatrix(m)); }

double max_eigen_residual(const HermitianMatrix& m, const EigenDecomposition& eig) {
  const std::size_t n = m.size();
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      Complex mx{};
      for (std::size_t c = 0; c < n; ++c) mx += m(r, c) * eig.vectors(c, k);
      sum += std::norm(mx - eig.values[k] * eig.vectors(r, k));
    }
    worst = std::max(worst, std::sqrt(sum));
  }
  return worst;
}

bool is_cospectral(const HermitianMatrix& a, const HermitianMatrix& b, std::optional<double> tol) {
  if (a.size() != b.size()) {
    throw GainError(ErrorCode::DimensionMismatch, "cannot compare spectra of different dimensions");
  }
  const double threshold = tol.value_or(1e-8 * (1.0 + a.matrix().frobenius_norm()));
  const Spectrum sa = hermitian_spectrum(a);
  const Spectrum sb = hermitian_spectrum(b);
  for (std::size_t k = 0; k < sa.values.size(); ++k) {
    if (std::abs(sa.values[k] - sb.values[k]) > threshold) return false;
  }
  return true;
}

bool is_numerically_singular(const HermitianMatrix& m) {
  return std::abs(det_direct(m)) <= 1e-8 * determinant_scale(m.matrix());
}

SingularityVerdict balance_by_singularity(const GainGraph& g, const VertexOrdering& ord, std::uint64_t cap) {
  const HermitianMatrix dl_max = distance_laplacian(g, ord, Extremum::max, cap);
  const HermitianMatrix dl_min = distance_laplacian(g, ord, Extremum::min, cap);
  SingularityVerdict verdict;
  verdict.det_max = det_direct(dl_max).real();
  verdict.det_min = det_direct(dl_min).real();
  verdict.det_max_singular = is_numerically_singular(dl_max);
  verdict.det_min_singular = is_numerically_singular(dl_min);
  verdict.rank_max = numerical_rank(dl_max);
  verdict.rank_min = numerical_rank(dl_min);
  // The rank dichotomy (n - 1 versus n) has a wide gap, so it decides.
  const int n = g.vertex_count();
  verdict.balanced = verdict.rank_max == n - 1 && verdict.rank_min == n - 1;
  verdict.agrees_with_potential = verdict.balanced == is_balanced(g);
  return verdict;
}

CospectralityVerdict balance_by_cospectrality(const GainGraph& g, const VertexOrdering& ord, std::uint64_t cap) {
  const HermitianMatrix dl_max = distance_laplacian(g, ord, Extremum::max, cap);
  const HermitianMatrix dl_min = distance_laplacian(g, ord, Extremum::min, cap);
  const HermitianMatrix dl_plain = distance_laplacian(g.underlying(), ord, Extremum::max, cap);
  CospectralityVerdict verdict;
  verdict.modes_equal = max_abs_diff(dl_max.matrix(), dl_min.matrix()) <= kMatrixEqualityTolerance;
  verdict.cospectral = is_cospectral(dl_max, dl_plain);
  verdict.balanced = verdict.modes_equal && verdict.cospectral;
  verdict.agrees_with_potential = verdict.balanced == is_balanced(g);
  return verdict;
}

SwitchingReport switching_similarity_check(const GainGraph& g, const VertexOrdering& ord,
                                           const SwitchingFunction& xi, std::uint64_t cap) {
  SwitchingReport report;
  if (!is_compatible(g, ord, cap)) {
    report.reason = "D^max differs from D^min under the given ordering";
    return report;
  }
  if (!is_ordering_independent(g, ord, cap)) {
    report.reason = "gain distance matrices change when the ordering is reversed";
    return report;
  }
  report.status = SwitchingReport::Status::checked;

  const GainGraph switched = switch_graph(g, xi);
  report.compatible_after = is_compatible(switched, ord, cap);
  report.ordering_independent_after = is_ordering_independent(switched, ord, cap);

  std::vector<Complex> diag;
  diag.reserve(xi.values().size());
  for (const auto& value : xi.values()) diag.push_back(value.value());
  const ComplexMatrix s = ComplexMatrix::diagonal(diag);
  const ComplexMatrix d = gain_distance_matrix(g, ord, Extremum::max, cap).entries.matrix();
  const ComplexMatrix d_switched = gain_distance_matrix(switched, ord, Extremum::max, cap).entries.matrix();
  // S is unitary, so S^{-1} = S*.
  report.similarity_residual = max_abs_diff(d_switched, s.adjoint() * d * s);

  const Spectrum before = hermitian_spectrum(distance_laplacian(g, ord, Extremum::max, cap));
  const Spectrum after = hermitian_spectrum(distance_laplacian(switched, ord, Extremum::max, cap));
  for (std::size_t k = 0; k < before.values.size(); ++k) {
    report.spectrum_gap = std::max(report.spectrum_gap, std::abs(before.values[k] - after.values[k]));
  }

  report.passed = report.compatible_after && report.ordering_independent_after &&
                  report.similarity_residual <= kSimilarityTolerance && report.spectrum_gap <= kSpectrumTolerance;
  return report;
}

}  // namespace gainlap
