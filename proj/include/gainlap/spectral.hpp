#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gainlap/distance.hpp"
#include "gainlap/gain_graph.hpp"
#include "gainlap/matrix.hpp"

namespace gainlap {

struct Spectrum {
  std::vector<double> values;  // ascending
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k belongs to values[k]
};

// Cyclic complex Jacobi. Deterministic for a fixed input.
EigenDecomposition hermitian_eigen(const HermitianMatrix& m);

Spectrum hermitian_spectrum(const HermitianMatrix& m);

// Checks the Hermitian invariant first; throws NotHermitian.
Spectrum hermitian_spectrum(const ComplexMatrix& m);

// max_k ||M x_k - lambda_k x_k||
double max_eigen_residual(const HermitianMatrix& m, const EigenDecomposition& eig);

// Sorted spectra equal within tol (default 1e-8 * (1 + ||A||_F)).
bool is_cospectral(const HermitianMatrix& a, const HermitianMatrix& b, std::optional<double> tol = std::nullopt);

// |det| <= 1e-8 * determinant_scale(m)
bool is_numerically_singular(const HermitianMatrix& m);

struct SingularityVerdict {
  double det_max = 0.0;
  double det_min = 0.0;
  bool det_max_singular = false;
  bool det_min_singular = false;
  int rank_max = 0;
  int rank_min = 0;
  // Rank n - 1 for both distance Laplacians.
  bool balanced = false;
  bool agrees_with_potential = false;
};

SingularityVerdict balance_by_singularity(const GainGraph& g, const VertexOrdering& ord,
                                          std::uint64_t cap = kDefaultPathCap);

struct CospectralityVerdict {
  bool modes_equal = false;  // DL^max == DL^min
  bool cospectral = false;   // DL^max cospectral with DL of the underlying graph
  bool balanced = false;
  bool agrees_with_potential = false;
};

CospectralityVerdict balance_by_cospectrality(const GainGraph& g, const VertexOrdering& ord,
                                              std::uint64_t cap = kDefaultPathCap);

struct SwitchingReport {
  enum class Status { checked, hypothesis_not_met };

  Status status = Status::hypothesis_not_met;
  std::string reason;
  bool compatible_after = false;
  bool ordering_independent_after = false;
  // max |D(switched) - S^{-1} D S|, S = diag(xi)
  double similarity_residual = 0.0;
  // max_k |lambda_k(DL switched) - lambda_k(DL)|
  double spectrum_gap = 0.0;
  bool passed = false;
};

inline constexpr double kSimilarityTolerance = 1e-10;
inline constexpr double kSpectrumTolerance = 1e-8;

SwitchingReport switching_similarity_check(const GainGraph& g, const VertexOrdering& ord,
                                           const SwitchingFunction& xi, std::uint64_t cap = kDefaultPathCap);

}  // namespace gainlap
