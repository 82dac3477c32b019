#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gainlap/gain_graph.hpp"
#include "gainlap/matrix.hpp"

namespace gainlap {

/// One connected unicyclic component of a spanning 1-forest.
struct OneTree {
  std::vector<Vertex> vertices;  // ascending
  // The unique cycle, starting at its smallest vertex and continuing
  // towards the smaller of that vertex's two cycle neighbours. Not closed.
  std::vector<Vertex> cycle;
};

struct OneForest {
  std::vector<std::size_t> edges;  // indices into the host graph, ascending
  std::vector<OneTree> components;  // ordered by smallest vertex
};

struct EnumerationLimits {
  int max_vertices = 10;
  std::uint64_t subset_budget = 10'000'000;
};

// n edges, and every component of the spanning subgraph is a 1-tree.
bool is_spanning_one_forest(const WeightedGainGraph& wg, std::span<const std::size_t> edges);

// Decomposes a valid spanning 1-forest; nullopt when `edges` is not one.
std::optional<OneForest> decompose_one_forest(const WeightedGainGraph& wg, std::span<const std::size_t> edges);

// C(m, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t m, std::uint64_t k);

// Streams every spanning 1-forest in lexicographic order of edge index
// sets. Throws TooLarge when n exceeds max_vertices or C(m, n) exceeds the
// subset budget.
void for_each_spanning_one_forest(const WeightedGainGraph& wg, const std::function<void(const OneForest&)>& visit,
                                  const EnumerationLimits& limits = {});

std::vector<OneForest> enumerate_spanning_one_forests(const WeightedGainGraph& wg,
                                                      const EnumerationLimits& limits = {});

// prod w(e) * prod over components 2 (1 - Re phi(C)).
double forest_weight(const OneForest& forest, const WeightedGainGraph& wg);

// Sum of forest_weight over all spanning 1-forests.
double det_via_forests(const WeightedGainGraph& wg, const EnumerationLimits& limits = {});

// LU with partial pivoting.
Complex det_direct(const ComplexMatrix& m);
inline Complex det_direct(const HermitianMatrix& m) { return det_direct(m.matrix()); }

// Number of eigenvalues with |lambda| > tol. The default tolerance is
// 1e-8 * max(1, max |lambda|).
int numerical_rank(const HermitianMatrix& m, std::optional<double> tol = std::nullopt);

}  // namespace gainlap
