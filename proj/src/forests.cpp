#include "gainlap/forests.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gainlap/errors.hpp"
#include "gainlap/spectral.hpp"

namespace gainlap {

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<int> parent;
};

// Repeatedly strips degree-1 vertices from a unicyclic component; what
// remains is the cycle, returned in traversal order.
std::vector<Vertex> extract_cycle(const GainGraph& g, const std::vector<std::size_t>& edges,
                                  const std::vector<Vertex>& vertices) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (std::size_t index : edges) {
    const auto& e = g.edges()[index];
    adj[e.u - 1].push_back(e.v);
    adj[e.v - 1].push_back(e.u);
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<char> removed(static_cast<std::size_t>(n), 1);
  for (Vertex v : vertices) {
    degree[v - 1] = static_cast<int>(adj[v - 1].size());
    removed[v - 1] = 0;
  }
  std::vector<Vertex> leaves;
  for (Vertex v : vertices)
    if (degree[v - 1] == 1) leaves.push_back(v);
  while (!leaves.empty()) {
    const Vertex leaf = leaves.back();
    leaves.pop_back();
    removed[leaf - 1] = 1;
    for (Vertex w : adj[leaf - 1]) {
      if (!removed[w - 1] && --degree[w - 1] == 1) leaves.push_back(w);
    }
  }

  Vertex start = 0;
  for (Vertex v : vertices) {
    if (!removed[v - 1]) {
      start = v;
      break;
    }
  }
  const auto cycle_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : adj[v - 1])
      if (!removed[w - 1]) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<Vertex> cycle{start};
  Vertex previous = start;
  Vertex current = cycle_neighbors(start).front();
  while (current != start) {
    cycle.push_back(current);
    const auto next = cycle_neighbors(current);
    const Vertex step = next[0] == previous ? next[1] : next[0];
    previous = current;
    current = step;
  }
  return cycle;
}

}  // namespace

std::optional<OneForest> decompose_one_forest(const WeightedGainGraph& wg, std::span<const std::size_t> edges) {
  const GainGraph& g = wg.base();
  const int n = g.vertex_count();
  if (static_cast<int>(edges.size()) != n) return std::nullopt;

  std::vector<std::size_t> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  if (!sorted.empty() && sorted.back() >= g.edge_count()) return std::nullopt;

  DisjointSets sets(n);
  for (std::size_t index : sorted) {
    const auto& e = g.edges()[index];
    sets.unite(e.u - 1, e.v - 1);
  }
  std::vector<int> vertex_count(static_cast<std::size_t>(n), 0);
  std::vector<int> edge_count(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) ++vertex_count[sets.find(v)];
  for (std::size_t index : sorted) ++edge_count[sets.find(g.edges()[index].u - 1)];

  OneForest forest;
  forest.edges = sorted;
  for (int root = 0; root < n; ++root) {
    if (vertex_count[root] == 0) continue;
    // A connected component is unicyclic exactly when it has as many edges
    // as vertices. Isolated vertices fail this with 0 edges.
    if (edge_count[root] != vertex_count[root]) return std::nullopt;
  }
  for (int root = 0; root < n; ++root) {
    if (vertex_count[root] == 0) continue;
    OneTree tree;
    for (int v = 0; v < n; ++v)
      if (sets.find(v) == root) tree.vertices.push_back(v + 1);
    std::vector<std::size_t> component_edges;
    for (std::size_t index : sorted)
      if (sets.find(g.edges()[index].u - 1) == root) component_edges.push_back(index);
    tree.cycle = extract_cycle(g, component_edges, tree.vertices);
    forest.components.push_back(std::move(tree));
  }
  return forest;
}

bool is_spanning_one_forest(const WeightedGainGraph& wg, std::span<const std::size_t> edges) {
  return decompose_one_forest(wg, edges).has_value();
}

std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t numerator = m - k + i;
    // result * numerator / i is exact at each step; check for overflow first.
    if (result > std::numeric_limits<std::uint64_t>::max() / numerator) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * numerator / i;
  }
  return result;
}

void for_each_spanning_one_forest(const WeightedGainGraph& wg, const std::function<void(const OneForest&)>& visit,
                                  const EnumerationLimits& limits) {
  const int n = wg.vertex_count();
  const std::size_t m = wg.edge_count();
  if (n > limits.max_vertices) {
    throw GainError(ErrorCode::TooLarge, std::to_string(n) + " vertices exceeds the enumeration limit of " +
                                             std::to_string(limits.max_vertices));
  }
  const std::uint64_t subsets = binomial(m, static_cast<std::uint64_t>(n));
  if (subsets > limits.subset_budget) {
    throw GainError(ErrorCode::TooLarge, "C(" + std::to_string(m) + "," + std::to_string(n) + ") = " +
                                             std::to_string(subsets) + " edge subsets exceeds the budget of " +
                                             std::to_string(limits.subset_budget));
  }
  if (subsets == 0 || n == 0) return;

  std::vector<std::size_t> chosen(static_cast<std::size_t>(n));
  std::iota(chosen.begin(), chosen.end(), std::size_t{0});
  while (true) {
    if (auto forest = decompose_one_forest(wg, chosen)) visit(*forest);
    // Advance to the next combination in lexicographic order.
    int i = n - 1;
    while (i >= 0 && chosen[i] == m - static_cast<std::size_t>(n) + static_cast<std::size_t>(i)) --i;
    if (i < 0) break;
    ++chosen[i];
    for (int j = i + 1; j < n; ++j) chosen[j] = chosen[j - 1] + 1;
  }
}

std::vector<OneForest> enumerate_spanning_one_forests(const WeightedGainGraph& wg, const EnumerationLimits& limits) {
  std::vector<OneForest> forests;
  for_each_spanning_one_forest(wg, [&](const OneForest& f) { forests.push_back(f); }, limits);
  return forests;
}

double forest_weight(const OneForest& forest, const WeightedGainGraph& wg) {
  double product = 1.0;
  for (std::size_t index : forest.edges) product *= wg.weight(index);
  for (const auto& tree : forest.components) {
    product *= 2.0 * (1.0 - cycle_gain(wg.base(), tree.cycle).re());
  }
  return product;
}

double det_via_forests(const WeightedGainGraph& wg, const EnumerationLimits& limits) {
  double total = 0.0;
  for_each_spanning_one_forest(wg, [&](const OneForest& f) { total += forest_weight(f, wg); }, limits);
  return total;
}

Complex det_direct(const ComplexMatrix& m) {
  if (!m.is_square()) throw GainError(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  ComplexMatrix lu = m;
  Complex det{1.0, 0.0};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    if (lu(pivot, col) == Complex{}) return Complex{};
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(pivot, c), lu(col, c));
      det = -det;
    }
    const Complex diag = lu(col, col);
    det *= diag;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = lu(r, col) / diag;
      if (factor == Complex{}) continue;
      for (std::size_t c = col + 1; c < n; ++c) lu(r, c) -= factor * lu(col, c);
    }
  }
  return det;
}

int numerical_rank(const HermitianMatrix& m, std::optional<double> tol) {
  const Spectrum spectrum = hermitian_spectrum(m);
  double largest = 0.0;
  for (double lambda : spectrum.values) largest = std::max(largest, std::abs(lambda));
  const double threshold = tol.value_or(1e-8 * std::max(1.0, largest));
  int rank = 0;
  for (double lambda : spectrum.values)
    if (std::abs(lambda) > threshold) ++rank;
  return rank;
}

}  // namespace gainlap
