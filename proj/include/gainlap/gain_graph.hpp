#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gainlap {

using Complex = std::complex<double>;

// Vertices are 1-based throughout the public API.
using Vertex = int;

/// A complex number of modulus one. Instances are only produced through
/// normalization, so the modulus invariant holds up to rounding.
class UnitGain {
 public:
  UnitGain() = default;

  static UnitGain from_angle(double radians);

  const Complex& value() const noexcept { return z_; }
  double re() const noexcept { return z_.real(); }
  double im() const noexcept { return z_.imag(); }

  // For unit gains the inverse is the conjugate.
  UnitGain inverse() const noexcept { return UnitGain(std::conj(z_)); }

  friend UnitGain operator*(const UnitGain& a, const UnitGain& b) noexcept {
    return UnitGain(a.z_ * b.z_);
  }
  friend bool operator==(const UnitGain& a, const UnitGain& b) noexcept = default;

 private:
  explicit UnitGain(Complex z) noexcept : z_(z) {}
  friend UnitGain normalize_gain(Complex z, bool strict);

  Complex z_{1.0, 0.0};
};

/// Returns z / |z|. Throws ZeroGain for z = 0, and in strict mode rejects
/// inputs whose modulus is further than 1e-6 from one.
UnitGain normalize_gain(Complex z, bool strict = false);

struct GainEdge {
  Vertex u = 0;
  Vertex v = 0;
  UnitGain gain;  // gain of the orientation u -> v
};

/// Simple undirected graph with one unit gain per edge, stored for the
/// orientation u < v. The reverse orientation reads back the conjugate.
class GainGraph {
 public:
  struct Neighbor {
    Vertex vertex;
    std::size_t edge;
  };

  GainGraph() = default;

  // Edges may be given with either endpoint first; they are stored with
  // u < v and the gain conjugated when swapped. Loops, duplicate pairs and
  // out-of-range endpoints throw InvalidGraph.
  GainGraph(int vertex_count, std::vector<GainEdge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<GainEdge>& edges() const noexcept { return edges_; }
  const std::vector<Neighbor>& neighbors(Vertex v) const { return adjacency_.at(v - 1); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(Vertex a, Vertex b) const;
  // Index into edges() of the edge {a, b}, or -1.
  long edge_index(Vertex a, Vertex b) const;

  // Gain of the oriented edge a -> b; throws NotAWalk if not adjacent.
  UnitGain gain(Vertex a, Vertex b) const;

  bool is_connected() const;

  // Same underlying graph, every edge gain set to 1.
  GainGraph underlying() const;

 private:
  int n_ = 0;
  std::vector<GainEdge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// A gain graph together with one strictly positive weight per edge
/// (aligned with base().edges()).
class WeightedGainGraph {
 public:
  WeightedGainGraph() = default;
  WeightedGainGraph(GainGraph base, std::vector<double> weights);

  // Every weight equal to one.
  static WeightedGainGraph unit(GainGraph base);

  const GainGraph& base() const noexcept { return base_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  int vertex_count() const noexcept { return base_.vertex_count(); }
  std::size_t edge_count() const noexcept { return base_.edge_count(); }

  double weight(std::size_t edge) const { return weights_.at(edge); }
  double weight(Vertex a, Vertex b) const;

  // gain(a -> b) * w({a, b})
  Complex weighted_gain(Vertex a, Vertex b) const;

  // Spanning subgraph keeping only the listed edge indices.
  WeightedGainGraph edge_subgraph(std::span<const std::size_t> edges) const;

 private:
  GainGraph base_;
  std::vector<double> weights_;
};

/// Total order on the vertices. rank(v) is the position of v, 0 being the
/// smallest. The graph itself is never relabelled.
class VertexOrdering {
 public:
  VertexOrdering() = default;

  static VertexOrdering identity(int n);
  // ranks[v - 1] is the rank of vertex v; must be a permutation of 0..n-1.
  static VertexOrdering from_ranks(std::vector<int> ranks);
  // Vertices listed from smallest to largest.
  static VertexOrdering from_sequence(std::span<const Vertex> sequence);

  int size() const noexcept { return static_cast<int>(rank_.size()); }
  int rank(Vertex v) const { return rank_.at(v - 1); }
  bool precedes(Vertex a, Vertex b) const { return rank(a) < rank(b); }
  VertexOrdering reversed() const;
  // Vertices sorted by rank.
  std::vector<Vertex> sequence() const;

  friend bool operator==(const VertexOrdering&, const VertexOrdering&) = default;

 private:
  std::vector<int> rank_;
};

/// xi : V -> T, one unit gain per vertex.
class SwitchingFunction {
 public:
  SwitchingFunction() = default;
  explicit SwitchingFunction(std::vector<UnitGain> values) : values_(std::move(values)) {}

  static SwitchingFunction identity(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  const UnitGain& operator()(Vertex v) const { return values_.at(v - 1); }
  const std::vector<UnitGain>& values() const noexcept { return values_; }

 private:
  std::vector<UnitGain> values_;
};

// Product of the oriented edge gains along the walk. A single vertex gives 1.
UnitGain path_gain(const GainGraph& g, std::span<const Vertex> walk);

// Gain of a closed walk. The closing vertex may be repeated at the end or
// omitted: [1,2,3] and [1,2,3,1] denote the same triangle.
UnitGain cycle_gain(const GainGraph& g, std::span<const Vertex> cycle);

inline constexpr double kBalanceTolerance = 1e-9;

bool is_balanced(const GainGraph& g);

// phi^xi(u -> v) = xi(u)^{-1} phi(u -> v) xi(v)
GainGraph switch_graph(const GainGraph& g, const SwitchingFunction& xi);

}  // namespace gainlap
