#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gainlap/gain_graph.hpp"
#include "gainlap/matrix.hpp"

namespace gainlap {

enum class Extremum { max, min };

const char* to_string(Extremum mode);

inline constexpr std::uint64_t kDefaultPathCap = 1'000'000;

// Equality band used when comparing real or imaginary parts of gains.
inline constexpr double kLexBand = 1e-12;

// Lexicographic order on C: compare real parts, then imaginary parts. Parts
// closer than kLexBand are treated as equal.
bool lex_less(Complex a, Complex b);

/// All-pairs hop distances of a connected graph.
class DistanceTable {
 public:
  DistanceTable() = default;
  DistanceTable(int n, std::vector<int> data) : n_(n), data_(std::move(data)) {}

  int size() const noexcept { return n_; }
  int operator()(Vertex a, Vertex b) const { return data_.at(static_cast<std::size_t>((a - 1) * n_ + (b - 1))); }
  // tr(v) = sum of distances from v.
  int transmission(Vertex v) const;

 private:
  int n_ = 0;
  std::vector<int> data_;
};

// BFS from every vertex. Throws Disconnected when some pair is unreachable.
DistanceTable shortest_distances(const GainGraph& g);

// Every u -> v geodesic as a vertex sequence, obtained by depth-first
// traversal of the geodesic DAG. Throws PathExplosion when more than `cap`
// geodesics exist.
std::vector<std::vector<Vertex>> enumerate_shortest_paths(const GainGraph& g, Vertex u, Vertex v,
                                                          std::uint64_t cap = kDefaultPathCap);
std::vector<std::vector<Vertex>> enumerate_shortest_paths(const GainGraph& g, const DistanceTable& dist,
                                                          Vertex u, Vertex v,
                                                          std::uint64_t cap = kDefaultPathCap);

// Gains of all u -> v geodesics, one entry per geodesic, in DFS order.
std::vector<Complex> geodesic_gains(const GainGraph& g, const DistanceTable& dist, Vertex u, Vertex v,
                                    std::uint64_t cap = kDefaultPathCap);

// phi^max_< / phi^min_< of the pair. Zero on the diagonal.
Complex auxiliary_gain(const GainGraph& g, const VertexOrdering& ord, Extremum mode, Vertex u, Vertex v,
                       std::uint64_t cap = kDefaultPathCap);

struct GainDistanceMatrix {
  HermitianMatrix entries;
  Extremum mode = Extremum::max;
  VertexOrdering ordering;

  // entry / |entry| off the diagonal, 0 on it.
  Complex auxiliary_gain(Vertex u, Vertex v) const;
};

GainDistanceMatrix gain_distance_matrix(const GainGraph& g, const VertexOrdering& ord, Extremum mode,
                                        std::uint64_t cap = kDefaultPathCap);

// Tr(Sigma): diagonal matrix of transmissions.
struct TransmissionMatrix {
  std::vector<double> diagonal;

  ComplexMatrix as_matrix() const;
};

TransmissionMatrix transmission_matrix(const GainGraph& g);

inline constexpr double kMatrixEqualityTolerance = 1e-9;

// D^max and D^min both unchanged when the ordering is reversed.
bool is_ordering_independent(const GainGraph& g, const VertexOrdering& ord,
                             std::uint64_t cap = kDefaultPathCap);

// D^max_< equals D^min_<.
bool is_compatible(const GainGraph& g, const VertexOrdering& ord, std::uint64_t cap = kDefaultPathCap);

// Complete graph on V(g) whose u -> v gain is the auxiliary gain and whose
// edge weights are hop distances. Edges are listed as (1,2), (1,3), ...
WeightedGainGraph associated_complete_graph(const GainGraph& g, const VertexOrdering& ord, Extremum mode,
                                            std::uint64_t cap = kDefaultPathCap);

}  // namespace gainlap
