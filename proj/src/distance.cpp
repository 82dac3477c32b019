#include "gainlap/distance.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "gainlap/errors.hpp"

namespace gainlap {

const char* to_string(Extremum mode) { return mode == Extremum::max ? "max" : "min"; }

bool lex_less(Complex a, Complex b) {
  if (std::abs(a.real() - b.real()) > kLexBand) return a.real() < b.real();
  if (std::abs(a.imag() - b.imag()) > kLexBand) return a.imag() < b.imag();
  return false;
}

int DistanceTable::transmission(Vertex v) const {
  int total = 0;
  for (Vertex w = 1; w <= n_; ++w) total += (*this)(v, w);
  return total;
}

DistanceTable shortest_distances(const GainGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> data(static_cast<std::size_t>(n) * n, -1);
  for (Vertex source = 1; source <= n; ++source) {
    int* row = data.data() + static_cast<std::size_t>(source - 1) * n;
    row[source - 1] = 0;
    std::queue<Vertex> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
      const Vertex a = frontier.front();
      frontier.pop();
      for (const auto& nb : g.neighbors(a)) {
        if (row[nb.vertex - 1] < 0) {
          row[nb.vertex - 1] = row[a - 1] + 1;
          frontier.push(nb.vertex);
        }
      }
    }
    for (Vertex target = 1; target <= n; ++target) {
      if (row[target - 1] < 0) {
        throw GainError(ErrorCode::Disconnected, "no path from " + std::to_string(source) + " to " +
                                                     std::to_string(target) + "; the graph must be connected");
      }
    }
  }
  return DistanceTable(n, std::move(data));
}

namespace {

// Depth-first walk over the geodesic DAG from u towards v. `visit` is called
// once per complete geodesic with the current vertex stack and the gain.
template <typename Visit>
void walk_geodesics(const GainGraph& g, const DistanceTable& dist, Vertex u, Vertex v, std::uint64_t cap,
                    Visit&& visit) {
  if (cap == 0) throw GainError(ErrorCode::PathExplosion, "path cap must be positive");
  std::vector<Vertex> stack{u};
  std::uint64_t found = 0;

  auto descend = [&](auto&& self, Vertex current, Complex gain) -> void {
    if (current == v) {
      if (++found > cap) {
        throw GainError(ErrorCode::PathExplosion, "more than " + std::to_string(cap) + " geodesics between " +
                                                      std::to_string(u) + " and " + std::to_string(v));
      }
      visit(stack, gain);
      return;
    }
    const int remaining = dist(current, v);
    for (const auto& nb : g.neighbors(current)) {
      if (dist(nb.vertex, v) != remaining - 1) continue;
      stack.push_back(nb.vertex);
      self(self, nb.vertex, gain * g.gain(current, nb.vertex).value());
      stack.pop_back();
    }
  };
  descend(descend, u, Complex{1.0, 0.0});
}

void check_vertex(const GainGraph& g, Vertex v) {
  if (v < 1 || v > g.vertex_count()) {
    throw GainError(ErrorCode::InvalidGraph, "vertex " + std::to_string(v) + " is not in the graph");
  }
}

Complex extremal(const std::vector<Complex>& gains, Extremum mode) {
  Complex best = gains.front();
  for (std::size_t i = 1; i < gains.size(); ++i) {
    const bool better = mode == Extremum::max ? lex_less(best, gains[i]) : lex_less(gains[i], best);
    if (better) best = gains[i];
  }
  return best;
}

struct AuxiliaryTable {
  DistanceTable dist;
  ComplexMatrix gains;  // phi_<^mode(u, v) at (u - 1, v - 1)
};

AuxiliaryTable auxiliary_table(const GainGraph& g, const VertexOrdering& ord, Extremum mode, std::uint64_t cap) {
  const int n = g.vertex_count();
  if (ord.size() != n) {
    throw GainError(ErrorCode::InvalidGraph, "ordering has " + std::to_string(ord.size()) + " vertices, graph has " +
                                                 std::to_string(n));
  }
  AuxiliaryTable table{shortest_distances(g), ComplexMatrix(n, n)};
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      const Vertex first = ord.precedes(a, b) ? a : b;
      const Vertex second = first == a ? b : a;
      const Complex chosen = extremal(geodesic_gains(g, table.dist, first, second, cap), mode);
      table.gains(first - 1, second - 1) = chosen;
      table.gains(second - 1, first - 1) = std::conj(chosen);
    }
  }
  return table;
}

}  // namespace

std::vector<std::vector<Vertex>> enumerate_shortest_paths(const GainGraph& g, const DistanceTable& dist, Vertex u,
                                                          Vertex v, std::uint64_t cap) {
  check_vertex(g, u);
  check_vertex(g, v);
  std::vector<std::vector<Vertex>> paths;
  walk_geodesics(g, dist, u, v, cap, [&](const std::vector<Vertex>& stack, Complex) { paths.push_back(stack); });
  return paths;
}

std::vector<std::vector<Vertex>> enumerate_shortest_paths(const GainGraph& g, Vertex u, Vertex v,
                                                          std::uint64_t cap) {
  return enumerate_shortest_paths(g, shortest_distances(g), u, v, cap);
}

std::vector<Complex> geodesic_gains(const GainGraph& g, const DistanceTable& dist, Vertex u, Vertex v,
                                    std::uint64_t cap) {
  check_vertex(g, u);
  check_vertex(g, v);
  std::vector<Complex> gains;
  walk_geodesics(g, dist, u, v, cap, [&](const std::vector<Vertex>&, Complex gain) { gains.push_back(gain); });
  return gains;
}

Complex auxiliary_gain(const GainGraph& g, const VertexOrdering& ord, Extremum mode, Vertex u, Vertex v,
                       std::uint64_t cap) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) return Complex{};
  const DistanceTable dist = shortest_distances(g);
  const bool forward = ord.precedes(u, v);
  const Complex chosen = forward ? extremal(geodesic_gains(g, dist, u, v, cap), mode)
                                 : extremal(geodesic_gains(g, dist, v, u, cap), mode);
  return forward ? chosen : std::conj(chosen);
}

Complex GainDistanceMatrix::auxiliary_gain(Vertex u, Vertex v) const {
  const Complex entry = entries(u - 1, v - 1);
  const double modulus = std::abs(entry);
  return modulus == 0.0 ? Complex{} : entry / modulus;
}

GainDistanceMatrix gain_distance_matrix(const GainGraph& g, const VertexOrdering& ord, Extremum mode,
                                        std::uint64_t cap) {
  const AuxiliaryTable table = auxiliary_table(g, ord, mode, cap);
  const int n = g.vertex_count();
  ComplexMatrix d(n, n);
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = 1; b <= n; ++b) {
      if (a != b) d(a - 1, b - 1) = table.gains(a - 1, b - 1) * static_cast<double>(table.dist(a, b));
    }
  }
  return GainDistanceMatrix{HermitianMatrix(std::move(d)), mode, ord};
}

ComplexMatrix TransmissionMatrix::as_matrix() const {
  std::vector<Complex> diag(diagonal.begin(), diagonal.end());
  return ComplexMatrix::diagonal(diag);
}

TransmissionMatrix transmission_matrix(const GainGraph& g) {
  const DistanceTable dist = shortest_distances(g);
  TransmissionMatrix tr;
  tr.diagonal.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 1; v <= g.vertex_count(); ++v) tr.diagonal.push_back(dist.transmission(v));
  return tr;
}

bool is_ordering_independent(const GainGraph& g, const VertexOrdering& ord, std::uint64_t cap) {
  const VertexOrdering rev = ord.reversed();
  for (Extremum mode : {Extremum::max, Extremum::min}) {
    const auto forward = gain_distance_matrix(g, ord, mode, cap);
    const auto backward = gain_distance_matrix(g, rev, mode, cap);
    if (max_abs_diff(forward.entries.matrix(), backward.entries.matrix()) > kMatrixEqualityTolerance) return false;
  }
  return true;
}

bool is_compatible(const GainGraph& g, const VertexOrdering& ord, std::uint64_t cap) {
  const auto dmax = gain_distance_matrix(g, ord, Extremum::max, cap);
  const auto dmin = gain_distance_matrix(g, ord, Extremum::min, cap);
  return max_abs_diff(dmax.entries.matrix(), dmin.entries.matrix()) <= kMatrixEqualityTolerance;
}

WeightedGainGraph associated_complete_graph(const GainGraph& g, const VertexOrdering& ord, Extremum mode,
                                            std::uint64_t cap) {
  const AuxiliaryTable table = auxiliary_table(g, ord, mode, cap);
  const int n = g.vertex_count();
  std::vector<GainEdge> edges;
  std::vector<double> weights;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      edges.push_back({a, b, normalize_gain(table.gains(a - 1, b - 1))});
      weights.push_back(table.dist(a, b));
    }
  }
  return WeightedGainGraph(GainGraph(n, std::move(edges)), std::move(weights));
}

}  // namespace gainlap
