#include "gainlap/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gainlap/errors.hpp"

namespace gainlap {

HermitianMatrix weighted_adjacency(const WeightedGainGraph& wg) {
  const int n = wg.vertex_count();
  ComplexMatrix a(n, n);
  const auto& edges = wg.base().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    const Complex value = e.gain.value() * wg.weight(k);
    a(e.u - 1, e.v - 1) = value;
    a(e.v - 1, e.u - 1) = std::conj(value);
  }
  return HermitianMatrix(std::move(a));
}

HermitianMatrix weighted_laplacian(const WeightedGainGraph& wg) {
  const int n = wg.vertex_count();
  ComplexMatrix l(n, n);
  const auto& edges = wg.base().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    const double w = wg.weight(k);
    const Complex value = e.gain.value() * w;
    l(e.u - 1, e.v - 1) = -value;
    l(e.v - 1, e.u - 1) = -std::conj(value);
    l(e.u - 1, e.u - 1) += w;
    l(e.v - 1, e.v - 1) += w;
  }
  return HermitianMatrix(std::move(l));
}

std::vector<OrientedEdge> default_orientation(const WeightedGainGraph& wg, const VertexOrdering& ord) {
  std::vector<OrientedEdge> orientation;
  orientation.reserve(wg.edge_count());
  for (const auto& e : wg.base().edges()) {
    orientation.push_back(ord.precedes(e.u, e.v) ? OrientedEdge{e.u, e.v} : OrientedEdge{e.v, e.u});
  }
  return orientation;
}

IncidenceMatrix weighted_incidence(const WeightedGainGraph& wg, const std::vector<OrientedEdge>& orientation) {
  const auto& edges = wg.base().edges();
  if (orientation.size() != edges.size()) {
    throw GainError(ErrorCode::InvalidGraph, "orientation has " + std::to_string(orientation.size()) +
                                                 " entries for " + std::to_string(edges.size()) + " edges");
  }
  IncidenceMatrix h{ComplexMatrix(static_cast<std::size_t>(wg.vertex_count()), edges.size()), orientation};
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    const auto& o = orientation[k];
    const bool matches = (o.tail == e.u && o.head == e.v) || (o.tail == e.v && o.head == e.u);
    if (!matches) {
      throw GainError(ErrorCode::InvalidGraph, "orientation " + std::to_string(k) + " does not match edge {" +
                                                   std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    const double root = std::sqrt(wg.weight(k));
    h.entries(o.tail - 1, k) = root;
    h.entries(o.head - 1, k) = -wg.base().gain(o.tail, o.head).inverse().value() * root;
  }
  return h;
}

IncidenceMatrix weighted_incidence(const WeightedGainGraph& wg) {
  return weighted_incidence(wg, default_orientation(wg, VertexOrdering::identity(wg.vertex_count())));
}

double factorization_residual(const WeightedGainGraph& wg, const std::vector<OrientedEdge>& orientation) {
  const IncidenceMatrix h = weighted_incidence(wg, orientation);
  return max_abs_diff(weighted_laplacian(wg).matrix(), h.entries * h.entries.adjoint());
}

double factorization_residual(const WeightedGainGraph& wg) {
  return factorization_residual(wg, default_orientation(wg, VertexOrdering::identity(wg.vertex_count())));
}

IncidenceMatrix distance_incidence(const GainGraph& g, const VertexOrdering& ord, Extremum mode, std::uint64_t cap) {
  const WeightedGainGraph complete = associated_complete_graph(g, ord, mode, cap);
  std::vector<OrientedEdge> orientation = default_orientation(complete, ord);
  std::vector<std::size_t> order(orientation.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto key = [&](std::size_t k) {
      return std::pair{ord.rank(orientation[k].tail), ord.rank(orientation[k].head)};
    };
    return key(a) < key(b);
  });
  const WeightedGainGraph sorted = complete.edge_subgraph(order);
  return weighted_incidence(sorted, default_orientation(sorted, ord));
}

HermitianMatrix distance_laplacian(const GainGraph& g, const VertexOrdering& ord, Extremum mode, std::uint64_t cap) {
  const auto d = gain_distance_matrix(g, ord, mode, cap);
  return HermitianMatrix(transmission_matrix(g).as_matrix() - d.entries.matrix());
}

double distance_factorization_residual(const GainGraph& g, const VertexOrdering& ord, Extremum mode,
                                       std::uint64_t cap) {
  const IncidenceMatrix h = distance_incidence(g, ord, mode, cap);
  return max_abs_diff(distance_laplacian(g, ord, mode, cap).matrix(), h.entries * h.entries.adjoint());
}

}  // namespace gainlap
