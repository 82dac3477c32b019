#pragma once

#include <cstdint>
#include <vector>

#include "gainlap/distance.hpp"
#include "gainlap/gain_graph.hpp"
#include "gainlap/matrix.hpp"

namespace gainlap {

struct OrientedEdge {
  Vertex tail = 0;
  Vertex head = 0;
};

/// Weighted incidence matrix: one column per oriented edge, holding sqrt(w)
/// at the tail row and -gain(tail -> head)^{-1} sqrt(w) at the head row.
struct IncidenceMatrix {
  ComplexMatrix entries;
  std::vector<OrientedEdge> columns;
};

HermitianMatrix weighted_adjacency(const WeightedGainGraph& wg);

// L = D - A with D the weighted degree matrix.
HermitianMatrix weighted_laplacian(const WeightedGainGraph& wg);

// Tail is the endpoint that comes first under `ord`; one entry per edge, in
// edge-list order.
std::vector<OrientedEdge> default_orientation(const WeightedGainGraph& wg, const VertexOrdering& ord);

// Columns follow the edge-list order of wg; orientation[k] must name the two
// endpoints of edge k in some order (InvalidGraph otherwise).
IncidenceMatrix weighted_incidence(const WeightedGainGraph& wg, const std::vector<OrientedEdge>& orientation);
IncidenceMatrix weighted_incidence(const WeightedGainGraph& wg);

// max |L - H H*| for the given orientation (default: identity ordering).
double factorization_residual(const WeightedGainGraph& wg, const std::vector<OrientedEdge>& orientation);
double factorization_residual(const WeightedGainGraph& wg);

// Incidence of the associated complete graph, weights = distances. One column
// per unordered pair, tail = ordering-smaller endpoint, columns sorted by
// (tail rank, head rank).
IncidenceMatrix distance_incidence(const GainGraph& g, const VertexOrdering& ord, Extremum mode,
                                   std::uint64_t cap = kDefaultPathCap);

// Tr(Sigma) - D_<^mode
HermitianMatrix distance_laplacian(const GainGraph& g, const VertexOrdering& ord, Extremum mode,
                                   std::uint64_t cap = kDefaultPathCap);

double distance_factorization_residual(const GainGraph& g, const VertexOrdering& ord, Extremum mode,
                                       std::uint64_t cap = kDefaultPathCap);

}  // namespace gainlap
