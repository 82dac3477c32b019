#include "gainlap/gain_graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "gainlap/errors.hpp"

namespace gainlap {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroGain: return "ZeroGain";
    case ErrorCode::NotAWalk: return "NotAWalk";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::PathExplosion: return "PathExplosion";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

UnitGain normalize_gain(Complex z, bool strict) {
  const double modulus = std::abs(z);
  if (modulus == 0.0 || !std::isfinite(modulus)) {
    throw GainError(ErrorCode::ZeroGain, "gain must be a finite nonzero complex number");
  }
  if (strict && std::abs(modulus - 1.0) > 1e-6) {
    throw GainError(ErrorCode::ZeroGain, "gain modulus " + std::to_string(modulus) + " is not 1");
  }
  // Leave values that are already unit up to rounding untouched, so that
  // normalizing twice is the identity.
  if (std::abs(modulus - 1.0) <= 1e-15) return UnitGain(z);
  return UnitGain(z / modulus);
}

UnitGain UnitGain::from_angle(double radians) {
  return UnitGain(std::polar(1.0, radians));
}

GainGraph::GainGraph(int vertex_count, std::vector<GainEdge> edges) : n_(vertex_count) {
  if (vertex_count < 0) throw GainError(ErrorCode::InvalidGraph, "negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n_));
  edges_.reserve(edges.size());
  for (auto e : edges) {
    if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_) {
      throw GainError(ErrorCode::InvalidGraph,
                      "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} has an endpoint outside 1.." +
                          std::to_string(n_));
    }
    if (e.u == e.v) throw GainError(ErrorCode::InvalidGraph, "loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) {
      std::swap(e.u, e.v);
      e.gain = e.gain.inverse();
    }
    if (has_edge(e.u, e.v)) {
      throw GainError(ErrorCode::InvalidGraph,
                      "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    const std::size_t index = edges_.size();
    edges_.push_back(e);
    adjacency_[e.u - 1].push_back({e.v, index});
    adjacency_[e.v - 1].push_back({e.u, index});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

long GainGraph::edge_index(Vertex a, Vertex b) const {
  if (a < 1 || a > n_ || b < 1 || b > n_) return -1;
  for (const auto& nb : adjacency_[a - 1]) {
    if (nb.vertex == b) return static_cast<long>(nb.edge);
  }
  return -1;
}

bool GainGraph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

UnitGain GainGraph::gain(Vertex a, Vertex b) const {
  const long index = edge_index(a, b);
  if (index < 0) {
    throw GainError(ErrorCode::NotAWalk, std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
  }
  const auto& e = edges_[static_cast<std::size_t>(index)];
  return e.u == a ? e.gain : e.gain.inverse();
}

bool GainGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<Vertex> stack{1};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex a = stack.back();
    stack.pop_back();
    for (const auto& nb : adjacency_[a - 1]) {
      if (!seen[nb.vertex - 1]) {
        seen[nb.vertex - 1] = 1;
        ++reached;
        stack.push_back(nb.vertex);
      }
    }
  }
  return reached == n_;
}

GainGraph GainGraph::underlying() const {
  std::vector<GainEdge> plain = edges_;
  for (auto& e : plain) e.gain = UnitGain();
  return GainGraph(n_, std::move(plain));
}

WeightedGainGraph::WeightedGainGraph(GainGraph base, std::vector<double> weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
  if (weights_.size() != base_.edge_count()) {
    throw GainError(ErrorCode::InvalidGraph, "expected " + std::to_string(base_.edge_count()) + " weights, got " +
                                                 std::to_string(weights_.size()));
  }
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw GainError(ErrorCode::InvalidGraph, "edge weights must be positive and finite");
    }
  }
}

WeightedGainGraph WeightedGainGraph::unit(GainGraph base) {
  std::vector<double> ones(base.edge_count(), 1.0);
  return WeightedGainGraph(std::move(base), std::move(ones));
}

double WeightedGainGraph::weight(Vertex a, Vertex b) const {
  const long index = base_.edge_index(a, b);
  if (index < 0) {
    throw GainError(ErrorCode::NotAWalk, std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
  }
  return weights_[static_cast<std::size_t>(index)];
}

Complex WeightedGainGraph::weighted_gain(Vertex a, Vertex b) const {
  return base_.gain(a, b).value() * weight(a, b);
}

WeightedGainGraph WeightedGainGraph::edge_subgraph(std::span<const std::size_t> edges) const {
  std::vector<GainEdge> kept;
  std::vector<double> kept_weights;
  kept.reserve(edges.size());
  kept_weights.reserve(edges.size());
  for (std::size_t index : edges) {
    kept.push_back(base_.edges().at(index));
    kept_weights.push_back(weights_.at(index));
  }
  return WeightedGainGraph(GainGraph(base_.vertex_count(), std::move(kept)), std::move(kept_weights));
}

VertexOrdering VertexOrdering::identity(int n) {
  VertexOrdering ord;
  ord.rank_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ord.rank_[i] = i;
  return ord;
}

VertexOrdering VertexOrdering::from_ranks(std::vector<int> ranks) {
  const int n = static_cast<int>(ranks.size());
  std::vector<char> used(ranks.size(), 0);
  for (int r : ranks) {
    if (r < 0 || r >= n || used[r]) {
      throw GainError(ErrorCode::InvalidGraph, "vertex ordering is not a permutation");
    }
    used[r] = 1;
  }
  VertexOrdering ord;
  ord.rank_ = std::move(ranks);
  return ord;
}

VertexOrdering VertexOrdering::from_sequence(std::span<const Vertex> sequence) {
  const int n = static_cast<int>(sequence.size());
  std::vector<int> ranks(sequence.size(), -1);
  for (int position = 0; position < n; ++position) {
    const Vertex v = sequence[position];
    if (v < 1 || v > n || ranks[v - 1] != -1) {
      throw GainError(ErrorCode::InvalidGraph, "vertex sequence is not a permutation");
    }
    ranks[v - 1] = position;
  }
  return from_ranks(std::move(ranks));
}

VertexOrdering VertexOrdering::reversed() const {
  VertexOrdering ord;
  ord.rank_.reserve(rank_.size());
  const int n = size();
  for (int r : rank_) ord.rank_.push_back(n - 1 - r);
  return ord;
}

std::vector<Vertex> VertexOrdering::sequence() const {
  std::vector<Vertex> seq(rank_.size());
  for (std::size_t i = 0; i < rank_.size(); ++i) seq[rank_[i]] = static_cast<Vertex>(i + 1);
  return seq;
}

SwitchingFunction SwitchingFunction::identity(int n) {
  return SwitchingFunction(std::vector<UnitGain>(static_cast<std::size_t>(n)));
}

UnitGain path_gain(const GainGraph& g, std::span<const Vertex> walk) {
  if (walk.empty()) throw GainError(ErrorCode::NotAWalk, "empty walk");
  for (Vertex v : walk) {
    if (v < 1 || v > g.vertex_count()) {
      throw GainError(ErrorCode::NotAWalk, "vertex " + std::to_string(v) + " is not in the graph");
    }
  }
  UnitGain product;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) product = product * g.gain(walk[i], walk[i + 1]);
  return product;
}

UnitGain cycle_gain(const GainGraph& g, std::span<const Vertex> cycle) {
  std::vector<Vertex> closed(cycle.begin(), cycle.end());
  if (closed.size() >= 2 && closed.front() == closed.back()) closed.pop_back();
  if (closed.size() < 3) throw GainError(ErrorCode::NotACycle, "a cycle needs at least three vertices");
  std::vector<Vertex> sorted = closed;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GainError(ErrorCode::NotACycle, "cycle repeats a vertex");
  }
  closed.push_back(closed.front());
  try {
    return path_gain(g, closed);
  } catch (const GainError& e) {
    throw GainError(ErrorCode::NotACycle, e.what());
  }
}

bool is_balanced(const GainGraph& g) {
  const int n = g.vertex_count();
  std::vector<Complex> potential(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex root = 1; root <= n; ++root) {
    if (seen[root - 1]) continue;
    seen[root - 1] = 1;
    potential[root - 1] = 1.0;
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex a = frontier.front();
      frontier.pop();
      for (const auto& nb : g.neighbors(a)) {
        if (!seen[nb.vertex - 1]) {
          seen[nb.vertex - 1] = 1;
          // gain(a -> b) = theta(a)^{-1} theta(b)
          potential[nb.vertex - 1] = potential[a - 1] * g.gain(a, nb.vertex).value();
          frontier.push(nb.vertex);
        }
      }
    }
  }
  for (const auto& e : g.edges()) {
    const Complex implied = std::conj(potential[e.u - 1]) * potential[e.v - 1];
    if (std::abs(implied - e.gain.value()) > kBalanceTolerance) return false;
  }
  return true;
}

GainGraph switch_graph(const GainGraph& g, const SwitchingFunction& xi) {
  if (xi.size() != g.vertex_count()) {
    throw GainError(ErrorCode::InvalidGraph, "switching function has " + std::to_string(xi.size()) +
                                                 " entries for " + std::to_string(g.vertex_count()) + " vertices");
  }
  std::vector<GainEdge> edges = g.edges();
  for (auto& e : edges) e.gain = xi(e.u).inverse() * e.gain * xi(e.v);
  return GainGraph(g.vertex_count(), std::move(edges));
}

}  // namespace gainlap
