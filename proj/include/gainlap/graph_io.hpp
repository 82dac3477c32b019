#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gainlap/gain_graph.hpp"
#include "gainlap/matrix.hpp"

namespace gainlap {

/// In-memory form of the JSON graph document:
///
///   {"n": 5,
///    "edges": [{"u": 1, "v": 2, "gain": {"theta": 0.785}}, ...],
///    "weights": [1.0, ...],      // optional, aligned with edges
///    "ordering": [1, 2, ...]}    // optional, 1-based rank of vertex v at [v - 1]
///
/// A gain is either {"theta": radians} or {"re": x, "im": y}. Parsing fills
/// in unit weights and the identity ordering when those are absent.
struct GraphDocument {
  struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    UnitGain gain;

    friend bool operator==(const Edge&, const Edge&) = default;
  };

  int n = 0;
  std::vector<Edge> edges;
  std::vector<double> weights;
  std::vector<int> ordering;

  GainGraph graph() const;
  WeightedGainGraph weighted_graph() const;
  VertexOrdering vertex_ordering() const;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

// Throws GainError with ParseError (malformed JSON, wrong field types; the
// message names the line or field) or ValidationError (violated invariant).
GraphDocument parse_graph(std::string_view text);

// Gains are written in rectangular form with 17 significant digits, so
// parse_graph(emit_graph(d)) == d.
std::string emit_graph(const GraphDocument& doc);

GraphDocument make_document(const WeightedGainGraph& wg, const VertexOrdering& ord);

// "a+bi" / "a-bi" with 17 significant digits.
std::string format_complex(Complex z);
// Inverse of format_complex; nullopt on malformed input.
std::optional<Complex> parse_complex(std::string_view cell);

// One CSV row per matrix row.
void write_matrix_csv(std::ostream& out, const ComplexMatrix& m);
ComplexMatrix read_matrix_csv(std::string_view text);

}  // namespace gainlap
