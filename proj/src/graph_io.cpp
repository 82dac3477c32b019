#include "gainlap/graph_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "gainlap/errors.hpp"

namespace gainlap {

using nlohmann::json;

namespace {

[[noreturn]] void parse_failure(const std::string& message) { throw GainError(ErrorCode::ParseError, message); }
[[noreturn]] void invalid(const std::string& message) { throw GainError(ErrorCode::ValidationError, message); }

const json& require(const json& object, const char* key, const std::string& where) {
  const auto it = object.find(key);
  if (it == object.end()) parse_failure(where + ": missing field \"" + key + "\"");
  return *it;
}

long long require_integer(const json& value, const std::string& where) {
  if (!value.is_number_integer()) parse_failure(where + ": expected an integer");
  return value.get<long long>();
}

double require_number(const json& value, const std::string& where) {
  if (!value.is_number()) parse_failure(where + ": expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) parse_failure(where + ": expected a finite number");
  return x;
}

UnitGain parse_gain(const json& gain, const std::string& where) {
  if (!gain.is_object()) parse_failure(where + ": expected an object with \"theta\" or \"re\"/\"im\"");
  const bool polar = gain.contains("theta");
  const bool rectangular = gain.contains("re") || gain.contains("im");
  if (polar == rectangular) parse_failure(where + ": give either \"theta\" or both \"re\" and \"im\"");
  if (polar) return UnitGain::from_angle(require_number(gain["theta"], where + ".theta"));
  const double re = require_number(require(gain, "re", where), where + ".re");
  const double im = require_number(require(gain, "im", where), where + ".im");
  const double modulus = std::hypot(re, im);
  if (std::abs(modulus - 1.0) > 1e-6) {
    invalid(where + ": |re + i im| = " + std::to_string(modulus) + " is not within 1e-6 of 1");
  }
  return normalize_gain(Complex{re, im});
}

std::string number_17(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

}  // namespace

GainGraph GraphDocument::graph() const {
  std::vector<GainEdge> list;
  list.reserve(edges.size());
  for (const auto& e : edges) list.push_back({e.u, e.v, e.gain});
  return GainGraph(n, std::move(list));
}

WeightedGainGraph GraphDocument::weighted_graph() const {
  std::vector<double> w = weights.empty() ? std::vector<double>(edges.size(), 1.0) : weights;
  return WeightedGainGraph(graph(), std::move(w));
}

VertexOrdering GraphDocument::vertex_ordering() const {
  if (ordering.empty()) return VertexOrdering::identity(n);
  std::vector<int> ranks;
  ranks.reserve(ordering.size());
  for (int r : ordering) ranks.push_back(r - 1);
  return VertexOrdering::from_ranks(std::move(ranks));
}

GraphDocument parse_graph(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n');
    parse_failure("line " + std::to_string(line) + ": " + e.what());
  }
  if (!root.is_object()) parse_failure("document: expected a JSON object");

  GraphDocument doc;
  const long long n = require_integer(require(root, "n", "document"), "n");
  if (n < 1 || n > 100000) invalid("n: vertex count must be between 1 and 100000");
  doc.n = static_cast<int>(n);

  const json& edges = require(root, "edges", "document");
  if (!edges.is_array()) parse_failure("edges: expected an array");
  std::set<std::pair<int, int>> seen;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    const json& e = edges[k];
    if (!e.is_object()) parse_failure(where + ": expected an object");
    const long long u = require_integer(require(e, "u", where), where + ".u");
    const long long v = require_integer(require(e, "v", where), where + ".v");
    if (!(1 <= u && u < v && v <= n)) {
      invalid(where + ": endpoints must satisfy 1 <= u < v <= n (got u=" + std::to_string(u) +
              ", v=" + std::to_string(v) + ")");
    }
    if (!seen.emplace(static_cast<int>(u), static_cast<int>(v)).second) {
      invalid(where + ": duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    doc.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), parse_gain(require(e, "gain", where), where + ".gain")});
  }

  if (const auto it = root.find("weights"); it != root.end()) {
    if (!it->is_array()) parse_failure("weights: expected an array");
    if (it->size() != doc.edges.size()) {
      invalid("weights: expected " + std::to_string(doc.edges.size()) + " entries, got " + std::to_string(it->size()));
    }
    for (std::size_t k = 0; k < it->size(); ++k) {
      const double w = require_number((*it)[k], "weights[" + std::to_string(k) + "]");
      if (!(w > 0.0)) invalid("weights[" + std::to_string(k) + "]: weights must be positive");
      doc.weights.push_back(w);
    }
  } else {
    doc.weights.assign(doc.edges.size(), 1.0);
  }

  if (const auto it = root.find("ordering"); it != root.end()) {
    if (!it->is_array()) parse_failure("ordering: expected an array");
    if (it->size() != static_cast<std::size_t>(n)) invalid("ordering: expected " + std::to_string(n) + " entries");
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t k = 0; k < it->size(); ++k) {
      const long long r = require_integer((*it)[k], "ordering[" + std::to_string(k) + "]");
      if (r < 1 || r > n || used[r]) invalid("ordering: must be a permutation of 1.." + std::to_string(n));
      used[r] = 1;
      doc.ordering.push_back(static_cast<int>(r));
    }
  } else {
    for (int v = 1; v <= doc.n; ++v) doc.ordering.push_back(v);
  }
  return doc;
}

std::string emit_graph(const GraphDocument& doc) {
  std::ostringstream out;
  out << "{\n  \"n\": " << doc.n << ",\n  \"edges\": [";
  for (std::size_t k = 0; k < doc.edges.size(); ++k) {
    const auto& e = doc.edges[k];
    out << (k ? ",\n    " : "\n    ") << "{\"u\": " << e.u << ", \"v\": " << e.v << ", \"gain\": {\"re\": "
        << number_17(e.gain.re()) << ", \"im\": " << number_17(e.gain.im()) << "}}";
  }
  out << (doc.edges.empty() ? "]" : "\n  ]");
  if (!doc.weights.empty()) {
    out << ",\n  \"weights\": [";
    for (std::size_t k = 0; k < doc.weights.size(); ++k) out << (k ? ", " : "") << number_17(doc.weights[k]);
    out << "]";
  }
  if (!doc.ordering.empty()) {
    out << ",\n  \"ordering\": [";
    for (std::size_t k = 0; k < doc.ordering.size(); ++k) out << (k ? ", " : "") << doc.ordering[k];
    out << "]";
  }
  out << "\n}\n";
  return out.str();
}

GraphDocument make_document(const WeightedGainGraph& wg, const VertexOrdering& ord) {
  GraphDocument doc;
  doc.n = wg.vertex_count();
  for (const auto& e : wg.base().edges()) doc.edges.push_back({e.u, e.v, e.gain});
  doc.weights = wg.weights();
  for (Vertex v = 1; v <= doc.n; ++v) doc.ordering.push_back(ord.rank(v) + 1);
  return doc;
}

std::string format_complex(Complex z) {
  std::string cell = number_17(z.real());
  cell += std::signbit(z.imag()) ? '-' : '+';
  cell += number_17(std::abs(z.imag()));
  cell += 'i';
  return cell;
}

std::optional<Complex> parse_complex(std::string_view cell) {
  const std::string text(cell);
  const char* begin = text.c_str();
  char* end = nullptr;
  const double re = std::strtod(begin, &end);
  if (end == begin || (*end != '+' && *end != '-')) return std::nullopt;
  const char* imag_begin = end;
  const double im = std::strtod(imag_begin, &end);
  if (end == imag_begin || *end != 'i' || end[1] != '\0') return std::nullopt;
  return Complex{re, im};
}

void write_matrix_csv(std::ostream& out, const ComplexMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "," : "") << format_complex(m(r, c));
    out << '\n';
  }
}

ComplexMatrix read_matrix_csv(std::string_view text) {
  std::vector<std::vector<Complex>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Complex> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto z = parse_complex(cell);
      if (!z) throw GainError(ErrorCode::ParseError, "malformed complex cell \"" + cell + "\"");
      row.push_back(*z);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw GainError(ErrorCode::ParseError, "ragged CSV matrix");
    }
    rows.push_back(std::move(row));
  }
  ComplexMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace gainlap
