#include <doctest.h>

#include <cmath>

#include "gainlap/errors.hpp"
#include "gainlap/forests.hpp"
#include "gainlap/laplacian.hpp"
#include "support/generators.hpp"
#include "support/gfig.hpp"
#include "support/oracles.hpp"

using namespace gainlap;
using namespace gainlap::testing;

namespace {

const UnitGain kI = normalize_gain({0.0, 1.0});

}  // namespace

TEST_CASE("weighted_adjacency") {
  const WeightedGainGraph edge(GainGraph(2, {{1, 2, kI}}), {3.0});
  CHECK(max_abs_diff(weighted_adjacency(edge).matrix(), ComplexMatrix{{0, Complex(0, 3)}, {Complex(0, -3), 0}}) ==
        0.0);
  CHECK(weighted_adjacency(WeightedGainGraph::unit(GainGraph(3, {}))).matrix().max_abs() == 0.0);

  const auto tri = WeightedGainGraph::unit(cycle_graph({UnitGain(), UnitGain(), kI}));
  const auto a = weighted_adjacency(tri).matrix();
  CHECK(is_hermitian(a, 0.0));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) CHECK(std::abs(std::abs(a(r, c)) - (r == c ? 0.0 : 1.0)) <= 1e-15);
}

TEST_CASE("weighted_laplacian") {
  const WeightedGainGraph edge(GainGraph(2, {{1, 2, kI}}), {3.0});
  CHECK(max_abs_diff(weighted_laplacian(edge).matrix(), ComplexMatrix{{3, Complex(0, -3)}, {Complex(0, 3), 3}}) ==
        0.0);
  const auto tri = WeightedGainGraph::unit(cycle_graph({UnitGain(), UnitGain(), UnitGain()}));
  CHECK(max_abs_diff(weighted_laplacian(tri).matrix(), ComplexMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}) == 0.0);

  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const auto wg = random_weights(rng, random_connected_graph(rng, random_int(rng, 1, 8), 0.5));
    CHECK(max_abs_diff(weighted_laplacian(wg).matrix(), brute_laplacian(wg)) <= 1e-15);
  }

  // Unit-weight example graph: L is positive definite because it is
  // unbalanced, and its determinant matches the cofactor expansion.
  const auto l = weighted_laplacian(WeightedGainGraph::unit(gfig()));
  CHECK(std::abs(det_direct(l) - cofactor_det(l.matrix())) <= 1e-10);
  CHECK(det_direct(l).real() > 1e-6);
}

TEST_CASE("weighted_incidence") {
  const Complex g = std::polar(1.0, 0.7);
  const WeightedGainGraph edge(GainGraph(2, {{1, 2, normalize_gain(g)}}), {2.5});
  const auto h = weighted_incidence(edge, {{1, 2}});
  CHECK(std::abs(h.entries(0, 0) - std::sqrt(2.5)) <= 1e-15);
  CHECK(std::abs(h.entries(1, 0) + std::conj(g) * std::sqrt(2.5)) <= 1e-15);

  const auto path = WeightedGainGraph::unit(GainGraph(3, {{1, 2, UnitGain()}, {2, 3, UnitGain()}}));
  CHECK(max_abs_diff(weighted_incidence(path).entries, ComplexMatrix{{1, 0}, {-1, 1}, {0, -1}}) == 0.0);

  // Directed C3 oriented 1 -> 2 -> 3 -> 1: each column has sqrt(w) at its
  // tail and -phi^{-1} sqrt(w) at its head.
  Rng rng(73);
  const std::vector<UnitGain> gains{random_gain(rng), random_gain(rng), random_gain(rng)};
  const WeightedGainGraph c3(cycle_graph(gains), {0.7, 1.3, 1.9});
  const auto hc = weighted_incidence(c3, {{1, 2}, {2, 3}, {3, 1}});
  ComplexMatrix expected(3, 3);
  const std::vector<double> w{0.7, 1.3, 1.9};
  for (int k = 0; k < 3; ++k) {
    const int tail = k;
    const int head = (k + 1) % 3;
    expected(tail, k) = std::sqrt(w[k]);
    expected(head, k) = -std::conj(gains[k].value()) * std::sqrt(w[k]);
  }
  CHECK(max_abs_diff(hc.entries, expected) <= 1e-15);

  CHECK_THROWS_AS(weighted_incidence(path, {{1, 3}, {2, 3}}), GainError);
  CHECK_THROWS_AS(weighted_incidence(path, {{1, 2}}), GainError);
}

TEST_CASE("factorization residual: L = H H*") {
  const WeightedGainGraph edge(GainGraph(2, {{1, 2, kI}}), {3.0});
  CHECK(factorization_residual(edge) <= 1e-12);

  Rng rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const auto wg = random_weights(rng, random_connected_graph(rng, random_int(rng, 2, 8), 0.5));
    auto orientation = default_orientation(wg, random_ordering(rng, wg.vertex_count()));
    CHECK(factorization_residual(wg, orientation) <= 1e-12);
    for (auto& o : orientation)
      if (random_int(rng, 0, 1)) std::swap(o.tail, o.head);
    CHECK(factorization_residual(wg, orientation) <= 1e-12);
  }

  const auto tree = WeightedGainGraph::unit(random_tree(rng, 6).underlying());
  CHECK(factorization_residual(tree) == 0.0);
  CHECK(std::abs(det_direct(weighted_laplacian(tree))) <= 1e-12);
}

TEST_CASE("weighted trees have singular Laplacians") {
  Rng rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    const auto wg = random_weights(rng, random_tree(rng, random_int(rng, 2, 8)));
    const auto l = weighted_laplacian(wg);
    CHECK(std::abs(det_direct(l)) <= 1e-9 * determinant_scale(l.matrix()));
  }
}

TEST_CASE("distance_incidence") {
  const UnitGain g = UnitGain::from_angle(1.1);
  const auto h = distance_incidence(GainGraph(2, {{1, 2, g}}), VertexOrdering::identity(2), Extremum::max);
  CHECK(h.entries.rows() == 2);
  CHECK(h.entries.cols() == 1);
  CHECK(std::abs(h.entries(0, 0) - 1.0) <= 1e-15);
  CHECK(std::abs(h.entries(1, 0) + std::conj(g.value())) <= 1e-15);

  const auto hf = distance_incidence(gfig(), VertexOrdering::identity(5), Extremum::max);
  CHECK(hf.entries.rows() == 5);
  CHECK(hf.entries.cols() == 10);
  std::size_t column = 99;
  for (std::size_t k = 0; k < hf.columns.size(); ++k)
    if (hf.columns[k].tail == 3 && hf.columns[k].head == 5) column = k;
  REQUIRE(column < 10);
  const std::vector<Complex> expected{0, 0, std::sqrt(3.0), 0, -std::sqrt(3.0)};
  for (std::size_t r = 0; r < 5; ++r) CHECK(std::abs(hf.entries(r, column) - expected[r]) <= 1e-12);

  // Columns sorted by (tail rank, head rank).
  const auto ord = VertexOrdering::from_sequence(std::vector<Vertex>{4, 2, 5, 1, 3});
  const auto hr = distance_incidence(gfig(), ord, Extremum::min);
  for (std::size_t k = 1; k < hr.columns.size(); ++k) {
    const auto prev = std::pair{ord.rank(hr.columns[k - 1].tail), ord.rank(hr.columns[k - 1].head)};
    const auto cur = std::pair{ord.rank(hr.columns[k].tail), ord.rank(hr.columns[k].head)};
    CHECK(prev < cur);
    CHECK(ord.precedes(hr.columns[k].tail, hr.columns[k].head));
  }

  std::vector<GainEdge> k3;
  for (Vertex a = 1; a <= 3; ++a)
    for (Vertex b = a + 1; b <= 3; ++b) k3.push_back({a, b, UnitGain()});
  const auto h3 = distance_incidence(GainGraph(3, k3), VertexOrdering::identity(3), Extremum::max);
  CHECK(max_abs_diff(h3.entries, ComplexMatrix{{1, 1, 0}, {-1, 0, 1}, {0, -1, -1}}) == 0.0);
}

TEST_CASE("distance_laplacian") {
  const auto dl = distance_laplacian(GainGraph(2, {{1, 2, kI}}), VertexOrdering::identity(2), Extremum::max);
  CHECK(max_abs_diff(dl.matrix(), ComplexMatrix{{1, Complex(0, -1)}, {Complex(0, 1), 1}}) == 0.0);
  CHECK(max_abs_diff(distance_laplacian(gfig(), VertexOrdering::identity(5), Extremum::max).matrix(),
                     printed_dlmax()) <= 1e-12);
  const GainGraph split(3, {{1, 2, UnitGain()}});
  CHECK_THROWS_AS(distance_laplacian(split, VertexOrdering::identity(3), Extremum::max), GainError);
}

TEST_CASE("distance factorization and the associated complete graph") {
  CHECK(distance_factorization_residual(gfig(), VertexOrdering::identity(5), Extremum::max) <= 1e-12);
  CHECK(distance_factorization_residual(GainGraph(2, {{1, 2, kI}}), VertexOrdering::identity(2), Extremum::max) <=
        1e-15);

  Rng rng(89);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = random_int(rng, 2, 7);
    const GainGraph g = random_connected_graph(rng, n, 0.4);
    for (const auto& ord : {VertexOrdering::identity(n), random_ordering(rng, n)}) {
      for (const auto& o : {ord, ord.reversed()}) {
        for (Extremum mode : {Extremum::max, Extremum::min}) {
          CHECK(distance_factorization_residual(g, o, mode) <= 1e-12);
          const auto via_complete = weighted_laplacian(associated_complete_graph(g, o, mode));
          CHECK(max_abs_diff(via_complete.matrix(), distance_laplacian(g, o, mode).matrix()) <= 1e-12);
        }
      }
    }
  }
}
