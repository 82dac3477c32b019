#include <doctest.h>

#include <algorithm>
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

// Every n-subset of edges, checked one by one with the DFS oracle.
std::vector<std::vector<std::size_t>> brute_one_forests(const GainGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t m = g.edge_count();
  const auto n = static_cast<std::size_t>(g.vertex_count());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n) continue;
    std::vector<std::size_t> subset;
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1) subset.push_back(k);
    if (brute_is_one_forest(g, subset)) out.push_back(subset);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GainGraph complete_graph(Rng& rng, int n) {
  std::vector<GainEdge> edges;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) edges.push_back({a, b, random_gain(rng)});
  return GainGraph(n, edges);
}

}  // namespace

TEST_CASE("is_spanning_one_forest examples") {
  const auto tri = WeightedGainGraph::unit(cycle_graph({UnitGain(), UnitGain(), UnitGain()}));
  const std::vector<std::size_t> all{0, 1, 2};
  const std::vector<std::size_t> two{0, 1};
  CHECK(is_spanning_one_forest(tri, all));
  CHECK_FALSE(is_spanning_one_forest(tri, two));

  // C4 with chord 1-3: {12, 23, 13, 34} is a triangle with a pendant edge.
  const GainGraph c4chord(4, {{1, 2, UnitGain()}, {2, 3, UnitGain()}, {3, 4, UnitGain()}, {1, 4, UnitGain()},
                              {1, 3, UnitGain()}});
  const auto wg = WeightedGainGraph::unit(c4chord);
  const std::vector<std::size_t> pendant{0, 1, 2, 4};
  CHECK(is_spanning_one_forest(wg, pendant));
  const auto forest = decompose_one_forest(wg, pendant);
  REQUIRE(forest);
  REQUIRE(forest->components.size() == 1);
  CHECK(forest->components[0].vertices == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(forest->components[0].cycle == std::vector<Vertex>{1, 2, 3});

  // n edges, but C4 plus its chord carries two cycles and vertex 5 is
  // isolated.
  const GainGraph five(5, {{1, 2, UnitGain()}, {2, 3, UnitGain()}, {3, 4, UnitGain()}, {1, 4, UnitGain()},
                           {1, 3, UnitGain()}, {4, 5, UnitGain()}});
  const std::vector<std::size_t> bicyclic{0, 1, 2, 3, 4};
  CHECK_FALSE(is_spanning_one_forest(WeightedGainGraph::unit(five), bicyclic));
  CHECK_FALSE(decompose_one_forest(WeightedGainGraph::unit(five), bicyclic));
}

TEST_CASE("cycle extraction follows the smaller neighbour") {
  const GainGraph c5 = cycle_graph({UnitGain(), UnitGain(), UnitGain(), UnitGain(), UnitGain()});
  const std::vector<std::size_t> all{0, 1, 2, 3, 4};
  const auto forest = decompose_one_forest(WeightedGainGraph::unit(c5), all);
  REQUIRE(forest);
  CHECK(forest->components[0].cycle == std::vector<Vertex>{1, 2, 3, 4, 5});

  // Two triangles {1,4,5} and {2,3,6}.
  const GainGraph two(6, {{1, 4, UnitGain()}, {4, 5, UnitGain()}, {1, 5, UnitGain()},
                          {2, 3, UnitGain()}, {3, 6, UnitGain()}, {2, 6, UnitGain()}});
  const std::vector<std::size_t> every{0, 1, 2, 3, 4, 5};
  const auto f2 = decompose_one_forest(WeightedGainGraph::unit(two), every);
  REQUIRE(f2);
  REQUIRE(f2->components.size() == 2);
  CHECK(f2->components[0].cycle == std::vector<Vertex>{1, 4, 5});
  CHECK(f2->components[1].cycle == std::vector<Vertex>{2, 3, 6});
}

TEST_CASE("enumeration counts") {
  Rng rng(101);
  const auto c6 = WeightedGainGraph::unit(cycle_graph(std::vector<UnitGain>(6, kI)));
  CHECK(enumerate_spanning_one_forests(c6).size() == 1);
  CHECK(enumerate_spanning_one_forests(WeightedGainGraph::unit(random_tree(rng, 7))).empty());

  const GainGraph k4 = complete_graph(rng, 4);
  CHECK(enumerate_spanning_one_forests(WeightedGainGraph::unit(k4)).size() == brute_one_forests(k4).size());

  for (int trial = 0; trial < 60; ++trial) {
    const GainGraph g = random_connected_graph(rng, random_int(rng, 2, 7), 0.5);
    const auto expected = brute_one_forests(g);
    const auto got = enumerate_spanning_one_forests(WeightedGainGraph::unit(g));
    REQUIRE(got.size() == expected.size());
    for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k].edges == expected[k]);
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(45, 10) == 3'190'187'286ULL);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(2000, 1000) == UINT64_MAX);
}

TEST_CASE("forest_weight examples") {
  // Triangle with cycle gain -1: 2 (1 - (-1)) = 4. Cycle gain i: 2.
  const auto neg = WeightedGainGraph::unit(cycle_graph({UnitGain(), UnitGain(), normalize_gain({-1.0, 0.0})}));
  const auto forests = enumerate_spanning_one_forests(neg);
  REQUIRE(forests.size() == 1);
  CHECK(forest_weight(forests[0], neg) == doctest::Approx(4.0).epsilon(1e-14));

  const auto quarter = WeightedGainGraph::unit(cycle_graph({UnitGain(), UnitGain(), kI}));
  CHECK(forest_weight(enumerate_spanning_one_forests(quarter)[0], quarter) == doctest::Approx(2.0).epsilon(1e-14));

  const WeightedGainGraph heavy(cycle_graph({UnitGain(), UnitGain(), kI}), {2.0, 3.0, 0.5});
  CHECK(forest_weight(enumerate_spanning_one_forests(heavy)[0], heavy) == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("det_direct") {
  CHECK(std::abs(det_direct(ComplexMatrix::identity(4)) - 1.0) <= 1e-15);
  CHECK(std::abs(det_direct(ComplexMatrix{{1, Complex(0, -1)}, {Complex(0, 1), 1}})) <= 1e-15);
  const auto c3 = weighted_laplacian(WeightedGainGraph::unit(cycle_graph({UnitGain(), UnitGain(), kI})));
  CHECK(std::abs(det_direct(c3) - 2.0) <= 1e-12);
  CHECK(std::abs(det_direct(ComplexMatrix{{0, 1}, {1, 0}}) + 1.0) <= 1e-15);

  Rng rng(103);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(random_int(rng, 1, 6));
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = {u(rng), u(rng)};
    CHECK(std::abs(det_direct(m) - cofactor_det(m)) <= 1e-12);
  }
}

TEST_CASE("det via forests equals det via LU") {
  Rng rng(107);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = random_int(rng, 2, 8);
    const GainGraph g = trial % 3 == 0 ? random_switched_balanced(rng, n, 0.5) : random_connected_graph(rng, n, 0.5);
    const auto wg = random_weights(rng, g);
    const auto l = weighted_laplacian(wg);
    const Complex lu = det_direct(l);
    CHECK(std::abs(lu.imag()) <= 1e-10 * determinant_scale(l.matrix()));
    CHECK(std::abs(det_via_forests(wg) - lu.real()) <= 1e-9 * determinant_scale(l.matrix()));
  }
  const auto gf = WeightedGainGraph::unit(gfig());
  CHECK(det_via_forests(gf) == doctest::Approx(det_direct(weighted_laplacian(gf)).real()).epsilon(1e-12));
}

TEST_CASE("determinant of a disconnected graph factors over components") {
  Rng rng(109);
  for (int trial = 0; trial < 30; ++trial) {
    const GainGraph a = random_connected_graph(rng, random_int(rng, 2, 5), 0.6);
    const GainGraph b = random_connected_graph(rng, random_int(rng, 2, 5), 0.6);
    std::vector<GainEdge> edges = a.edges();
    for (auto e : b.edges()) edges.push_back({e.u + a.vertex_count(), e.v + a.vertex_count(), e.gain});
    const GainGraph both(a.vertex_count() + b.vertex_count(), edges);
    const double product = det_via_forests(WeightedGainGraph::unit(a)) * det_via_forests(WeightedGainGraph::unit(b));
    CHECK(det_via_forests(WeightedGainGraph::unit(both)) == doctest::Approx(product).epsilon(1e-10));
  }
}

TEST_CASE("a connected graph has singular Laplacian exactly when balanced") {
  Rng rng(113);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = random_int(rng, 3, 8);
    const GainGraph g = trial % 2 ? random_switched_balanced(rng, n, 0.5) : random_unbalanced(rng, n, 0.5);
    const auto l = weighted_laplacian(random_weights(rng, g));
    const bool singular = std::abs(det_direct(l)) <= 1e-8 * determinant_scale(l.matrix());
    CHECK(singular == is_balanced(g));
    CHECK(numerical_rank(l) == (is_balanced(g) ? n - 1 : n));
  }
}

TEST_CASE("numerical_rank examples") {
  CHECK(numerical_rank(HermitianMatrix(ComplexMatrix::identity(3))) == 3);
  CHECK(numerical_rank(HermitianMatrix(ComplexMatrix(3, 3))) == 0);
  CHECK(numerical_rank(HermitianMatrix(ComplexMatrix{{1, Complex(0, -1)}, {Complex(0, 1), 1}})) == 1);
  CHECK(numerical_rank(HermitianMatrix(ComplexMatrix{{1, 0}, {0, 1e-12}})) == 1);
  CHECK(numerical_rank(HermitianMatrix(ComplexMatrix{{1, 0}, {0, 1e-12}}), 1e-13) == 2);
}

TEST_CASE("enumeration limits") {
  Rng rng(127);
  const auto k6 = WeightedGainGraph::unit(complete_graph(rng, 6));
  auto expect_too_large = [&](const EnumerationLimits& limits) {
    try {
      det_via_forests(k6, limits);
      FAIL("expected TooLarge");
    } catch (const GainError& e) {
      CHECK(e.code() == ErrorCode::TooLarge);
    }
  };
  expect_too_large({10, 100});
  expect_too_large({5, 10'000'000});
  CHECK_NOTHROW(det_via_forests(k6, {6, binomial(15, 6)}));
  CHECK_THROWS_AS(det_via_forests(WeightedGainGraph::unit(complete_graph(rng, 11))), GainError);
}
