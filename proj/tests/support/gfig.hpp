#pragma once

// The five-vertex example graph and the four matrices printed for it
// (D^max under the standard and reverse orderings, and the matching distance
// Laplacians). The gains were recovered from those matrices; test_gfig checks
// the recovery before anything else relies on it.

#include <numbers>

#include "gainlap/gain_graph.hpp"
#include "gainlap/matrix.hpp"
#include "oracles.hpp"

namespace gainlap::testing {

inline GainGraph gfig() {
  const UnitGain one;
  const UnitGain quarter = UnitGain::from_angle(std::numbers::pi / 4);
  return GainGraph(5, {{1, 2, one}, {2, 3, quarter}, {3, 4, quarter}, {1, 4, one}, {1, 5, quarter}});
}

inline ComplexMatrix printed_dmax() {
  return {{0, 1, pe(2, 1), 1, pe(1, 1)},
          {1, 0, pe(1, 1), 2, pe(2, 1)},
          {pe(2, -1), pe(1, -1), 0, pe(1, 1), 3},
          {1, 2, pe(1, -1), 0, pe(2, 1)},
          {pe(1, -1), pe(2, -1), 3, pe(2, -1), 0}};
}

inline ComplexMatrix printed_dmax_reverse() {
  return {{0, 1, pe(2, -1), 1, pe(1, 1)},
          {1, 0, pe(1, 1), 2, pe(2, 1)},
          {pe(2, 1), pe(1, -1), 0, pe(1, 1), 3},
          {1, 2, pe(1, -1), 0, pe(2, 1)},
          {pe(1, -1), pe(2, -1), 3, pe(2, -1), 0}};
}

inline ComplexMatrix printed_dlmax() {
  return {{5, -1, -pe(2, 1), -1, -pe(1, 1)},
          {-1, 6, -pe(1, 1), -2, -pe(2, 1)},
          {-pe(2, -1), -pe(1, -1), 7, -pe(1, 1), -3},
          {-1, -2, -pe(1, -1), 6, -pe(2, 1)},
          {-pe(1, -1), -pe(2, -1), -3, -pe(2, -1), 8}};
}

inline ComplexMatrix printed_dlmax_reverse() {
  return {{5, -1, -pe(2, -1), -1, -pe(1, 1)},
          {-1, 6, -pe(1, 1), -2, -pe(2, 1)},
          {-pe(2, 1), -pe(1, -1), 7, -pe(1, 1), -3},
          {-1, -2, -pe(1, -1), 6, -pe(2, 1)},
          {-pe(1, -1), -pe(2, -1), -3, -pe(2, -1), 8}};
}

}  // namespace gainlap::testing
