#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "gridups/grid.hpp"
#include "gridups/moves.hpp"

namespace oracle {

// Uniform pair of permutations with no shared square; may be a link.
inline gridups::GridDiagram random_grid(std::mt19937_64& rng, int n) {
  std::vector<int> xs(n), os(n);
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(os.begin(), os.end(), 0);
  for (;;) {
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(os.begin(), os.end(), rng);
    bool clash = false;
    for (int c = 0; c < n; ++c) clash = clash || xs[c] == os[c];
    if (!clash) return gridups::GridDiagram(xs, os);
  }
}

inline gridups::GridDiagram random_knot(std::mt19937_64& rng, int n) {
  for (;;) {
    gridups::GridDiagram d = random_grid(rng, n);
    if (gridups::component_count(d) == 1) return d;
  }
}

// Endpoint of a seeded random walk through knot-type-preserving moves.
inline gridups::GridDiagram scramble(const gridups::GridDiagram& d, std::uint64_t seed, int moves,
                                     int max_n) {
  auto walk = gridups::random_moves(d, seed, moves, max_n);
  return walk.empty() ? d : walk.back().second;
}

}  // namespace oracle
