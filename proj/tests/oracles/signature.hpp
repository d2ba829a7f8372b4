#pragma once

#include "gridups/grid.hpp"

namespace oracle {

struct Crossing {
  int col;
  int row;
  int sign;  // +1 positive, -1 negative
};

// Crossings of the planar realization: vertical segments (X to O) pass
// over horizontal ones (O to X).
std::vector<Crossing> crossings(const gridups::GridDiagram& d);

int writhe(const gridups::GridDiagram& d);

// Knot signature from the Goeritz matrix of the realization with the
// Gordon-Litherland correction. `white` selects which checkerboard colour
// spans the lattice; both must give the same answer.
int signature(const gridups::GridDiagram& d, int white = 0);

}  // namespace oracle
