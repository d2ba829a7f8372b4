#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridups/grid.hpp"
#include "gridups/rational.hpp"
#include "gridups/rational_t.hpp"
#include "gridups/states.hpp"
#include "gridups/tcomplex.hpp"

namespace gridups {

struct TorsionTower {
  std::int64_t grading;  // grading of the tower's top element
  std::uint32_t length;  // annihilated by u^length

  friend auto operator<=>(const TorsionTower&, const TorsionTower&) = default;
};

/// Homology of a TComplex split into free u-towers and torsion.
/// Both lists are sorted ascending.
struct TowerDecomposition {
  RationalT t{1, 1};
  std::vector<std::int64_t> free_towers;
  std::vector<TorsionTower> torsion_towers;
  std::uint32_t truncation_used = 0;

  std::size_t rank() const { return free_towers.size(); }

  // Same multisets (t and truncation ignored).
  bool same_towers(const TowerDecomposition& other) const;
};

struct DecomposeOptions {
  // Fixed working precision; nullopt selects 8*q*n and doubles until two
  // consecutive results agree.
  std::optional<std::uint32_t> truncation;
  int doubling_budget = 6;
};

// Cancels every unit coefficient (marking-free rectangles) by Gaussian
// elimination. Deterministic in the stored generator order.
// Throws DomainError on a non-homogeneous complex.
TComplex cancel_unit_pairs(const TComplex& c);

// `grid_number` only seeds the automatic truncation.
// Throws DomainError on non-homogeneous input and EngineDefect when the
// result does not stabilise within the doubling budget.
TowerDecomposition decompose(const TComplex& c, int grid_number,
                             const DecomposeOptions& options = {});

// Homology of C / u^D C over F2, dimension per scaled grading, computed by
// plain Gaussian elimination on the expanded basis u^k x, 0 <= k < D.
std::map<std::int64_t, std::size_t> truncated_dims_oracle(const TComplex& c, std::uint32_t depth);

// Dimensions of H(C / u^D C) predicted from a tower decomposition,
// including the boundary artefacts of torsion whose source survives.
std::map<std::int64_t, std::size_t> implied_truncated_dims(const TowerDecomposition& dec,
                                                           std::uint32_t depth);

// Gradings strictly above this value are free of truncation artefacts.
std::int64_t truncation_horizon(const TowerDecomposition& dec, std::uint32_t depth);

// F2 homology of the fully blocked complex keyed by (M_O, A).
std::map<std::pair<int, Rational>, std::size_t> fully_blocked_dims(const GridDiagram& d,
                                                                    const StateGuard& guard = {});

// dec tensored with copies of W = <0, shift>: each tower reappears shifted
// by k*shift with multiplicity C(copies, k).
TowerDecomposition tensor_with_w(const TowerDecomposition& dec, int copies, std::int64_t shift);

// {"t":"p/q","rank":R,"free":[..],"torsion":[[g,len]..],"truncation":D}
std::string to_json(const TowerDecomposition& dec);

}  // namespace gridups
