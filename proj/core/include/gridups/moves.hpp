#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridups/grid.hpp"

namespace gridups {

enum class InterchangeKind { commutation, cross_commutation, degenerate };

// Corner of the 2x2 stabilization block left without a marking. The O sits
// in the opposite corner and the two X's in the remaining ones; X:SW is
//   X O
//   . X
enum class StabVariant { sw, se, nw, ne };

std::string_view to_string(InterchangeKind kind);
std::string_view to_string(StabVariant v);
StabVariant parse_stab_variant(std::string_view text);

// Classifies the interchange of lines i and i+1 (mod n) from the closed
// spans of their markings. Throws DomainError when i is out of range.
InterchangeKind classify_adjacent_interchange(const GridDiagram& d, Axis axis, int i);

// Swap lines i and i+1. Each refuses (DomainError naming the actual
// classification) unless the pair has the matching kind.
GridDiagram commute(const GridDiagram& d, Axis axis, int i);
GridDiagram cross_commute(const GridDiagram& d, Axis axis, int i);

// Splits the row and column of the X in column c into a 2x2 block.
GridDiagram stabilize(const GridDiagram& d, int c, StabVariant v);

struct DestabSite {
  int col;  // south-west corner of the toroidal 2x2 block
  int row;
  StabVariant variant;

  friend bool operator==(const DestabSite&, const DestabSite&) = default;
};

std::vector<DestabSite> destabilization_sites(const GridDiagram& d);

// Throws DomainError if the site no longer matches a stabilization block.
GridDiagram destabilize(const GridDiagram& d, const DestabSite& site);

enum class MoveKind {
  cyclic_row,
  cyclic_col,
  commute_col,
  commute_row,
  cross_commute_col,
  cross_commute_row,
  stabilize,
  destabilize,
};

std::string_view to_string(MoveKind kind);

/// One grid move, with enough parameters to replay it.
///
/// `index` is the shift for cyclic moves, the line for interchanges, the
/// X column for stabilizations and the block column for destabilizations.
/// `row` is only used by destabilizations.
struct MoveRecord {
  MoveKind kind;
  int index = 0;
  int row = 0;
  StabVariant variant = StabVariant::sw;
  std::uint64_t seed = 0;
  std::uint64_t step = 0;

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

std::string describe(const MoveRecord& m);

GridDiagram apply_move(const GridDiagram& d, const MoveRecord& m);

// Every currently legal knot-type-preserving move. Cross-commutations are
// never included; stabilizations only while n < max_n.
std::vector<MoveRecord> legal_moves(const GridDiagram& d, int max_n);

// Seeded walk of `count` moves, each drawn uniformly from legal_moves().
std::vector<std::pair<MoveRecord, GridDiagram>> random_moves(const GridDiagram& d,
                                                             std::uint64_t seed, int count,
                                                             int max_n);

}  // namespace gridups
