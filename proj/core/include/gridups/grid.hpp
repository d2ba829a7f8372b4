#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gridups {

enum class Axis { rows, cols };

/// Toroidal n x n grid diagram.
///
/// x_rows()[c] is the row of the X-marking in column c, o_rows()[c] the row
/// of the O-marking. Row 0 is at the bottom; the stored indexing is the
/// planar realization used by every move and grading computation.
class GridDiagram {
 public:
  // Throws DomainError if either vector is not a permutation of 0..n-1 or
  // some column carries both markings in the same square.
  GridDiagram(std::vector<int> x_rows, std::vector<int> o_rows);

  int size() const { return static_cast<int>(x_rows_.size()); }
  const std::vector<int>& x_rows() const { return x_rows_; }
  const std::vector<int>& o_rows() const { return o_rows_; }

  // Column holding the X (resp. O) marking of a row.
  int x_col(int row) const { return x_cols_[row]; }
  int o_col(int row) const { return o_cols_[row]; }

  friend bool operator==(const GridDiagram& a, const GridDiagram& b) {
    return a.x_rows_ == b.x_rows_ && a.o_rows_ == b.o_rows_;
  }

 private:
  std::vector<int> x_rows_;
  std::vector<int> o_rows_;
  std::vector<int> x_cols_;
  std::vector<int> o_cols_;
};

// Accepts {"n":..,"X":[..],"O":[..]} or the one-line form "n;X:a,b,..;O:c,d,..".
GridDiagram parse_grid(std::string_view text);

// Canonical JSON form, fields in the order n, X, O, no whitespace.
std::string serialize_grid(const GridDiagram& d);

// Number of link components: cycles of the column permutation o^-1 . x.
int component_count(const GridDiagram& d);

// Column order reversed; represents the mirror image.
GridDiagram mirror(const GridDiagram& d);

// Shifts every row index (or column position) by k mod n.
GridDiagram cyclic_permute(const GridDiagram& d, Axis axis, int k);

// X on the diagonal, O the eastern neighbour of each X: x_rows[c] = c,
// o_rows[c] = c - 1 mod n.
GridDiagram preset_unknot(int n);

// Torus knot T(p, q) on a (p+q) grid, chirality fixed so that T(2,3) is the
// knot with Upsilon(1/2) = -1/2.
GridDiagram preset_torus(int p, int q);

}  // namespace gridups
