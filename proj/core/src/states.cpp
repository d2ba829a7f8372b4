#include "gridups/states.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gridups/errors.hpp"

namespace gridups {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

struct Pt {
  int x, y;  // doubled coordinates: lattice corners even, square centres odd
};

int count_sw(const std::vector<Pt>& a, const std::vector<Pt>& b) {
  int count = 0;
  for (const Pt& p : a) {
    for (const Pt& q : b) count += (p.x < q.x && p.y < q.y) ? 1 : 0;
  }
  return count;
}

// M(s) = J(s,s) - 2J(s,M) + J(M,M) + 1 with J the symmetrised south-west count.
int maslov(const std::vector<Pt>& s, const std::vector<Pt>& marks) {
  return count_sw(s, s) - count_sw(s, marks) - count_sw(marks, s) + count_sw(marks, marks) + 1;
}

std::vector<Pt> marking_points(const std::vector<int>& rows) {
  std::vector<Pt> pts(rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c) {
    pts[c] = {2 * static_cast<int>(c) + 1, 2 * rows[c] + 1};
  }
  return pts;
}

}  // namespace

std::uint64_t state_count(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) {
    if (f > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    f *= static_cast<std::uint64_t>(k);
  }
  return f;
}

void check_guard(int n, const StateGuard& guard) {
  std::uint64_t states = state_count(n);
  if (states > guard.max_states) throw GuardError(n, states, guard.max_states);
}

void for_each_state(const GridDiagram& d, const StateGuard& guard,
                    const std::function<void(const GridState&)>& visit) {
  check_guard(d.size(), guard);
  GridState s;
  s.sigma.resize(d.size());
  std::iota(s.sigma.begin(), s.sigma.end(), 0);
  do {
    visit(s);
  } while (std::next_permutation(s.sigma.begin(), s.sigma.end()));
}

std::vector<GridState> enumerate_states(const GridDiagram& d, const StateGuard& guard) {
  std::vector<GridState> out;
  check_guard(d.size(), guard);
  out.reserve(state_count(d.size()));
  for_each_state(d, guard, [&](const GridState& s) { out.push_back(s); });
  return out;
}

std::uint32_t state_rank(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += sigma[j] < sigma[i] ? 1 : 0;
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  return static_cast<std::uint32_t>(rank);
}

std::int64_t StateGradings::gr_scaled(std::int64_t p, std::int64_t q) const {
  if (!alexander_integral()) throw DomainError("Alexander grading is not an integer");
  return q * maslov_o - p * (alexander_x2 / 2);
}

StateGradings gradings(const GridDiagram& d, const GridState& s) {
  const int n = d.size();
  std::vector<Pt> pts(n);
  for (int c = 0; c < n; ++c) pts[c] = {2 * c, 2 * s.sigma[c]};
  StateGradings g;
  g.maslov_o = maslov(pts, marking_points(d.o_rows()));
  g.maslov_x = maslov(pts, marking_points(d.x_rows()));
  g.alexander_x2 = g.maslov_o - g.maslov_x - (n - 1);
  return g;
}

std::vector<Rectangle> connecting_rectangles(const GridState& x, const GridState& y) {
  if (x.sigma.size() != y.sigma.size()) return {};
  std::vector<int> diff;
  for (std::size_t c = 0; c < x.sigma.size(); ++c) {
    if (x.sigma[c] != y.sigma[c]) diff.push_back(static_cast<int>(c));
  }
  if (diff.size() != 2) return {};
  const int a = diff[0], b = diff[1];
  if (x.sigma[a] != y.sigma[b] || x.sigma[b] != y.sigma[a]) return {};
  // Lower-left and upper-right corners on x in both orientations.
  return {Rectangle{a, b, x.sigma[a], x.sigma[b]}, Rectangle{b, a, x.sigma[b], x.sigma[a]}};
}

RectangleData rectangle_data(const GridDiagram& d, const GridState& x, const Rectangle& r) {
  const int n = d.size();
  const int w = r.width(n), h = r.height(n);
  RectangleData out;
  for (int i = 0; i < w; ++i) {
    const int k = mod(r.c1 + i, n);
    if (mod(d.x_rows()[k] - r.r1, n) < h) ++out.x_count;
    if (mod(d.o_rows()[k] - r.r1, n) < h) ++out.o_count;
    if (i > 0) {
      const int off = mod(x.sigma[k] - r.r1, n);
      if (off > 0 && off < h) ++out.interior_points;
    }
  }
  return out;
}

}  // namespace gridups
