#include "gridups/moves.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>

#include "gridups/errors.hpp"

namespace gridups {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

struct Span {
  int lo, hi;
};

Span line_span(const GridDiagram& d, Axis axis, int i) {
  int a = axis == Axis::cols ? d.x_rows()[i] : d.x_col(i);
  int b = axis == Axis::cols ? d.o_rows()[i] : d.o_col(i);
  return {std::min(a, b), std::max(a, b)};
}

GridDiagram swap_lines(const GridDiagram& d, Axis axis, int i) {
  const int n = d.size();
  const int j = mod(i + 1, n);
  std::vector<int> xs = d.x_rows();
  std::vector<int> os = d.o_rows();
  if (axis == Axis::cols) {
    std::swap(xs[i], xs[j]);
    std::swap(os[i], os[j]);
  } else {
    auto relabel = [&](int r) { return r == i ? j : (r == j ? i : r); };
    for (int c = 0; c < n; ++c) {
      xs[c] = relabel(xs[c]);
      os[c] = relabel(os[c]);
    }
  }
  return GridDiagram(std::move(xs), std::move(os));
}

// Offsets of the blank corner inside the 2x2 block.
std::pair<int, int> blank_offset(StabVariant v) {
  switch (v) {
    case StabVariant::sw: return {0, 0};
    case StabVariant::se: return {1, 0};
    case StabVariant::nw: return {0, 1};
    case StabVariant::ne: return {1, 1};
  }
  throw DomainError("invalid stabilization variant");
}

constexpr std::array<StabVariant, 4> kVariants = {StabVariant::sw, StabVariant::se,
                                                  StabVariant::nw, StabVariant::ne};

enum class Mark { none, x, o };

Mark mark_at(const GridDiagram& d, int col, int row) {
  if (d.x_rows()[col] == row) return Mark::x;
  if (d.o_rows()[col] == row) return Mark::o;
  return Mark::none;
}

// Variant of the stabilization block with south-west corner (col, row), if any.
std::optional<StabVariant> block_variant(const GridDiagram& d, int col, int row) {
  const int n = d.size();
  if (n < 3) return std::nullopt;
  for (StabVariant v : kVariants) {
    auto [bx, by] = blank_offset(v);
    bool ok = true;
    for (int dx = 0; dx < 2 && ok; ++dx) {
      for (int dy = 0; dy < 2 && ok; ++dy) {
        Mark want = Mark::x;
        if (dx == bx && dy == by) want = Mark::none;
        else if (dx != bx && dy != by) want = Mark::o;
        ok = mark_at(d, mod(col + dx, n), mod(row + dy, n)) == want;
      }
    }
    if (ok) return v;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(InterchangeKind kind) {
  switch (kind) {
    case InterchangeKind::commutation: return "commutation";
    case InterchangeKind::cross_commutation: return "cross_commutation";
    case InterchangeKind::degenerate: return "degenerate";
  }
  return "?";
}

std::string_view to_string(StabVariant v) {
  switch (v) {
    case StabVariant::sw: return "X:SW";
    case StabVariant::se: return "X:SE";
    case StabVariant::nw: return "X:NW";
    case StabVariant::ne: return "X:NE";
  }
  return "?";
}

StabVariant parse_stab_variant(std::string_view text) {
  for (StabVariant v : kVariants) {
    if (to_string(v) == text) return v;
  }
  throw DomainError("invalid stabilization variant '" + std::string(text) + "'");
}

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::cyclic_row: return "cyclic_row";
    case MoveKind::cyclic_col: return "cyclic_col";
    case MoveKind::commute_col: return "commute_col";
    case MoveKind::commute_row: return "commute_row";
    case MoveKind::cross_commute_col: return "cross_commute_col";
    case MoveKind::cross_commute_row: return "cross_commute_row";
    case MoveKind::stabilize: return "stabilize";
    case MoveKind::destabilize: return "destabilize";
  }
  return "?";
}

InterchangeKind classify_adjacent_interchange(const GridDiagram& d, Axis axis, int i) {
  const int n = d.size();
  if (i < 0 || i >= n) {
    throw DomainError("interchange index " + std::to_string(i) + " out of range for n=" +
                      std::to_string(n));
  }
  Span a = line_span(d, axis, i);
  Span b = line_span(d, axis, mod(i + 1, n));
  std::array<int, 4> ends = {a.lo, a.hi, b.lo, b.hi};
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
    return InterchangeKind::degenerate;
  }
  bool disjoint = a.hi < b.lo || b.hi < a.lo;
  bool nested = (a.lo < b.lo && b.hi < a.hi) || (b.lo < a.lo && a.hi < b.hi);
  return disjoint || nested ? InterchangeKind::commutation : InterchangeKind::cross_commutation;
}

GridDiagram commute(const GridDiagram& d, Axis axis, int i) {
  auto kind = classify_adjacent_interchange(d, axis, i);
  if (kind != InterchangeKind::commutation) {
    throw DomainError("not a commutation: lines " + std::to_string(i) + " are a " +
                      std::string(to_string(kind)) + " pair");
  }
  return swap_lines(d, axis, i);
}

GridDiagram cross_commute(const GridDiagram& d, Axis axis, int i) {
  auto kind = classify_adjacent_interchange(d, axis, i);
  if (kind != InterchangeKind::cross_commutation) {
    throw DomainError("not a cross-commutation: lines " + std::to_string(i) + " are a " +
                      std::string(to_string(kind)) + " pair");
  }
  return swap_lines(d, axis, i);
}

GridDiagram stabilize(const GridDiagram& d, int c, StabVariant v) {
  const int n = d.size();
  if (c < 0 || c >= n) throw DomainError("stabilization column out of range");
  const int r = d.x_rows()[c];
  const int col_o_row = d.o_rows()[c];  // O sharing the X's column
  const int row_o_col = d.o_col(r);     // O sharing the X's row
  auto map_row = [&](int j) { return j < r ? j : j + 1; };
  auto map_col = [&](int k) { return k < c ? k : k + 1; };

  auto [bx, by] = blank_offset(v);
  const int blank_col = c + bx, blank_row = r + by;
  const int opp_col = c + 1 - bx, opp_row = r + 1 - by;

  std::vector<int> xs(n + 1), os(n + 1);
  for (int k = 0; k < n; ++k) {
    if (k == c) continue;
    xs[map_col(k)] = map_row(d.x_rows()[k]);
    os[map_col(k)] = k == row_o_col ? blank_row : map_row(d.o_rows()[k]);
  }
  xs[blank_col] = opp_row;
  xs[opp_col] = blank_row;
  os[opp_col] = opp_row;
  os[blank_col] = map_row(col_o_row);
  return GridDiagram(std::move(xs), std::move(os));
}

std::vector<DestabSite> destabilization_sites(const GridDiagram& d) {
  std::vector<DestabSite> sites;
  const int n = d.size();
  if (n < 3) return sites;
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row < n; ++row) {
      if (auto v = block_variant(d, col, row)) sites.push_back({col, row, *v});
    }
  }
  return sites;
}

GridDiagram destabilize(const GridDiagram& d, const DestabSite& site) {
  const int n = d.size();
  if (site.col < 0 || site.col >= n || site.row < 0 || site.row >= n) {
    throw DomainError("destabilization site out of range");
  }
  auto v = block_variant(d, site.col, site.row);
  if (!v || *v != site.variant) {
    throw DomainError("destabilization site (" + std::to_string(site.col) + "," +
                      std::to_string(site.row) + ") " + std::string(to_string(site.variant)) +
                      " is not valid on this diagram");
  }
  // Bring a wrapping block into the planar realization.
  GridDiagram g = d;
  int c = site.col, r = site.row;
  if (c == n - 1) {
    g = cyclic_permute(g, Axis::cols, -1);
    c = n - 2;
  }
  if (r == n - 1) {
    g = cyclic_permute(g, Axis::rows, -1);
    r = n - 2;
  }

  auto [bx, by] = blank_offset(site.variant);
  const int blank_col = c + bx, blank_row = r + by;
  const int merged_o_row = g.o_rows()[blank_col];
  const int merged_o_col = g.o_col(blank_row);
  auto map_row = [&](int j) { return j <= r ? j : (j == r + 1 ? r : j - 1); };
  auto map_col = [&](int k) { return k <= c ? k : (k == c + 1 ? c : k - 1); };

  std::vector<int> xs(n - 1), os(n - 1);
  for (int k = 0; k < n; ++k) {
    if (k == c || k == c + 1) continue;
    xs[map_col(k)] = map_row(g.x_rows()[k]);
    os[map_col(k)] = k == merged_o_col ? r : map_row(g.o_rows()[k]);
  }
  xs[c] = r;
  os[c] = map_row(merged_o_row);
  return GridDiagram(std::move(xs), std::move(os));
}

std::string describe(const MoveRecord& m) {
  std::string s(to_string(m.kind));
  switch (m.kind) {
    case MoveKind::cyclic_row:
    case MoveKind::cyclic_col: s += " k=" + std::to_string(m.index); break;
    case MoveKind::stabilize:
      s += " c=" + std::to_string(m.index) + " " + std::string(to_string(m.variant));
      break;
    case MoveKind::destabilize:
      s += " at=(" + std::to_string(m.index) + "," + std::to_string(m.row) + ") " +
           std::string(to_string(m.variant));
      break;
    default: s += " i=" + std::to_string(m.index); break;
  }
  return s;
}

GridDiagram apply_move(const GridDiagram& d, const MoveRecord& m) {
  switch (m.kind) {
    case MoveKind::cyclic_row: return cyclic_permute(d, Axis::rows, m.index);
    case MoveKind::cyclic_col: return cyclic_permute(d, Axis::cols, m.index);
    case MoveKind::commute_col: return commute(d, Axis::cols, m.index);
    case MoveKind::commute_row: return commute(d, Axis::rows, m.index);
    case MoveKind::cross_commute_col: return cross_commute(d, Axis::cols, m.index);
    case MoveKind::cross_commute_row: return cross_commute(d, Axis::rows, m.index);
    case MoveKind::stabilize: return stabilize(d, m.index, m.variant);
    case MoveKind::destabilize: return destabilize(d, {m.index, m.row, m.variant});
  }
  throw DomainError("unknown move kind");
}

std::vector<MoveRecord> legal_moves(const GridDiagram& d, int max_n) {
  const int n = d.size();
  std::vector<MoveRecord> moves;
  for (int k : {1, n - 1}) {
    moves.push_back({MoveKind::cyclic_row, k});
    moves.push_back({MoveKind::cyclic_col, k});
  }
  for (int i = 0; i < n; ++i) {
    if (classify_adjacent_interchange(d, Axis::cols, i) == InterchangeKind::commutation) {
      moves.push_back({MoveKind::commute_col, i});
    }
    if (classify_adjacent_interchange(d, Axis::rows, i) == InterchangeKind::commutation) {
      moves.push_back({MoveKind::commute_row, i});
    }
  }
  if (n < max_n) {
    for (int c = 0; c < n; ++c) {
      for (StabVariant v : kVariants) moves.push_back({MoveKind::stabilize, c, 0, v});
    }
  }
  for (const DestabSite& s : destabilization_sites(d)) {
    moves.push_back({MoveKind::destabilize, s.col, s.row, s.variant});
  }
  return moves;
}

std::vector<std::pair<MoveRecord, GridDiagram>> random_moves(const GridDiagram& d,
                                                             std::uint64_t seed, int count,
                                                             int max_n) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<MoveRecord, GridDiagram>> out;
  out.reserve(count > 0 ? count : 0);
  GridDiagram current = d;
  for (int step = 0; step < count; ++step) {
    auto moves = legal_moves(current, max_n);
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    MoveRecord m = moves[pick(rng)];
    m.seed = seed;
    m.step = static_cast<std::uint64_t>(step);
    current = apply_move(current, m);
    out.emplace_back(m, current);
  }
  return out;
}

}  // namespace gridups
