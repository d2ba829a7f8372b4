#include "gridups/homology.hpp"

#include <algorithm>
#include <numeric>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "gridups/errors.hpp"
#include "json.hpp"

namespace gridups {

namespace {

void require_homogeneous(const TComplex& c) {
  if (!check_degree_homogeneity(c)) throw DomainError("complex is not homogeneous");
}

/// Mutable copy of a complex reduced by pivot elimination over F2[[u]].
///
/// Pivoting on entry a = <dx, y> with minimal valuation splits off the
/// summand x -> a*y' and leaves the Schur complement
///   <dz, w> -= (<dz, y> / a) <dx, w>
/// on the remaining generators.
class Reducer {
 public:
  Reducer(const TComplex& c, std::uint32_t limit)
      : limit_(limit), gens_(c.generators), cols_(c.size()), rows_(c.size()), alive_(c.size(), 1) {
    for (std::size_t x = 0; x < c.size(); ++x) {
      for (const ComplexEntry& e : c.columns[x]) {
        MonomialPoly p = e.coeff.truncated(limit_);
        if (p.is_zero()) continue;
        cols_[x].emplace(e.target, std::move(p));
        rows_[e.target].insert(static_cast<std::uint32_t>(x));
      }
    }
  }

  // Cancels unit entries until none remain, scanning columns in stored order.
  // Within a column the target hit by the fewest other columns is taken,
  // which keeps Schur fill-in small.
  void cancel_units() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::uint32_t x = 0; x < cols_.size(); ++x) {
        while (alive_[x]) {
          std::uint32_t best = x;
          std::size_t best_hits = 0;
          for (const auto& [y, poly] : cols_[x]) {
            if (y == x || !poly.is_unit()) continue;
            if (best == x || rows_[y].size() < best_hits) {
              best = y;
              best_hits = rows_[y].size();
            }
          }
          if (best == x) break;
          pivot(x, best);
          progress = true;
        }
      }
    }
  }

  // Pivots on a minimal-valuation entry until the differential vanishes.
  // Diagonal entries u^q x are homogeneous but never pivots: if one has
  // minimal valuation v, d^2 = 0 forces an off-diagonal pair of valuation v.
  void reduce_all() {
    cancel_units();
    for (;;) {
      bool found = false, diagonal_only = false;
      std::uint32_t best_x = 0, best_y = 0, best_v = 0;
      for (std::uint32_t x = 0; x < cols_.size(); ++x) {
        for (const auto& [y, poly] : cols_[x]) {
          if (y == x) {
            diagonal_only = true;
            continue;
          }
          if (!found || poly.valuation() < best_v) {
            found = true;
            best_x = x;
            best_y = y;
            best_v = poly.valuation();
          }
        }
      }
      if (!found) {
        if (diagonal_only) throw EngineDefect("differential does not square to zero");
        break;
      }
      pivot(best_x, best_y);
    }
  }

  TComplex remaining(const RationalT& t) const {
    std::vector<std::uint32_t> index(gens_.size(), 0);
    TComplex out;
    out.t = t;
    for (std::size_t x = 0; x < gens_.size(); ++x) {
      if (!alive_[x]) continue;
      index[x] = static_cast<std::uint32_t>(out.generators.size());
      out.generators.push_back(gens_[x]);
    }
    for (std::size_t x = 0; x < gens_.size(); ++x) {
      if (!alive_[x]) continue;
      auto& col = out.columns.emplace_back();
      for (const auto& [y, poly] : cols_[x]) col.push_back({index[y], poly});
      std::sort(col.begin(), col.end(),
                [](const ComplexEntry& a, const ComplexEntry& b) { return a.target < b.target; });
    }
    return out;
  }

  std::vector<std::int64_t> free_gradings() const {
    std::vector<std::int64_t> out;
    for (std::size_t x = 0; x < gens_.size(); ++x) {
      if (alive_[x]) out.push_back(gens_[x].grading);
    }
    return out;
  }

  const std::vector<TorsionTower>& torsion() const { return torsion_; }

 private:
  void set_entry(std::uint32_t z, std::uint32_t w, MonomialPoly value) {
    if (value.is_zero()) {
      if (cols_[z].erase(w) > 0) rows_[w].erase(z);
    } else {
      cols_[z][w] = std::move(value);
      rows_[w].insert(z);
    }
  }

  void pivot(std::uint32_t x, std::uint32_t y) {
    const MonomialPoly a = cols_[x].at(y);
    std::vector<std::pair<std::uint32_t, MonomialPoly>> col_x;
    for (const auto& [w, poly] : cols_[x]) {
      if (w != y) col_x.emplace_back(w, poly);
    }
    const std::vector<std::uint32_t> hitting_y(rows_[y].begin(), rows_[y].end());
    for (std::uint32_t z : hitting_y) {
      if (z == x) continue;
      const MonomialPoly factor = cols_[z].at(y).divide(a, limit_);
      for (const auto& [w, b] : col_x) {
        MonomialPoly updated = factor.multiply(b, limit_);
        if (updated.is_zero()) continue;
        auto it = cols_[z].find(w);
        if (it != cols_[z].end()) updated += it->second;
        set_entry(z, w, std::move(updated));
      }
      set_entry(z, y, {});
    }
    for (std::uint32_t g : {x, y}) {
      for (const auto& [w, poly] : cols_[g]) rows_[w].erase(g);
      cols_[g].clear();
      for (std::uint32_t z : rows_[g]) cols_[z].erase(g);
      rows_[g].clear();
      alive_[g] = 0;
    }
    if (a.valuation() > 0) torsion_.push_back({gens_[y].grading, a.valuation()});
  }

  std::uint32_t limit_;
  std::vector<ComplexGenerator> gens_;
  std::vector<std::map<std::uint32_t, MonomialPoly>> cols_;
  std::vector<std::set<std::uint32_t>> rows_;
  std::vector<char> alive_;
  std::vector<TorsionTower> torsion_;
};

// Reorders generators by (grading, state).
TComplex canonical_order(const TComplex& c) {
  std::vector<std::uint32_t> order(c.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto& ga = c.generators[a];
    const auto& gb = c.generators[b];
    return std::tie(ga.grading, ga.state) < std::tie(gb.grading, gb.state);
  });
  std::vector<std::uint32_t> position(c.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  TComplex out;
  out.t = c.t;
  for (std::uint32_t old : order) {
    out.generators.push_back(c.generators[old]);
    auto& col = out.columns.emplace_back();
    for (const ComplexEntry& e : c.columns[old]) col.push_back({position[e.target], e.coeff});
    std::sort(col.begin(), col.end(),
              [](const ComplexEntry& a, const ComplexEntry& b) { return a.target < b.target; });
  }
  return out;
}

TowerDecomposition reduce_at(const TComplex& c, std::uint32_t limit) {
  Reducer r(c, limit);
  r.reduce_all();
  TowerDecomposition dec;
  dec.t = c.t;
  dec.free_towers = r.free_gradings();
  dec.torsion_towers = r.torsion();
  std::sort(dec.free_towers.begin(), dec.free_towers.end());
  std::sort(dec.torsion_towers.begin(), dec.torsion_towers.end());
  dec.truncation_used = limit;
  return dec;
}

// Rank over F2 of a matrix given by columns of row indices.
std::size_t f2_rank(const std::vector<std::vector<std::uint32_t>>& columns, std::size_t nrows) {
  const std::size_t words = (nrows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivots(nrows);
  std::size_t rank = 0;
  for (const auto& col : columns) {
    std::vector<std::uint64_t> v(words, 0);
    for (std::uint32_t r : col) v[r / 64] ^= std::uint64_t{1} << (r % 64);
    for (;;) {
      std::size_t w = words;
      while (w > 0 && v[w - 1] == 0) --w;
      if (w == 0) break;
      const std::size_t lead = (w - 1) * 64 + (63 - static_cast<std::size_t>(__builtin_clzll(v[w - 1])));
      if (pivots[lead].empty()) {
        pivots[lead] = std::move(v);
        ++rank;
        break;
      }
      for (std::size_t i = 0; i < w; ++i) v[i] ^= pivots[lead][i];
    }
  }
  return rank;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

bool TowerDecomposition::same_towers(const TowerDecomposition& other) const {
  return free_towers == other.free_towers && torsion_towers == other.torsion_towers;
}

TComplex cancel_unit_pairs(const TComplex& c) {
  require_homogeneous(c);
  Reducer r(c, kNoTruncation);
  r.cancel_units();
  return r.remaining(c.t);
}

TowerDecomposition decompose(const TComplex& c, int grid_number, const DecomposeOptions& options) {
  require_homogeneous(c);
  const TComplex reduced = cancel_unit_pairs(canonical_order(c));
  if (options.truncation) {
    if (*options.truncation == 0) throw DomainError("truncation must be positive");
    return reduce_at(reduced, *options.truncation);
  }
  std::uint32_t depth = static_cast<std::uint32_t>(8 * c.t.q() * std::max(grid_number, 1));
  TowerDecomposition prev = reduce_at(reduced, depth);
  for (int round = 0; round < options.doubling_budget; ++round) {
    TowerDecomposition next = reduce_at(reduced, 2 * depth);
    if (next.same_towers(prev)) return prev;
    prev = std::move(next);
    depth *= 2;
  }
  throw EngineDefect("tower decomposition did not stabilise by truncation " +
                     std::to_string(depth));
}

std::map<std::int64_t, std::size_t> truncated_dims_oracle(const TComplex& c, std::uint32_t depth) {
  if (depth == 0) throw DomainError("oracle depth must be positive");
  // Expanded basis u^k x grouped by grading g(x) - k.
  std::map<std::int64_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>> blocks;
  for (std::uint32_t x = 0; x < c.size(); ++x) {
    for (std::uint32_t k = 0; k < depth; ++k) {
      blocks[c.generators[x].grading - static_cast<std::int64_t>(k)].emplace_back(x, k);
    }
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> position;
  for (const auto& [g, elems] : blocks) {
    for (std::uint32_t i = 0; i < elems.size(); ++i) position[elems[i]] = i;
  }
  const std::int64_t q = c.t.q();
  std::map<std::int64_t, std::size_t> rank_out;
  for (const auto& [g, elems] : blocks) {
    auto target = blocks.find(g - q);
    if (target == blocks.end()) continue;
    std::vector<std::vector<std::uint32_t>> cols;
    for (const auto& [x, k] : elems) {
      auto& col = cols.emplace_back();
      for (const ComplexEntry& e : c.columns[x]) {
        for (std::uint32_t exp : e.coeff.exponents()) {
          if (static_cast<std::uint64_t>(k) + exp < depth) {
            col.push_back(position.at({e.target, k + exp}));
          }
        }
      }
      // Duplicate rows cancel mod 2.
      std::sort(col.begin(), col.end());
      std::vector<std::uint32_t> odd;
      for (std::size_t i = 0; i < col.size();) {
        std::size_t j = i;
        while (j < col.size() && col[j] == col[i]) ++j;
        if ((j - i) % 2) odd.push_back(col[i]);
        i = j;
      }
      col = std::move(odd);
    }
    rank_out[g] = f2_rank(cols, target->second.size());
  }
  std::map<std::int64_t, std::size_t> dims;
  for (const auto& [g, elems] : blocks) {
    std::size_t dim = elems.size();
    if (auto it = rank_out.find(g); it != rank_out.end()) dim -= it->second;
    if (auto it = rank_out.find(g + q); it != rank_out.end()) dim -= it->second;
    if (dim > 0) dims[g] = dim;
  }
  return dims;
}

std::map<std::int64_t, std::size_t> implied_truncated_dims(const TowerDecomposition& dec,
                                                           std::uint32_t depth) {
  const std::int64_t q = dec.t.q();
  const auto d = static_cast<std::int64_t>(depth);
  std::map<std::int64_t, std::size_t> dims;
  auto tower = [&](std::int64_t top, std::int64_t from, std::int64_t to) {
    for (std::int64_t j = from; j < to; ++j) ++dims[top - j];
  };
  for (std::int64_t g : dec.free_towers) tower(g, 0, d);
  for (const TorsionTower& t : dec.torsion_towers) {
    const auto k = static_cast<std::int64_t>(t.length);
    const std::int64_t source = t.grading + q - k;
    if (k < d) {
      tower(t.grading, 0, k);
      tower(source, d - k, d);
    } else {
      tower(t.grading, 0, d);
      tower(source, 0, d);
    }
  }
  return dims;
}

std::int64_t truncation_horizon(const TowerDecomposition& dec, std::uint32_t depth) {
  std::int64_t top = std::numeric_limits<std::int64_t>::min();
  std::int64_t longest = 0;
  for (std::int64_t g : dec.free_towers) top = std::max(top, g);
  for (const TorsionTower& t : dec.torsion_towers) {
    top = std::max(top, t.grading + dec.t.q() - static_cast<std::int64_t>(t.length));
    longest = std::max(longest, static_cast<std::int64_t>(t.length));
  }
  if (top == std::numeric_limits<std::int64_t>::min()) return top;
  return top - static_cast<std::int64_t>(depth) + longest;
}

std::map<std::pair<int, Rational>, std::size_t> fully_blocked_dims(const GridDiagram& d,
                                                                    const StateGuard& guard) {
  const FullyBlockedComplex c = build_fully_blocked(d, guard);
  std::map<Bigrading, std::vector<std::uint32_t>> blocks;
  for (std::uint32_t x = 0; x < c.size(); ++x) blocks[c.gradings[x]].push_back(x);
  std::vector<std::uint32_t> position(c.size());
  for (const auto& [g, elems] : blocks) {
    for (std::uint32_t i = 0; i < elems.size(); ++i) position[elems[i]] = i;
  }
  // The differential lowers M_O by one and keeps A.
  std::map<Bigrading, std::size_t> rank_out;
  for (const auto& [g, elems] : blocks) {
    auto target = blocks.find({g.maslov - 1, g.alexander_x2});
    std::vector<std::vector<std::uint32_t>> cols;
    for (std::uint32_t x : elems) {
      auto& col = cols.emplace_back();
      for (std::uint32_t y : c.columns[x]) {
        if (c.gradings[y] != Bigrading{g.maslov - 1, g.alexander_x2}) {
          throw EngineDefect("fully blocked differential is not bigraded");
        }
        col.push_back(position[y]);
      }
    }
    if (target != blocks.end()) rank_out[g] = f2_rank(cols, target->second.size());
  }
  std::map<std::pair<int, Rational>, std::size_t> dims;
  for (const auto& [g, elems] : blocks) {
    std::size_t dim = elems.size();
    if (auto it = rank_out.find(g); it != rank_out.end()) dim -= it->second;
    if (auto it = rank_out.find({g.maslov + 1, g.alexander_x2}); it != rank_out.end()) {
      dim -= it->second;
    }
    if (dim > 0) dims[{g.maslov, Rational(g.alexander_x2, 2)}] = dim;
  }
  return dims;
}

TowerDecomposition tensor_with_w(const TowerDecomposition& dec, int copies, std::int64_t shift) {
  TowerDecomposition out;
  out.t = dec.t;
  out.truncation_used = dec.truncation_used;
  for (int k = 0; k <= copies; ++k) {
    const std::uint64_t mult = binomial(copies, k);
    for (std::uint64_t m = 0; m < mult; ++m) {
      for (std::int64_t g : dec.free_towers) out.free_towers.push_back(g + k * shift);
      for (const TorsionTower& t : dec.torsion_towers) {
        out.torsion_towers.push_back({t.grading + k * shift, t.length});
      }
    }
  }
  std::sort(out.free_towers.begin(), out.free_towers.end());
  std::sort(out.torsion_towers.begin(), out.torsion_towers.end());
  return out;
}

std::string to_json(const TowerDecomposition& dec) {
  nlohmann::ordered_json j;
  j["t"] = dec.t.str();
  j["rank"] = dec.rank();
  j["free"] = dec.free_towers;
  auto torsion = nlohmann::ordered_json::array();
  for (const TorsionTower& t : dec.torsion_towers) torsion.push_back({t.grading, t.length});
  j["torsion"] = std::move(torsion);
  j["truncation"] = dec.truncation_used;
  return j.dump();
}

}  // namespace gridups
