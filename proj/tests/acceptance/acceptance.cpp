// One line per acceptance criterion; exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "gridups/errors.hpp"
#include "gridups/homology.hpp"
#include "gridups/tcomplex.hpp"
#include "gridups/upsilon.hpp"
#include "random_grids.hpp"
#include "rectangles.hpp"
#include "signature.hpp"
#include "synthetic.hpp"

using namespace gridups;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

// Every Upsilon value reported by criteria 4, 5 and 7, for the arithmetic check.
std::vector<std::pair<RationalT, Rational>> reported;

Rational record(const RationalT& t, const Rational& v) {
  reported.emplace_back(t, v);
  return v;
}

std::vector<GridDiagram> all_diagrams(int n) {
  std::vector<int> xs(n), os(n);
  std::iota(xs.begin(), xs.end(), 0);
  std::vector<GridDiagram> out;
  do {
    std::iota(os.begin(), os.end(), 0);
    do {
      bool clash = false;
      for (int c = 0; c < n; ++c) clash = clash || xs[c] == os[c];
      if (!clash) out.emplace_back(xs, os);
    } while (std::next_permutation(os.begin(), os.end()));
  } while (std::next_permutation(xs.begin(), xs.end()));
  return out;
}

std::vector<GridDiagram> presets_up_to_5() {
  return {preset_unknot(2), preset_unknot(3), preset_unknot(4), preset_unknot(5), preset_torus(2, 3),
          mirror(preset_torus(2, 3))};
}

std::string str(const Rational& r) { return to_string(r); }

Outcome differential_validity() {
  Outcome o;
  std::vector<GridDiagram> diagrams = presets_up_to_5();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const GridDiagram start = seed % 2 ? preset_torus(2, 3) : preset_unknot(3);
    diagrams.push_back(oracle::scramble(start, seed, 15, 5));
  }
  for (const GridDiagram& d : diagrams) {
    for (RationalT t : {RationalT(1, 3), RationalT(1, 2), RationalT(2, 3), RationalT(1, 1)}) {
      TComplex c = build_t_complex(d, t);
      o.require(check_boundary_squared(c), "d^2 != 0 on " + serialize_grid(d) + " at " + t.str());
      o.require(check_degree_homogeneity(c), "inhomogeneous on " + serialize_grid(d) + " at " + t.str());
    }
  }
  o.detail = o.pass ? std::to_string(diagrams.size()) + " diagrams x 4 t" : o.detail;
  return o;
}

Outcome grading_relations() {
  Outcome o;
  std::size_t rectangles = 0;
  for (int n = 2; n <= 4; ++n) {
    for (const GridDiagram& d : all_diagrams(n)) {
      const auto states = enumerate_states(d);
      std::vector<StateGradings> g;
      for (const GridState& s : states) g.push_back(gradings(d, s));
      for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = 0; j < states.size(); ++j) {
          for (const Rectangle& r : connecting_rectangles(states[i], states[j])) {
            ++rectangles;
            const RectangleData k = oracle::count_cells(d, states[i], r);
            const int dm = g[i].maslov_o - g[j].maslov_o;
            const int dmx = g[i].maslov_x - g[j].maslov_x;
            const int da2 = g[i].alexander_x2 - g[j].alexander_x2;
            o.require(dm == 1 - 2 * k.o_count + 2 * k.interior_points, "Maslov relation on " + serialize_grid(d));
            o.require(dmx == 1 - 2 * k.x_count + 2 * k.interior_points, "X-Maslov relation on " + serialize_grid(d));
            o.require(da2 == 2 * (k.x_count - k.o_count), "Alexander relation on " + serialize_grid(d));
          }
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(rectangles) + " rectangles";
  return o;
}

Outcome rank_lemma() {
  Outcome o;
  std::vector<GridDiagram> diagrams;
  for (int n = 2; n <= 6; ++n) diagrams.push_back(preset_unknot(n));
  diagrams.push_back(preset_torus(2, 3));
  for (const GridDiagram& d : diagrams) {
    for (RationalT t : {RationalT(1, 2), RationalT(1, 1)}) {
      const std::size_t rank = decompose(build_t_complex(d, t), d.size()).rank();
      o.require(rank == (std::size_t{1} << (d.size() - 1)),
                "rank " + std::to_string(rank) + " on n=" + std::to_string(d.size()) + " at " + t.str());
    }
  }
  return o;
}

Outcome known_values() {
  Outcome o;
  const GridDiagram tref = preset_torus(2, 3);
  o.require(oracle::signature(tref) == -2 && oracle::writhe(tref) == 3,
            "signature oracle does not see a positive trefoil");
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k <= 8; ++k) {
      const RationalT t(k, 4);
      o.require(record(t, upsilon_at(preset_unknot(n), t)) == Rational(0), "unknot nonzero at " + t.str());
    }
  }
  for (RationalT t : {RationalT(1, 4), RationalT(1, 3), RationalT(1, 2), RationalT(2, 3), RationalT(1, 1)}) {
    const Rational a = record(t, upsilon_at(tref, t));
    const Rational b = record(t, upsilon_at(mirror(tref), t));
    o.require(a == -t.value(), "trefoil " + str(a) + " at " + t.str());
    o.require(b == t.value(), "mirror trefoil " + str(b) + " at " + t.str());
  }
  return o;
}

bool audit_passes(const GridDiagram& d, std::uint64_t seed, Outcome& o, const std::string& name) {
  AuditOptions opts;
  opts.compare_towers = true;
  const std::vector<RationalT> ts{RationalT(1, 2), RationalT(1, 1)};
  AuditReport r = invariance_audit(d, seed, 20, 7, ts, opts);
  for (const AuditStep& s : r.steps) {
    for (std::size_t i = 0; i < ts.size() && i < s.values.size(); ++i) record(ts[i], s.values[i]);
    o.require(!s.towers_match || *s.towers_match, name + ": tower multisets differ");
  }
  o.require(!r.truncated, name + ": truncated by the guard");
  o.require(r.pass, name + ": Upsilon changed");
  o.require(r.steps.size() == 21, name + ": short sequence");
  return r.pass;
}

bool move_invariance_passed = false;

Outcome move_invariance() {
  Outcome o;
  audit_passes(preset_unknot(2), 7, o, "unknot(2)");
  audit_passes(preset_torus(2, 3), 3, o, "trefoil");
  move_invariance_passed = o.pass;
  if (o.pass) o.detail = "20 moves each, max_n 7, towers compared";
  return o;
}

Outcome half_interval() {
  Outcome o;
  HalfIntervalReport r = run_half_interval_self_test();
  const RationalT t(1, 2);
  const TowerDecomposition base = decompose(build_t_complex(preset_unknot(2), t), 2);
  for (StabVariant v : {StabVariant::sw, StabVariant::se, StabVariant::nw, StabVariant::ne}) {
    const GridDiagram s = stabilize(preset_unknot(2), 0, v);
    const TowerDecomposition towers = decompose(build_t_complex(s, t), 3);
    // Extra copy at scaled shift 0 and (t-1)q, i.e. gr_t in {0, t-1} relative.
    o.require(towers.same_towers(tensor_with_w(base, 1, t.p() - t.q())),
              std::string("stabilization ") + std::string(to_string(v)) + " is not a shift by t-1");
  }
  o.require(r.selected == HalfInterval::lower, "self-test selected [1,2]");
  o.require(move_invariance_passed, "criterion 5 did not pass with the selected half");
  if (o.pass) o.detail = "invariant half [0,1], shift " + std::to_string(r.observed_shift);
  return o;
}

Outcome crossing_change() {
  Outcome o;
  const GridDiagram tref = preset_torus(2, 3);
  const GridDiagram unknot = cross_commute(tref, Axis::cols, 0);
  for (RationalT t : {RationalT(1, 4), RationalT(1, 2), RationalT(1, 1)}) {
    CrossingCheck c = crossing_pair_check(tref, unknot, t);
    record(t, c.first);
    record(t, c.second);
    o.require(c.holds, "inequality fails at " + t.str());
  }
  const UnknottingBound b = unknotting_lower_bound(upsilon_profile(tref, 4));
  o.require(b.bound == 1, "unknotting bound " + std::to_string(b.bound));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t complexes = 0;
  for (int n = 2; n <= 4; ++n) {
    for (const GridDiagram& d : all_diagrams(n)) {
      if (component_count(d) != 1) continue;
      for (RationalT t : {RationalT(1, 2), RationalT(1, 1)}) {
        ++complexes;
        TComplex c = build_t_complex(d, t);
        const TowerDecomposition dec = decompose(c, n);
        for (std::uint32_t depth : {3u, 6u}) {
          auto truth = truncated_dims_oracle(c, depth);
          auto implied = implied_truncated_dims(dec, depth);
          const std::int64_t horizon = truncation_horizon(dec, depth);
          truth.erase(truth.begin(), truth.upper_bound(horizon));
          implied.erase(implied.begin(), implied.upper_bound(horizon));
          o.require(truth == implied, "mismatch on " + serialize_grid(d) + " at " + t.str());
        }
      }
    }
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    oracle::SyntheticComplex s = oracle::random_complex(rng, 12);
    const TowerDecomposition dec = decompose(s.complex, 4);
    o.require(dec.same_towers(s.expected), "synthetic complex " + std::to_string(i) + " towers");
    for (std::uint32_t depth : {2u, 5u}) {
      o.require(truncated_dims_oracle(s.complex, depth) == implied_truncated_dims(dec, depth),
                "synthetic complex " + std::to_string(i) + " dims");
    }
  }
  if (o.pass) o.detail = std::to_string(complexes) + " grid complexes + 100 synthetic";
  return o;
}

Outcome arithmetic() {
  Outcome o;
  for (const auto& [t, v] : reported) {
    o.require((v * Rational(t.q())).denominator() == 1, "Upsilon(" + t.str() + ") = " + str(v));
  }
  std::vector<GridDiagram> diagrams = presets_up_to_5();
  for (std::uint64_t seed = 1; seed <= 4; ++seed) diagrams.push_back(oracle::scramble(preset_torus(2, 3), seed, 10, 6));
  std::size_t profiles = 0;
  for (const GridDiagram& d : diagrams) {
    for (int n : {4, 6}) {
      ++profiles;
      const UpsilonProfile p = sample_profile(d, n);
      o.require(p.endpoints_zero, "nonzero endpoint");
      o.require(p.denominators_ok, "denominator not dividing N");
      o.require(p.slopes_integral, "fractional slope");
      for (std::size_t k = 0; k < p.t.size(); ++k) {
        const Rational q(p.t[k].denominator());
        o.require((p.values[k] * q).denominator() == 1, "value times q not integral");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(reported.size()) + " values, " + std::to_string(profiles) + " profiles";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "differential validity", 120, differential_validity},
      {2, "grading relations", 60, grading_relations},
      {3, "rank lemma", 180, rank_lemma},
      {4, "known values", 120, known_values},
      {5, "move invariance", 600, move_invariance},
      {6, "half-interval self-test", 60, half_interval},
      {7, "crossing-change inequality", 60, crossing_change},
      {8, "engine oracle equivalence", 180, oracle_equivalence},
      {9, "arithmetic guarantees", 120, arithmetic},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.detail = "over budget; " + o.detail;
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %d %-28s %7.2fs / %4.0fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.budget_s, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
