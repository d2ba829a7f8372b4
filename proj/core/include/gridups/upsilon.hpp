#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridups/grid.hpp"
#include "gridups/homology.hpp"
#include "gridups/moves.hpp"
#include "gridups/rational.hpp"
#include "gridups/rational_t.hpp"
#include "gridups/states.hpp"

namespace gridups {

struct EvalOptions {
  StateGuard guard;
  std::optional<std::uint32_t> truncation;
};

enum class HalfInterval { lower, upper };  // [0,1] or [1,2]

struct HalfIntervalReport {
  HalfInterval selected = HalfInterval::lower;
  // Scaled shift of the extra tower copy at t = 1/2 (q = 2).
  std::int64_t observed_shift = 0;
  std::vector<std::string> variants_checked;
};

// Decomposes unknot(2) and its four X-stabilizations at t = 1/2 and reports
// on which half of [0,2] the maximal free grading is unchanged. Throws
// EngineDefect if the stabilized towers are not the original tensored
// with a two-tower space.
HalfIntervalReport run_half_interval_self_test();

// Cached result of run_half_interval_self_test().
HalfInterval invariant_half_interval();

// Scaled grading shift of the W-factor at t: q*(t-1) when the lower half
// is invariant, q*(1-t) otherwise.
std::int64_t stabilization_shift(const RationalT& t);

// Upsilon at t. Zero at t = 0, 2; computed on the invariant half and
// reflected to the other.
Rational upsilon_at(const GridDiagram& d, const RationalT& t, const EvalOptions& options = {});

struct UpsilonSegment {
  Rational from;
  Rational to;
  Rational slope;
};

struct UpsilonProfile {
  int denominator = 0;
  std::vector<Rational> t;
  std::vector<Rational> values;
  std::vector<UpsilonSegment> segments;

  bool endpoints_zero = false;
  bool denominators_ok = false;
  bool slopes_integral = false;
  bool symmetric = false;

  bool valid() const { return endpoints_zero && denominators_ok && slopes_integral && symmetric; }
};

// Samples k/N for k = 0..2N. Throws EngineDefect if a validation fails.
UpsilonProfile upsilon_profile(const GridDiagram& d, int denominator,
                               const EvalOptions& options = {});

// Same samples without the throwing validation; flags are still set.
UpsilonProfile sample_profile(const GridDiagram& d, int denominator,
                              const EvalOptions& options = {});

std::string profile_csv(const UpsilonProfile& p);
std::string profile_json(const UpsilonProfile& p);

// -N*Upsilon(1/N) for the first N in {4, 8, 16} where the slope at 0 has
// settled. Throws EngineDefect if it never does.
int tau_of(const GridDiagram& d, const EvalOptions& options = {});

struct UnknottingBound {
  Rational value;       // max |Upsilon(t)|/t over samples with 0 < t <= 1
  std::int64_t bound;   // ceil(value)
};

UnknottingBound unknotting_lower_bound(const UpsilonProfile& p);

struct CrossingCheck {
  Rational t;
  Rational first;   // Upsilon of the first diagram
  Rational second;  // Upsilon of the second diagram
  bool holds = false;
  // true when the first diagram plays K_+ in the satisfying assignment.
  bool first_is_positive = false;
};

// Checks Upsilon_+ <= Upsilon_- <= Upsilon_+ + t for both role
// assignments; t must lie in [0,1].
CrossingCheck crossing_pair_check(const GridDiagram& a, const GridDiagram& b, const RationalT& t,
                                  const EvalOptions& options = {});

struct AuditStep {
  std::optional<MoveRecord> move;  // empty for the starting diagram
  GridDiagram diagram;
  std::vector<Rational> values;  // one per audited t
  std::optional<bool> towers_match;
};

struct AuditReport {
  std::vector<RationalT> t_values;
  std::vector<AuditStep> steps;
  bool pass = false;
  bool truncated = false;  // guard refusal cut the sequence short
  std::string note;
};

struct AuditOptions {
  EvalOptions eval;
  // Compare full tower multisets against the start tensored with W^(n'-n).
  bool compare_towers = false;
};

AuditReport invariance_audit(const GridDiagram& d, std::uint64_t seed, int move_count, int max_n,
                             const std::vector<RationalT>& t_values,
                             const AuditOptions& options = {});

std::string to_json(const AuditReport& report);

}  // namespace gridups
