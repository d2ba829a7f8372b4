#include "gridups/upsilon.hpp"

#include <algorithm>
#include <map>

#include "gridups/errors.hpp"
#include "gridups/tcomplex.hpp"
#include "json.hpp"

namespace gridups {

namespace {

struct Evaluation {
  RationalT t;  // point actually computed, inside the invariant half
  Rational value;
  TowerDecomposition towers;
};

RationalT into_invariant_half(const RationalT& t) {
  const bool lower = t.p() <= t.q();
  const bool want_lower = invariant_half_interval() == HalfInterval::lower;
  return lower == want_lower ? t : t.reflected();
}

Evaluation evaluate(const GridDiagram& d, const RationalT& t, const EvalOptions& options) {
  TComplex c = build_t_complex(d, t, options.guard);
  DecomposeOptions dopt;
  dopt.truncation = options.truncation;
  TowerDecomposition dec = decompose(c, d.size(), dopt);
  if (dec.free_towers.empty()) throw EngineDefect("homology has no free tower at t = " + t.str());
  return {t, Rational(dec.free_towers.back(), t.q()), std::move(dec)};
}

void require_knot(const GridDiagram& d) {
  if (component_count(d) != 1) throw DomainError("diagram is a link, not a knot");
}

bool integral(const Rational& r) { return r.denominator() == 1; }

Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

}  // namespace

HalfIntervalReport run_half_interval_self_test() {
  const RationalT t(1, 2);
  const GridDiagram base = preset_unknot(2);
  const TowerDecomposition base_towers = decompose(build_t_complex(base, t), base.size());
  const std::int64_t lower_shift = t.p() - t.q();  // extra copy at gr_t = t - 1
  const std::int64_t upper_shift = t.q() - t.p();  // extra copy at gr_t = 1 - t

  HalfIntervalReport report;
  bool lower_ok = true, upper_ok = true;
  for (StabVariant v : {StabVariant::sw, StabVariant::se, StabVariant::nw, StabVariant::ne}) {
    const GridDiagram stab = stabilize(base, 0, v);
    const TowerDecomposition towers = decompose(build_t_complex(stab, t), stab.size());
    lower_ok = lower_ok && towers.same_towers(tensor_with_w(base_towers, 1, lower_shift));
    upper_ok = upper_ok && towers.same_towers(tensor_with_w(base_towers, 1, upper_shift));
    report.variants_checked.emplace_back(to_string(v));
  }
  if (lower_ok == upper_ok) {
    throw EngineDefect("stabilized towers do not match a single W-shift");
  }
  report.selected = lower_ok ? HalfInterval::lower : HalfInterval::upper;
  report.observed_shift = lower_ok ? lower_shift : upper_shift;
  return report;
}

HalfInterval invariant_half_interval() {
  static const HalfInterval selected = run_half_interval_self_test().selected;
  return selected;
}

std::int64_t stabilization_shift(const RationalT& t) {
  return invariant_half_interval() == HalfInterval::lower ? t.p() - t.q() : t.q() - t.p();
}

Rational upsilon_at(const GridDiagram& d, const RationalT& t, const EvalOptions& options) {
  require_knot(d);
  if (t.degenerate()) return Rational(0);
  return evaluate(d, into_invariant_half(t), options).value;
}

UpsilonProfile sample_profile(const GridDiagram& d, int denominator, const EvalOptions& options) {
  if (denominator < 1) throw DomainError("sample denominator must be positive");
  require_knot(d);
  UpsilonProfile p;
  p.denominator = denominator;
  std::map<RationalT, Rational> cache;
  for (int k = 0; k <= 2 * denominator; ++k) {
    const RationalT t(k, denominator);
    Rational value(0);
    if (!t.degenerate()) {
      const RationalT key = into_invariant_half(t);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, evaluate(d, key, options).value).first;
      value = it->second;
    }
    p.t.push_back(t.value());
    p.values.push_back(value);
  }

  const int last = 2 * denominator;
  p.endpoints_zero = p.values.front() == Rational(0) && p.values.back() == Rational(0);
  p.denominators_ok = std::all_of(p.values.begin(), p.values.end(), [&](const Rational& v) {
    return integral(v * Rational(denominator));
  });
  p.symmetric = true;
  for (int k = 0; k <= last; ++k) p.symmetric = p.symmetric && p.values[k] == p.values[last - k];
  p.slopes_integral = true;
  for (int k = 0; k < last; ++k) {
    const Rational slope = (p.values[k + 1] - p.values[k]) * Rational(denominator);
    p.slopes_integral = p.slopes_integral && integral(slope);
    if (!p.segments.empty() && p.segments.back().slope == slope) {
      p.segments.back().to = p.t[k + 1];
    } else {
      p.segments.push_back({p.t[k], p.t[k + 1], slope});
    }
  }
  return p;
}

UpsilonProfile upsilon_profile(const GridDiagram& d, int denominator, const EvalOptions& options) {
  UpsilonProfile p = sample_profile(d, denominator, options);
  if (!p.endpoints_zero) throw EngineDefect("profile does not vanish at t = 0 and t = 2");
  if (!p.denominators_ok) throw EngineDefect("profile value with denominator not dividing N");
  if (!p.slopes_integral) throw EngineDefect("profile has a non-integral slope");
  if (!p.symmetric) throw EngineDefect("profile is not symmetric about t = 1");
  return p;
}

std::string profile_csv(const UpsilonProfile& p) {
  std::string out;
  for (std::size_t k = 0; k < p.t.size(); ++k) {
    out += to_string(p.t[k]) + "," + to_string(p.values[k]) + "\n";
  }
  return out;
}

std::string profile_json(const UpsilonProfile& p) {
  nlohmann::ordered_json j;
  j["denominator"] = p.denominator;
  auto samples = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < p.t.size(); ++k) {
    nlohmann::ordered_json s;
    s["t"] = to_string(p.t[k]);
    s["upsilon"] = to_string(p.values[k]);
    samples.push_back(std::move(s));
  }
  j["samples"] = std::move(samples);
  auto segments = nlohmann::ordered_json::array();
  for (const UpsilonSegment& seg : p.segments) {
    nlohmann::ordered_json s;
    s["from"] = to_string(seg.from);
    s["to"] = to_string(seg.to);
    s["slope"] = to_string(seg.slope);
    segments.push_back(std::move(s));
  }
  j["segments"] = std::move(segments);
  nlohmann::ordered_json checks;
  checks["endpoints_zero"] = p.endpoints_zero;
  checks["denominators_ok"] = p.denominators_ok;
  checks["slopes_integral"] = p.slopes_integral;
  checks["symmetric"] = p.symmetric;
  j["checks"] = std::move(checks);
  j["valid"] = p.valid();
  return j.dump();
}

int tau_of(const GridDiagram& d, const EvalOptions& options) {
  for (int n : {4, 8, 16}) {
    const Rational first = -Rational(n) * upsilon_at(d, RationalT(1, n), options);
    const Rational second = -Rational(n / 2) * upsilon_at(d, RationalT(2, n), options);
    if (first == second) {
      if (!integral(first)) throw EngineDefect("slope at t = 0 is not an integer");
      return static_cast<int>(first.numerator());
    }
  }
  throw EngineDefect("slope at t = 0 did not settle by N = 16");
}

UnknottingBound unknotting_lower_bound(const UpsilonProfile& p) {
  Rational best(0);
  for (std::size_t k = 0; k < p.t.size(); ++k) {
    if (p.t[k] <= Rational(0) || p.t[k] > Rational(1)) continue;
    best = std::max(best, abs(p.values[k]) / p.t[k]);
  }
  std::int64_t ceil = best.numerator() / best.denominator();
  if (Rational(ceil) < best) ++ceil;
  return {best, ceil};
}

CrossingCheck crossing_pair_check(const GridDiagram& a, const GridDiagram& b, const RationalT& t,
                                  const EvalOptions& options) {
  if (t.p() > t.q()) throw DomainError("crossing check needs t in [0, 1]");
  CrossingCheck out;
  out.t = t.value();
  out.first = upsilon_at(a, t, options);
  out.second = upsilon_at(b, t, options);
  auto holds = [&](const Rational& plus, const Rational& minus) {
    return plus <= minus && minus <= plus + out.t;
  };
  const bool first_plus = holds(out.first, out.second);
  const bool second_plus = holds(out.second, out.first);
  out.holds = first_plus || second_plus;
  out.first_is_positive = first_plus;
  return out;
}

AuditReport invariance_audit(const GridDiagram& d, std::uint64_t seed, int move_count, int max_n,
                             const std::vector<RationalT>& t_values,
                             const AuditOptions& options) {
  require_knot(d);
  AuditReport report;
  report.t_values = t_values;

  std::vector<std::pair<std::optional<MoveRecord>, GridDiagram>> sequence;
  sequence.emplace_back(std::nullopt, d);
  for (auto& [move, diagram] : random_moves(d, seed, move_count, max_n)) {
    sequence.emplace_back(move, std::move(diagram));
  }

  std::vector<TowerDecomposition> start_towers;
  bool values_equal = true;
  for (auto& [move, diagram] : sequence) {
    AuditStep step{move, diagram, {}, std::nullopt};
    bool towers_ok = true;
    try {
      for (std::size_t i = 0; i < t_values.size(); ++i) {
        const RationalT& t = t_values[i];
        if (t.degenerate()) {
          step.values.push_back(Rational(0));
          continue;
        }
        Evaluation e = evaluate(diagram, into_invariant_half(t), options.eval);
        step.values.push_back(e.value);
        if (!options.compare_towers) continue;
        if (report.steps.empty()) {
          start_towers.push_back(e.towers);
          continue;
        }
        const TowerDecomposition& base = start_towers[i];
        const int n0 = sequence.front().second.size();
        const int n1 = diagram.size();
        const std::int64_t shift = stabilization_shift(e.t);
        towers_ok = towers_ok && (n1 >= n0 ? e.towers.same_towers(tensor_with_w(base, n1 - n0, shift))
                                           : tensor_with_w(e.towers, n0 - n1, shift).same_towers(base));
      }
    } catch (const GuardError& err) {
      report.truncated = true;
      report.note = err.what();
      break;
    }
    if (options.compare_towers && !report.steps.empty()) step.towers_match = towers_ok;
    if (!report.steps.empty() && step.values != report.steps.front().values) values_equal = false;
    report.steps.push_back(std::move(step));
  }
  report.pass = values_equal && !report.steps.empty();
  return report;
}

std::string to_json(const AuditReport& report) {
  nlohmann::ordered_json j;
  j["pass"] = report.pass;
  j["truncated"] = report.truncated;
  auto ts = nlohmann::ordered_json::array();
  for (const RationalT& t : report.t_values) ts.push_back(t.str());
  j["t"] = std::move(ts);
  auto steps = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    const AuditStep& s = report.steps[i];
    nlohmann::ordered_json js;
    js["step"] = i;
    if (s.move) {
      nlohmann::ordered_json m;
      m["kind"] = std::string(to_string(s.move->kind));
      m["index"] = s.move->index;
      m["row"] = s.move->row;
      m["variant"] = std::string(to_string(s.move->variant));
      m["seed"] = s.move->seed;
      m["step"] = s.move->step;
      m["describe"] = describe(*s.move);
      js["move"] = std::move(m);
    } else {
      js["move"] = nullptr;
    }
    js["grid"] = nlohmann::ordered_json::parse(serialize_grid(s.diagram));
    auto values = nlohmann::ordered_json::array();
    for (const Rational& v : s.values) values.push_back(to_string(v));
    js["upsilon"] = std::move(values);
    if (s.towers_match) js["towers_match"] = *s.towers_match;
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  if (!report.note.empty()) j["note"] = report.note;
  return j.dump();
}

}  // namespace gridups
