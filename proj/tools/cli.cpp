#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "gridups/errors.hpp"
#include "gridups/grid.hpp"
#include "gridups/homology.hpp"
#include "gridups/tcomplex.hpp"
#include "gridups/upsilon.hpp"
#include "json.hpp"

namespace gridups::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv };

struct RunConfig {
  std::optional<Format> format;
  std::string out;
  std::optional<std::uint32_t> truncation;
  StateGuard guard;
  std::uint64_t seed = 0;
};

template <typename T>
T parse_env_number(const char* name, const char* text) {
  T value{};
  const char* end = text + std::char_traits<char>::length(text);
  auto [ptr, ec] = std::from_chars(text, end, value);
  if (ec != std::errc() || ptr != end) {
    throw DomainError(std::string(name) + " is not a non-negative integer: '" + text + "'");
  }
  return value;
}

void apply_environment(RunConfig& cfg) {
  if (const char* g = std::getenv("GRIDUPS_GUARD"); g && *g) {
    cfg.guard.max_states = parse_env_number<std::uint64_t>("GRIDUPS_GUARD", g);
  }
  if (const char* t = std::getenv("GRIDUPS_TRUNCATION"); t && *t) {
    cfg.truncation = parse_env_number<std::uint32_t>("GRIDUPS_TRUNCATION", t);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return ss.str();
}

GridDiagram load_grid(const std::string& path) { return parse_grid(read_file(path)); }

GridDiagram load_knot(const std::string& path, const RunConfig& cfg) {
  GridDiagram d = load_grid(path);
  check_guard(d.size(), cfg.guard);
  if (component_count(d) != 1) throw DomainError("'" + path + "' is a link, not a knot");
  return d;
}

void emit(const RunConfig& cfg, std::ostream& out, std::string text) {
  if (text.empty() || text.back() != '\n') text += '\n';
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw IoError("cannot write '" + cfg.out + "'");
  file << text;
  if (!file) throw IoError("error while writing '" + cfg.out + "'");
}

std::vector<RationalT> parse_t_list(const std::vector<std::string>& items) {
  std::vector<RationalT> out;
  for (const std::string& s : items) out.push_back(RationalT::parse(s));
  return out;
}

EvalOptions eval_options(const RunConfig& cfg) { return {cfg.guard, cfg.truncation}; }

std::string tower_csv(const TowerDecomposition& dec) {
  std::string out;
  for (std::int64_t g : dec.free_towers) out += "free," + std::to_string(g) + "\n";
  for (const TorsionTower& t : dec.torsion_towers) {
    out += "torsion," + std::to_string(t.grading) + "," + std::to_string(t.length) + "\n";
  }
  return out;
}

std::string audit_csv(const AuditReport& r) {
  std::string out;
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const AuditStep& s = r.steps[i];
    out += std::to_string(i) + "," + (s.move ? describe(*s.move) : std::string("start")) + "," +
           std::to_string(s.diagram.size());
    for (const Rational& v : s.values) out += "," + to_string(v);
    out += "\n";
  }
  return out;
}

// Preset names: unknot:<n> or torus:<p>,<q>.
GridDiagram preset_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw DomainError("preset must be unknot:<n> or torus:<p>,<q>");
  const std::string kind = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  auto number = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw DomainError("bad preset argument '" + std::string(s) + "'");
    }
    return v;
  };
  if (kind == "unknot") return preset_unknot(number(args));
  if (kind == "torus") {
    auto comma = args.find(',');
    if (comma == std::string::npos) throw DomainError("torus preset needs <p>,<q>");
    return preset_torus(number(std::string_view(args).substr(0, comma)),
                        number(std::string_view(args).substr(comma + 1)));
  }
  throw DomainError("unknown preset kind '" + kind + "'");
}

struct TableJob {
  std::string path;
  RationalT t;
};

// Evaluates jobs in batches of hardware_concurrency; output order is the job order.
std::vector<Rational> run_table(const std::vector<TableJob>& jobs, const RunConfig& cfg) {
  std::vector<GridDiagram> grids;
  std::vector<std::string> seen;
  for (const TableJob& j : jobs) {
    if (std::find(seen.begin(), seen.end(), j.path) != seen.end()) continue;
    seen.push_back(j.path);
    grids.push_back(load_knot(j.path, cfg));
  }
  // The half-interval cache must be filled before workers race for it.
  (void)invariant_half_interval();
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Rational> values;
  for (std::size_t start = 0; start < jobs.size(); start += width) {
    std::vector<std::future<Rational>> batch;
    for (std::size_t i = start; i < std::min(jobs.size(), start + width); ++i) {
      const auto g = std::find(seen.begin(), seen.end(), jobs[i].path) - seen.begin();
      batch.push_back(std::async(std::launch::async, [&, g, i] {
        return upsilon_at(grids[g], jobs[i].t, eval_options(cfg));
      }));
    }
    for (auto& f : batch) values.push_back(f.get());
  }
  return values;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upsilon invariant of knots from grid diagrams"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gridups 0.1.0");

  RunConfig cfg;
  std::string path, format_text, preset_spec;
  std::vector<std::string> t_items, table_paths;
  std::optional<int> samples;
  std::optional<std::uint32_t> truncation_flag;
  std::optional<std::uint64_t> guard_flag;
  int moves = 20, max_n = 7;
  bool mirrored = false, towers = false;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "Write to this file instead of standard output");
  };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--truncation", truncation_flag, "Fixed u-adic truncation depth")
        ->check(CLI::PositiveNumber);
    sub->add_option("--guard", guard_flag, "Refuse grids with more than this many states");
  };

  auto* validate = app.add_subcommand("validate", "Check a grid file and count components");
  validate->add_option("path", path)->required();

  auto* upsilon = app.add_subcommand("upsilon", "Upsilon at given t, or a sampled profile");
  upsilon->add_option("path", path)->required();
  upsilon->add_option("--t", t_items, "Sample point p/q in [0,2] (repeatable)");
  upsilon->add_option("--samples", samples, "Sample k/N for k = 0..2N")->check(CLI::PositiveNumber);
  add_output(upsilon);
  add_engine(upsilon);

  auto* homology = app.add_subcommand("homology", "Tower decomposition of the t-complex");
  homology->add_option("path", path)->required();
  homology->add_option("--t", t_items, "Sample point p/q")->required()->expected(1);
  add_output(homology);
  add_engine(homology);

  auto* audit = app.add_subcommand("audit", "Random-move invariance audit");
  audit->add_option("path", path)->required();
  audit->add_option("--t", t_items, "Audited t (repeatable, default 1/2 and 1)");
  audit->add_option("--moves", moves, "Number of random moves")->check(CLI::NonNegativeNumber);
  audit->add_option("--seed", cfg.seed, "Random seed");
  audit->add_option("--max-n", max_n, "Largest grid number reached by stabilization")
      ->check(CLI::Range(2, 64));
  audit->add_flag("--towers", towers, "Also compare full tower multisets");
  add_output(audit);
  add_engine(audit);

  auto* preset = app.add_subcommand("preset", "Write a canonical grid: unknot:<n> or torus:<p>,<q>");
  preset->add_option("spec", preset_spec)->required();
  preset->add_flag("--mirror", mirrored, "Mirror the preset");
  preset->add_option("--out", cfg.out, "Write to this file instead of standard output");

  auto* complex = app.add_subcommand("complex", "Dump the t-complex as JSON");
  complex->add_option("path", path)->required();
  complex->add_option("--t", t_items, "Sample point p/q")->required()->expected(1);
  complex->add_option("--out", cfg.out, "Write to this file instead of standard output");
  complex->add_option("--guard", guard_flag, "Refuse grids with more than this many states");

  auto* table = app.add_subcommand("table", "Upsilon for several files and t values");
  table->add_option("paths", table_paths)->required();
  table->add_option("--t", t_items, "Sample point p/q (repeatable, default 1/2)");
  add_output(table);
  add_engine(table);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kDomainError;
  }

  try {
    apply_environment(cfg);
    if (truncation_flag) cfg.truncation = truncation_flag;
    if (guard_flag) cfg.guard.max_states = *guard_flag;
    if (!format_text.empty()) cfg.format = format_text == "json" ? Format::json : Format::csv;

    if (*validate) {
      GridDiagram d = load_grid(path);
      out << "valid, n=" << d.size() << ", components=" << component_count(d) << "\n";
      return kOk;
    }

    if (*upsilon) {
      GridDiagram d = load_knot(path, cfg);
      const Format f = cfg.format.value_or(Format::csv);
      if (!t_items.empty() && samples) throw DomainError("give either --t or --samples, not both");
      if (t_items.empty()) {
        UpsilonProfile p = upsilon_profile(d, samples.value_or(4), eval_options(cfg));
        emit(cfg, out, f == Format::json ? profile_json(p) : profile_csv(p));
        return kOk;
      }
      std::string text;
      nlohmann::ordered_json values = nlohmann::ordered_json::array();
      for (const RationalT& t : parse_t_list(t_items)) {
        const Rational v = upsilon_at(d, t, eval_options(cfg));
        text += t.str() + "," + to_string(v) + "\n";
        values.push_back({{"t", t.str()}, {"upsilon", to_string(v)}});
      }
      emit(cfg, out, f == Format::json ? nlohmann::ordered_json{{"values", values}}.dump() : text);
      return kOk;
    }

    if (*homology) {
      GridDiagram d = load_knot(path, cfg);
      const RationalT t = RationalT::parse(t_items.front());
      DecomposeOptions opts;
      opts.truncation = cfg.truncation;
      TowerDecomposition dec = decompose(build_t_complex(d, t, cfg.guard), d.size(), opts);
      emit(cfg, out, cfg.format.value_or(Format::json) == Format::json ? to_json(dec) : tower_csv(dec));
      return kOk;
    }

    if (*audit) {
      GridDiagram d = load_knot(path, cfg);
      check_guard(max_n, cfg.guard);
      std::vector<RationalT> ts =
          t_items.empty() ? std::vector<RationalT>{RationalT(1, 2), RationalT(1, 1)} : parse_t_list(t_items);
      AuditOptions opts{eval_options(cfg), towers};
      AuditReport r = invariance_audit(d, cfg.seed, moves, max_n, ts, opts);
      emit(cfg, out, cfg.format.value_or(Format::json) == Format::json ? to_json(r) : audit_csv(r));
      if (r.truncated) {
        err << "audit truncated: " << r.note << "\n";
        return kGuardRefusal;
      }
      if (!r.pass) {
        err << "audit failed: Upsilon changed along the move sequence\n";
        return kDomainError;
      }
      if (towers && std::any_of(r.steps.begin(), r.steps.end(), [](const AuditStep& s) {
            return s.towers_match && !*s.towers_match;
          })) {
        err << "audit failed: tower multisets do not match\n";
        return kDomainError;
      }
      return kOk;
    }

    if (*preset) {
      GridDiagram d = preset_from_spec(preset_spec);
      emit(cfg, out, serialize_grid(mirrored ? mirror(d) : d));
      return kOk;
    }

    if (*complex) {
      GridDiagram d = load_grid(path);
      check_guard(d.size(), cfg.guard);
      emit(cfg, out, dump_json(build_t_complex(d, RationalT::parse(t_items.front()), cfg.guard)));
      return kOk;
    }

    if (*table) {
      std::vector<RationalT> ts = t_items.empty() ? std::vector<RationalT>{RationalT(1, 2)} : parse_t_list(t_items);
      std::vector<TableJob> jobs;
      for (const std::string& p : table_paths) {
        for (const RationalT& t : ts) jobs.push_back({p, t});
      }
      std::vector<Rational> values = run_table(jobs, cfg);
      std::string text;
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < jobs.size(); ++i) {
        text += jobs[i].path + "," + jobs[i].t.str() + "," + to_string(values[i]) + "\n";
        rows.push_back({{"file", jobs[i].path}, {"t", jobs[i].t.str()}, {"upsilon", to_string(values[i])}});
      }
      emit(cfg, out, cfg.format.value_or(Format::csv) == Format::json ? rows.dump() : text);
      return kOk;
    }
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kGuardRefusal;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const EngineDefect& e) {
    err << "internal error: " << e.what() << "\n";
    return kEngineDefect;
  }
  return kDomainError;
}

}  // namespace gridups::cli
