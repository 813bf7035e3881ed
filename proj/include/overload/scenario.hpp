#ifndef OVERLOAD_SCENARIO_HPP
#define OVERLOAD_SCENARIO_HPP

// Line-oriented scenario files:
//
//   # comment
//   economy.n = 2
//   preferences.delta = 0.5
//   trajectory.I_path.kind = logistic
//
// Every key is a canonical dotted name; unknown and duplicate keys are
// rejected with the offending line number.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "overload/awareness.hpp"
#include "overload/choice.hpp"
#include "overload/errors.hpp"
#include "overload/trajectory.hpp"

namespace overload {

struct SweepSpec {
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;

  /// Grid values in ascending order.
  std::vector<double> values() const {
    const double lo = std::min(from, to);
    const double hi = std::max(from, to);
    std::vector<double> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
    out.back() = hi;
    return out;
  }
};

struct TrajectorySpec {
  PathSpec information;
  PathSpec energy;
  double t_max = 0.0;
  int steps = 0;
};

struct Scenario {
  EconomyParams economy;
  Preferences preferences;
  PollutionTech pollution;
  AwarenessSpec awareness;
  std::optional<double> information;  // awareness.I
  std::optional<double> energy;       // awareness.E
  KnowledgeParams knowledge;
  std::optional<SweepSpec> sweep;
  std::optional<TrajectorySpec> trajectory;
};

inline const std::vector<std::string>& sweepable_parameters() {
  static const std::vector<std::string> names{"awareness.I", "awareness.E", "preferences.delta",
                                              "pollution.gamma", "economy.n"};
  return names;
}

namespace detail {

struct Entry {
  std::string value;
  int line = 0;
};

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline const std::vector<std::string>& path_fields() {
  static const std::vector<std::string> fields{"kind", "start", "end", "rate", "midpoint", "steepness"};
  return fields;
}

inline bool is_known_key(const std::string& key) {
  static const std::vector<std::string> fixed{
      "economy.n",         "economy.wage",    "economy.hours",   "preferences.alpha",
      "preferences.beta",  "preferences.delta", "preferences.mu", "pollution.gamma",
      "awareness.mode",    "awareness.I",     "awareness.E",     "awareness.kappa",
      "knowledge.b",       "sweep.param",     "sweep.from",      "sweep.to",
      "sweep.steps",       "trajectory.t_max", "trajectory.steps"};
  for (const auto& k : fixed) {
    if (k == key) return true;
  }
  for (const char* path : {"trajectory.I_path.", "trajectory.E_path."}) {
    for (const auto& field : path_fields()) {
      if (key == std::string(path) + field) return true;
    }
  }
  return false;
}

class EntryReader {
public:
  explicit EntryReader(const std::map<std::string, Entry>& entries) : entries_(entries) {}

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  int line(const std::string& key) const { return has(key) ? entries_.at(key).line : 0; }

  double real(const std::string& key) const {
    const Entry& e = entries_.at(key);
    double v = 0.0;
    const char* begin = e.value.data();
    const char* end = begin + e.value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v))
      throw ParseError(e.line, key, "expected a finite real number, got '" + e.value + "'");
    return v;
  }

  int integer(const std::string& key) const {
    const Entry& e = entries_.at(key);
    int v = 0;
    const char* begin = e.value.data();
    const char* end = begin + e.value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end)
      throw ParseError(e.line, key, "expected an integer, got '" + e.value + "'");
    return v;
  }

  const std::string& text(const std::string& key) const { return entries_.at(key).value; }

  void read(const std::string& key, double& target) const {
    if (has(key)) target = real(key);
  }
  void read(const std::string& key, int& target) const {
    if (has(key)) target = integer(key);
  }

  /// Report against the key's own line, or `fallback_line` when it is absent.
  [[noreturn]] void fail(const std::string& key, const std::string& message, int fallback_line = 0) const {
    throw ParseError(has(key) ? line(key) : fallback_line, key, message);
  }

private:
  const std::map<std::string, Entry>& entries_;
};

inline PathSpec read_path(const EntryReader& in, const std::string& prefix, double t_max, int section_line) {
  const std::string kind_key = prefix + "kind";
  if (!in.has(kind_key)) {
    for (const auto& field : path_fields()) {
      if (in.has(prefix + field)) in.fail(prefix + field, "path has no " + kind_key);
    }
    in.fail(kind_key, "missing; required by the trajectory section", section_line);
  }
  PathSpec spec;
  const std::string& kind = in.text(kind_key);
  std::vector<std::string> needed;
  if (kind == "constant") {
    spec.kind = PathKind::constant;
    needed = {"start"};
  } else if (kind == "linear") {
    spec.kind = PathKind::linear;
    needed = {"start", "end"};
  } else if (kind == "exponential") {
    spec.kind = PathKind::exponential;
    needed = {"start", "rate"};
  } else if (kind == "logistic") {
    spec.kind = PathKind::logistic;
    needed = {"start", "end", "midpoint", "steepness"};
  } else {
    in.fail(kind_key, "unknown path kind '" + kind + "' (constant, linear, exponential, logistic)");
  }
  for (const auto& field : path_fields()) {
    if (field == "kind") continue;
    const bool wanted = std::find(needed.begin(), needed.end(), field) != needed.end();
    const std::string key = prefix + field;
    if (wanted && !in.has(key)) in.fail(kind_key, "a " + kind + " path requires " + key);
    if (!wanted && in.has(key)) in.fail(key, "not used by a " + kind + " path");
  }
  in.read(prefix + "start", spec.start);
  in.read(prefix + "end", spec.end);
  in.read(prefix + "rate", spec.rate);
  in.read(prefix + "midpoint", spec.midpoint);
  in.read(prefix + "steepness", spec.steepness);
  spec.horizon = t_max;
  return spec;
}

}  // namespace detail

/// Parse and validate a scenario. Omitted keys take their defaults; the
/// optional sections (awareness.I / awareness.E, sweep, trajectory) are
/// checked for completeness only when any of their keys is present.
inline Scenario parse_scenario(std::string_view text) {
  std::map<std::string, detail::Entry> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = detail::trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "", "expected 'key = value'");
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string value(detail::trim(line.substr(eq + 1)));
    if (key.empty()) throw ParseError(line_no, "", "missing key before '='");
    if (!detail::is_known_key(key)) throw ParseError(line_no, key, "unknown key");
    if (value.empty()) throw ParseError(line_no, key, "missing value");
    if (entries.count(key)) {
      throw ParseError(line_no, key,
                       "duplicate key (first set on line " + std::to_string(entries[key].line) + ")");
    }
    entries[key] = {value, line_no};
  }

  const detail::EntryReader in(entries);
  Scenario s;
  in.read("economy.n", s.economy.n);
  in.read("economy.wage", s.economy.wage);
  in.read("economy.hours", s.economy.hours);
  in.read("preferences.alpha", s.preferences.alpha);
  in.read("preferences.beta", s.preferences.beta);
  in.read("preferences.delta", s.preferences.delta);
  in.read("preferences.mu", s.preferences.mu);
  in.read("pollution.gamma", s.pollution.gamma);
  in.read("awareness.kappa", s.awareness.kappa);
  in.read("knowledge.b", s.knowledge.b);

  if (in.has("awareness.mode")) {
    const std::string& mode = in.text("awareness.mode");
    if (mode == "information") {
      s.awareness.mode = AwarenessMode::information;
    } else if (mode == "knowledge") {
      s.awareness.mode = AwarenessMode::knowledge;
    } else {
      in.fail("awareness.mode", "must be 'information' or 'knowledge', got '" + mode + "'");
    }
  }

  if (s.economy.n < 1) in.fail("economy.n", "must be an integer >= 1");
  if (!(s.economy.wage > 0.0)) in.fail("economy.wage", "must be > 0");
  if (!(s.economy.hours > 0.0)) in.fail("economy.hours", "must be > 0");
  if (!(s.preferences.alpha > 0.0)) in.fail("preferences.alpha", "must be > 0");
  if (!(s.preferences.beta > 0.0)) in.fail("preferences.beta", "must be > 0");
  if (!(s.preferences.delta >= 0.0)) in.fail("preferences.delta", "must be >= 0");
  if (!(s.preferences.mu >= 0.0)) in.fail("preferences.mu", "must be >= 0");
  if (!(s.pollution.gamma >= 1.0)) in.fail("pollution.gamma", "must be >= 1");
  if (!(s.awareness.kappa > 0.0)) in.fail("awareness.kappa", "must be > 0");
  if (!(s.knowledge.b > 0.0 && s.knowledge.b < 1.0)) in.fail("knowledge.b", "must lie in the open interval (0, 1)");

  if (in.has("awareness.I")) {
    s.information = in.real("awareness.I");
    if (!(*s.information >= 0.0 && *s.information <= 1.0)) in.fail("awareness.I", "must lie in [0, 1]");
  }
  if (in.has("awareness.E")) {
    s.energy = in.real("awareness.E");
    if (!(*s.energy >= 0.0)) in.fail("awareness.E", "must be >= 0");
  }

  const std::vector<std::string> sweep_keys{"sweep.param", "sweep.from", "sweep.to", "sweep.steps"};
  std::string first_sweep_key;
  for (const auto& k : sweep_keys) {
    if (in.has(k) && (first_sweep_key.empty() || in.line(k) < in.line(first_sweep_key))) first_sweep_key = k;
  }
  if (!first_sweep_key.empty()) {
    for (const auto& k : sweep_keys) {
      if (!in.has(k)) in.fail(first_sweep_key, "sweep section is missing " + k);
    }
    SweepSpec sweep;
    sweep.param = in.text("sweep.param");
    sweep.from = in.real("sweep.from");
    sweep.to = in.real("sweep.to");
    sweep.steps = in.integer("sweep.steps");
    const auto& allowed = sweepable_parameters();
    if (std::find(allowed.begin(), allowed.end(), sweep.param) == allowed.end())
      in.fail("sweep.param", "cannot sweep '" + sweep.param +
                                 "' (awareness.I, awareness.E, preferences.delta, pollution.gamma, economy.n)");
    if (sweep.steps < 2) in.fail("sweep.steps", "must be >= 2");
    const double lo = std::min(sweep.from, sweep.to);
    const double hi = std::max(sweep.from, sweep.to);
    if (sweep.param == "awareness.I" && !(lo >= 0.0 && hi <= 1.0))
      in.fail("sweep.from", "awareness.I sweep must stay within [0, 1]");
    if ((sweep.param == "awareness.E" || sweep.param == "preferences.delta") && !(lo >= 0.0))
      in.fail("sweep.from", sweep.param + " sweep must stay >= 0");
    if (sweep.param == "pollution.gamma" && !(lo >= 1.0))
      in.fail("sweep.from", "pollution.gamma sweep must stay >= 1");
    if (sweep.param == "economy.n") {
      for (double v : sweep.values()) {
        if (!(v >= 1.0) || std::abs(v - std::round(v)) > 1e-9)
          in.fail("sweep.steps", "economy.n sweep must land on integers >= 1");
      }
    }
    s.sweep = sweep;
  }

  int trajectory_line = 0;
  for (const auto& [key, entry] : entries) {
    if (key.rfind("trajectory.", 0) == 0 && (trajectory_line == 0 || entry.line < trajectory_line))
      trajectory_line = entry.line;
  }
  if (trajectory_line > 0) {
    TrajectorySpec traj;
    for (const char* key : {"trajectory.t_max", "trajectory.steps"}) {
      if (!in.has(key)) in.fail(key, "missing; required by the trajectory section", trajectory_line);
    }
    traj.t_max = in.real("trajectory.t_max");
    traj.steps = in.integer("trajectory.steps");
    if (!(traj.t_max > 0.0)) in.fail("trajectory.t_max", "must be > 0");
    if (traj.steps < 3) in.fail("trajectory.steps", "must be >= 3");
    traj.information = detail::read_path(in, "trajectory.I_path.", traj.t_max, trajectory_line);
    traj.energy = detail::read_path(in, "trajectory.E_path.", traj.t_max, trajectory_line);
    s.trajectory = traj;
  }
  return s;
}

}  // namespace overload

#endif
