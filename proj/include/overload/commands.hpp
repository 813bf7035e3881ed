#ifndef OVERLOAD_COMMANDS_HPP
#define OVERLOAD_COMMANDS_HPP

// Command dispatch for the command-line tool. run_command never throws for
// model or input errors; it maps them to exit codes:
//   0 success, 1 usage or parse error, 2 solver failure, 3 selftest failure.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "overload/awareness.hpp"
#include "overload/choice.hpp"
#include "overload/equilibrium.hpp"
#include "overload/errors.hpp"
#include "overload/knowledge_choice.hpp"
#include "overload/report.hpp"
#include "overload/scenario.hpp"
#include "overload/selftest.hpp"
#include "overload/trajectory.hpp"

namespace overload {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSolver = 2;
inline constexpr int kExitSelftest = 3;

enum class OutputFormat { csv, svg };

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;
  std::string diagnostic;  // one line, empty on success
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"solve",    "nash",     "efficient",  "figure1",
                                              "sweep",    "extended", "trajectory", "selftest"};
  return names;
}

/// A solver returned without meeting its convergence criterion.
class SolverFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <class Report>
void require_converged(const Report& report, const std::string& what) {
  if (!report.converged) {
    throw SolverFailure(what + " did not converge (residual " + format_real(report.residual) + ", " +
                        std::to_string(report.iterations) + " iterations)");
  }
}

inline double fixed_awareness(const Scenario& s, const std::string& command) {
  if (s.awareness.mode != AwarenessMode::information)
    throw std::invalid_argument(command + " requires awareness.mode = information");
  if (!s.information) throw std::invalid_argument(command + " requires awareness.I");
  if (!s.energy) throw std::invalid_argument(command + " requires awareness.E");
  return awareness_info(*s.information, *s.energy);
}

inline PlotSeries budget_line(const EconomyParams& econ) {
  return {"budget line", {0.0, econ.hours}, {econ.wage * econ.hours, 0.0}};
}

inline std::string render(const OutputTable& table, const PlotSpec& plot, OutputFormat format) {
  return format == OutputFormat::csv ? emit_csv(table) : emit_svg(plot);
}

inline std::string bundle_plot_title(double a) { return "Bundles on the budget line (a = " + format_real(a) + ")"; }

inline std::string run_solve(const Scenario& s, OutputFormat format) {
  const double a = fixed_awareness(s, "solve");
  const Bundle naive = naive_bundle(s.preferences, s.economy, s.pollution);
  const double others = (s.economy.n - 1) * naive.consumption;
  const auto best = best_response(a, others, s.preferences, s.pollution, s.economy);
  require_converged(best.report, "best_response");
  OutputTable table({"a", "others_C", "C_naive", "L_naive", "C_best", "L_best", "P_best", "U_best", "W_best"});
  table.add_row({a, others, naive.consumption, naive.leisure, best.result.consumption, best.result.leisure,
                 best.result.pollution, best.result.perceived_utility, best.result.true_welfare});
  PlotSpec plot{bundle_plot_title(a), "leisure L (hours)", "consumption C", {budget_line(s.economy)},
                {{"naive", naive.leisure, naive.consumption},
                 {"best response", best.result.leisure, best.result.consumption}}};
  return render(table, plot, format);
}

inline std::string run_single(const Scenario& s, OutputFormat format, bool efficient) {
  const std::string name = efficient ? "efficient" : "nash";
  const double a = fixed_awareness(s, name);
  const auto solved = efficient ? efficient_symmetric(a, s.preferences, s.pollution, s.economy)
                                : nash_symmetric(a, s.preferences, s.pollution, s.economy);
  require_converged(solved.report, name);
  const Bundle& b = solved.result;
  OutputTable table({"a", "C", "L", "P_total", "U_perceived", "W_true", "iterations", "residual"});
  table.add_row({a, b.consumption, b.leisure, b.pollution, b.perceived_utility, b.true_welfare,
                 static_cast<double>(solved.report.iterations), solved.report.residual});
  PlotSpec plot{bundle_plot_title(a), "leisure L (hours)", "consumption C", {budget_line(s.economy)},
                {{name, b.leisure, b.consumption}}};
  return render(table, plot, format);
}

inline std::string run_figure1(const Scenario& s, OutputFormat format) {
  const double a = fixed_awareness(s, "figure1");
  const Figure1Result f = figure1(a, s.preferences, s.pollution, s.economy);
  if (!f.converged) throw SolverFailure("figure1: an equilibrium solve did not converge");
  OutputTable table({"bundle", "a", "L", "C", "P_total", "U_perceived", "W_true", "ordering_ok", "pollution_gap"});
  const Bundle* bundles[] = {&f.naive, &f.nash, &f.efficient};
  for (int i = 0; i < 3; ++i) {
    const Bundle& b = *bundles[i];
    table.add_row({static_cast<double>(i), a, b.leisure, b.consumption, b.pollution, b.perceived_utility,
                   b.true_welfare, f.ordering_ok ? 1.0 : 0.0, f.pollution_gap});
  }
  PlotSpec plot{bundle_plot_title(a), "leisure L (hours)", "consumption C", {budget_line(s.economy)},
                {{"naive", f.naive.leisure, f.naive.consumption},
                 {"nash", f.nash.leisure, f.nash.consumption},
                 {"efficient", f.efficient.leisure, f.efficient.consumption}}};
  return render(table, plot, format);
}

inline std::string column_name(const std::string& param) {
  std::string out = param;
  for (char& ch : out) {
    if (ch == '.') ch = '_';
  }
  return out;
}

inline std::string run_sweep(const Scenario& s, OutputFormat format) {
  if (!s.sweep) throw std::invalid_argument("sweep requires the sweep section");
  if (s.awareness.mode != AwarenessMode::information)
    throw std::invalid_argument("sweep requires awareness.mode = information");
  const SweepSpec& sweep = *s.sweep;
  if (sweep.param != "awareness.I" && !s.information) throw std::invalid_argument("sweep requires awareness.I");
  if (sweep.param != "awareness.E" && !s.energy) throw std::invalid_argument("sweep requires awareness.E");

  OutputTable table({column_name(sweep.param), "a", "C_naive", "C_nash", "C_efficient", "L_nash", "L_efficient",
                     "P_nash", "P_efficient", "welfare_gap"});
  PlotSeries naive{"naive", {}, {}}, nash{"nash", {}, {}}, efficient{"efficient", {}, {}};
  for (double v : sweep.values()) {
    Scenario point = s;
    double information = s.information.value_or(0.0);
    double energy = s.energy.value_or(0.0);
    if (sweep.param == "awareness.I") information = v;
    if (sweep.param == "awareness.E") energy = v;
    if (sweep.param == "preferences.delta") point.preferences.delta = v;
    if (sweep.param == "pollution.gamma") point.pollution.gamma = v;
    if (sweep.param == "economy.n") point.economy.n = static_cast<int>(std::lround(v));
    const double a = awareness_info(information, energy);
    const Figure1Result f = figure1(a, point.preferences, point.pollution, point.economy);
    if (!f.converged) throw SolverFailure("sweep: an equilibrium solve did not converge at " + format_real(v));
    const double gap = welfare_gap(a, point.preferences, point.pollution, point.economy);
    table.add_row({v, a, f.naive.consumption, f.nash.consumption, f.efficient.consumption, f.nash.leisure,
                   f.efficient.leisure, f.nash.pollution, f.efficient.pollution, gap});
    naive.x.push_back(v);
    naive.y.push_back(f.naive.consumption);
    nash.x.push_back(v);
    nash.y.push_back(f.nash.consumption);
    efficient.x.push_back(v);
    efficient.y.push_back(f.efficient.consumption);
  }
  PlotSpec plot{"Consumption against " + sweep.param, sweep.param, "consumption C", {naive, nash, efficient}, {}};
  return render(table, plot, format);
}

inline std::string run_extended(const Scenario& s, OutputFormat format) {
  if (s.awareness.mode != AwarenessMode::knowledge)
    throw std::invalid_argument("extended requires awareness.mode = knowledge");
  if (!s.information) throw std::invalid_argument("extended requires awareness.I");
  if (!s.energy) throw std::invalid_argument("extended requires awareness.E");
  const double others = (s.economy.n - 1) * naive_bundle(s.preferences, s.economy, s.pollution).consumption;
  const auto solved = extended_bundle(*s.information, *s.energy, others, s.preferences, s.pollution, s.knowledge,
                                      s.awareness, s.economy);
  require_converged(solved.report, "extended_bundle");
  const ExtendedBundle& e = solved.result;
  OutputTable table({"I", "E", "others_C", "C", "L_L", "L_K", "K", "a", "P_total", "U_perceived", "W_true"});
  table.add_row({*s.information, *s.energy, others, e.consumption, e.pure_leisure, e.processing_time, e.knowledge,
                 e.awareness, e.pollution, e.perceived_utility, e.true_welfare});

  std::vector<double> grid(101);
  for (int i = 0; i <= 100; ++i) grid[static_cast<std::size_t>(i)] = i / 100.0;
  const auto points = information_sweep(*s.energy, e.processing_time, grid, s.knowledge, s.awareness);
  PlotSeries knowledge{"knowledge K", {}, {}}, awareness{"awareness a", {}, {}};
  for (const auto& p : points) {
    knowledge.x.push_back(p.information);
    knowledge.y.push_back(p.knowledge);
    awareness.x.push_back(p.information);
    awareness.y.push_back(p.awareness);
  }
  PlotSpec plot{"Knowledge and awareness at L_K = " + format_real(e.processing_time) + " hours", "information I",
                "level", {knowledge, awareness}, {}};
  return render(table, plot, format);
}

inline std::string run_trajectory(const Scenario& s, OutputFormat format) {
  if (!s.trajectory) throw std::invalid_argument("trajectory requires the trajectory section");
  const TrajectorySpec& spec = *s.trajectory;
  const auto grid = uniform_grid(spec.t_max, spec.steps);
  const Series a = awareness_trajectory(spec.information, spec.energy, grid);
  OutputTable table({"t", "I", "E", "a"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    table.add_row({grid[i], path_eval(spec.information, grid[i], PathTarget::information),
                   path_eval(spec.energy, grid[i], PathTarget::energy), a.values[i]});
  }
  PlotSpec plot{"Awareness over time", "time t", "awareness a", {{"awareness a", a.t, a.values}}, {}};
  return render(table, plot, format);
}

inline CommandResult run_selftest(const Scenario& s) {
  CommandResult result;
  int failures = 0;
  for (const auto& c : run_invariant_suite(s)) {
    result.output += (c.passed ? "pass " : "FAIL ") + c.name;
    if (!c.passed) {
      ++failures;
      result.output += ": " + c.detail;
    }
    result.output += '\n';
  }
  if (failures) {
    result.exit_code = kExitSelftest;
    result.diagnostic = "selftest: " + std::to_string(failures) + " invariant check(s) failed";
  }
  return result;
}

}  // namespace detail

/// Solver breakdowns map to 2, everything else (bad input) to 1.
inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const SolverFailure*>(&e) || dynamic_cast<const DivergenceError*>(&e) ||
      dynamic_cast<const EvaluationError*>(&e) || dynamic_cast<const BracketError*>(&e))
    return kExitSolver;
  return kExitUsage;
}

inline CommandResult run_command(const std::string& command, const Scenario& scenario, OutputFormat format) {
  CommandResult result;
  try {
    if (command == "solve") {
      result.output = detail::run_solve(scenario, format);
    } else if (command == "nash") {
      result.output = detail::run_single(scenario, format, false);
    } else if (command == "efficient") {
      result.output = detail::run_single(scenario, format, true);
    } else if (command == "figure1") {
      result.output = detail::run_figure1(scenario, format);
    } else if (command == "sweep") {
      result.output = detail::run_sweep(scenario, format);
    } else if (command == "extended") {
      result.output = detail::run_extended(scenario, format);
    } else if (command == "trajectory") {
      result.output = detail::run_trajectory(scenario, format);
    } else if (command == "selftest") {
      return detail::run_selftest(scenario);
    } else {
      result.exit_code = kExitUsage;
      result.diagnostic = "unknown command '" + command + "'";
    }
  } catch (const std::exception& e) {
    result = {exit_code_for(e), {}, e.what()};
  }
  return result;
}

}  // namespace overload

#endif
