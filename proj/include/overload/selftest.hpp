#ifndef OVERLOAD_SELFTEST_HPP
#define OVERLOAD_SELFTEST_HPP

// Model invariants checked at run time by the `selftest` command. Each check
// uses the scenario's economy and preferences where they make sense and
// falls back to defaults where the invariant needs a nondegenerate setting
// (positive damage, more than one agent).

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "overload/awareness.hpp"
#include "overload/choice.hpp"
#include "overload/equilibrium.hpp"
#include "overload/knowledge_choice.hpp"
#include "overload/scenario.hpp"
#include "overload/trajectory.hpp"

namespace overload {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline std::vector<CheckOutcome> run_invariant_suite(const Scenario& scenario) {
  Preferences prefs = scenario.preferences;
  if (prefs.delta <= 0.0) prefs.delta = 0.1;
  EconomyParams econ = scenario.economy;
  if (econ.n < 2) econ.n = 2;
  const PollutionTech tech = scenario.pollution;
  const SolverSettings settings;

  std::vector<CheckOutcome> out;
  auto check = [&](const std::string& name, const std::function<std::string()>& body) {
    CheckOutcome outcome{name, false, {}};
    try {
      outcome.detail = body();
      outcome.passed = outcome.detail.empty();
    } catch (const std::exception& e) {
      outcome.detail = std::string("exception: ") + e.what();
    }
    out.push_back(outcome);
  };

  check("awareness_range", [] {
    for (int i = 0; i <= 100; ++i) {
      for (double energy : {0.0, 0.5, 1.0, 5.0, 50.0}) {
        const double a = awareness_info(i / 100.0, energy);
        if (!(a >= 0.0 && a <= 1.0)) return std::string("awareness outside [0, 1]");
        if (a == 1.0 && !(i == 50 && energy == 0.0)) return std::string("a = 1 away from (0.5, 0)");
      }
    }
    return std::string();
  });

  check("awareness_inverted_u_in_information", [] {
    for (double energy : {0.0, 1.0, 10.0}) {
      for (int i = 1; i <= 100; ++i) {
        const double prev = awareness_info((i - 1) / 100.0, energy);
        const double cur = awareness_info(i / 100.0, energy);
        if (i <= 50 && !(cur > prev)) return std::string("not rising below I = 0.5");
        if (i > 50 && !(cur < prev)) return std::string("not falling above I = 0.5");
      }
    }
    return std::string();
  });

  check("awareness_decreasing_in_energy", [] {
    for (double information : {0.1, 0.5, 0.9}) {
      double prev = awareness_info(information, 0.0);
      for (int k = 1; k <= 20; ++k) {
        const double cur = awareness_info(information, 0.5 * k);
        if (!(cur < prev)) return std::string("awareness not decreasing in E");
        prev = cur;
      }
    }
    return std::string();
  });

  check("overload_threshold_at_half", [&] {
    for (double energy : {0.0, 1.0, 100.0}) {
      if (std::abs(overload_threshold(energy, settings) - 0.5) > 1e-6) return std::string("I0 != 0.5");
    }
    return std::string();
  });

  check("knowledge_concave_in_time", [&] {
    const KnowledgeParams kp = scenario.knowledge;
    for (double hours : {0.5, 2.0, 8.0, 16.0}) {
      const double d2 = fd_second_derivative([&](double h) { return knowledge_stock(0.5, h, kp); }, hours, 1e-4);
      if (!(d2 < 0.0)) return std::string("K not concave in L_K");
    }
    return std::string();
  });

  check("budget_exhaustion", [&] {
    for (double a : {0.0, 0.3, 1.0}) {
      const auto b = best_response(a, 3.0, prefs, tech, econ, settings).result;
      if (std::abs(b.consumption - econ.wage * (econ.hours - b.leisure)) > 1e-9) return std::string("C != w(T - L)");
    }
    return std::string();
  });

  check("lower_awareness_more_consumption", [&] {
    double prev_c = INFINITY, prev_l = -INFINITY;
    for (int i = 0; i <= 10; ++i) {
      const auto b = best_response(i / 10.0, 5.0, prefs, tech, econ, settings).result;
      if (!(b.consumption < prev_c && b.leisure > prev_l)) return std::string("comparative statics violated");
      prev_c = b.consumption;
      prev_l = b.leisure;
    }
    return std::string();
  });

  check("linear_pollution_separability", [&] {
    const PollutionTech linear{1.0};
    const double ref = best_response(0.6, 0.0, prefs, linear, econ, settings).result.consumption;
    for (double others : {5.0, 50.0}) {
      if (std::abs(best_response(0.6, others, prefs, linear, econ, settings).result.consumption - ref) > 1e-9)
        return std::string("best response depends on others at gamma = 1");
    }
    return std::string();
  });

  check("figure1_ordering", [&] {
    for (double a : {0.25, 0.5, 1.0}) {
      const auto f = figure1(a, prefs, tech, econ, settings);
      if (!(f.naive.consumption > f.nash.consumption + 1e-6 && f.nash.consumption > f.efficient.consumption + 1e-6))
        return std::string("C_naive > C_nash > C_efficient violated");
      if (!(f.pollution_gap >= 0.0)) return std::string("Nash pollution below efficient pollution");
    }
    const auto flat = figure1(0.0, prefs, tech, econ, settings);
    if (std::abs(flat.nash.consumption - flat.naive.consumption) > 1e-8 ||
        std::abs(flat.efficient.consumption - flat.naive.consumption) > 1e-8)
      return std::string("a = 0 does not collapse the bundles");
    return std::string();
  });

  check("nash_is_fixed_point", [&] {
    const auto nash = nash_symmetric(0.7, prefs, tech, econ, settings);
    const double again =
        best_response(0.7, (econ.n - 1) * nash.result.consumption, prefs, tech, econ, settings).result.consumption;
    if (std::abs(again - nash.result.consumption) > 1e-8) return std::string("best response moves C_nash");
    return std::string();
  });

  check("welfare_gap_nonnegative_nonincreasing", [&] {
    double prev = INFINITY;
    for (int i = 0; i <= 10; ++i) {
      const double gap = welfare_gap(i / 10.0, prefs, tech, econ, settings);
      if (gap < 0.0 || gap > prev + 1e-12) return std::string("gap negative or increasing in a");
      prev = gap;
    }
    if (welfare_gap(1.0, prefs, tech, econ, settings) != 0.0) return std::string("gap(1) != 0");
    return std::string();
  });

  check("information_avoidance_without_direct_benefit", [&] {
    Preferences p = prefs;
    p.mu = 0.0;
    const AwarenessSpec aspec{AwarenessMode::knowledge, scenario.awareness.kappa};
    for (double information : {0.2, 0.5, 0.8}) {
      const auto e = extended_bundle(information, 1.0, 0.0, p, tech, scenario.knowledge, aspec, econ, settings);
      if (e.result.processing_time != 0.0) return std::string("L_K > 0 with mu = 0");
    }
    return std::string();
  });

  check("overload_symmetry", [&] {
    Preferences p = prefs;
    p.mu = 1.0;
    const AwarenessSpec aspec{AwarenessMode::knowledge, scenario.awareness.kappa};
    const auto lo = extended_bundle(0.3, 0.5, 0.0, p, tech, scenario.knowledge, aspec, econ, settings).result;
    const auto hi = extended_bundle(1.0 - 0.3, 0.5, 0.0, p, tech, scenario.knowledge, aspec, econ, settings).result;
    if (std::abs(lo.pure_leisure - hi.pure_leisure) > 1e-9 || std::abs(lo.processing_time - hi.processing_time) > 1e-9)
      return std::string("extended_bundle(I) != extended_bundle(1 - I)");
    return std::string();
  });

  check("awareness_trajectory_inverted_u", [] {
    PathSpec info{PathKind::logistic, 0.05, 0.95, 0.0, 5.0, 1.0};
    PathSpec energy{PathKind::exponential, 0.1, 0.0, 0.3, 0.0, 1.0};
    const auto grid = uniform_grid(20.0, 101);
    const auto verdict = single_peak(awareness_trajectory(info, energy, grid));
    if (verdict.shape != PeakShape::unimodal) return std::string("trajectory is " + to_string(verdict.shape));
    return std::string();
  });

  return out;
}

}  // namespace overload

#endif
