#ifndef OVERLOAD_EQUILIBRIUM_HPP
#define OVERLOAD_EQUILIBRIUM_HPP

// Symmetric multi-agent allocations: Nash equilibrium of self-concerned
// agents, the efficient (Samuelson / Lindahl) allocation, and the naive
// bundle, all evaluated at a common awareness level.

#include <algorithm>
#include <cmath>

#include "overload/choice.hpp"
#include "overload/numerics.hpp"

namespace overload {

struct Figure1Result {
  Bundle naive;
  Bundle nash;
  Bundle efficient;
  bool ordering_ok = false;    // C_naive >= C_nash >= C_efficient
  double pollution_gap = 0.0;  // P_nash - P_efficient
  bool converged = false;
};

/// Consumption C with C = best_response(a, (n - 1) C).
///
/// The best-response map has slope s in (-(n - 1), 0]. The relaxation is
/// 1 / (1 - s) estimated at the naive bundle, which reaches the fixed point in
/// one step when s = 0 (linear pollution); on failure it falls back to
/// settings.damping and halves from there.
inline Solved<Bundle> nash_symmetric(double awareness, const Preferences& prefs,
                                     const PollutionTech& tech, const EconomyParams& econ,
                                     const SolverSettings& settings = {}) {
  settings.validate();
  const double others_per_unit = econ.n - 1;
  auto respond = [&](double consumption) {
    return best_response(awareness, others_per_unit * consumption, prefs, tech, econ, settings)
        .result.consumption;
  };
  const double start = naive_bundle(prefs, econ, tech).consumption;
  const FixedPointBox box{0.0, econ.wage * econ.hours};

  const double h = settings.fd_step * (1.0 + start);
  const double slope = (respond(std::min(start + h, box.hi)) - respond(start - h)) /
                       (std::min(start + h, box.hi) - (start - h));
  double damping = settings.damping;
  if (std::abs(slope) < 1e-6) {
    damping = 1.0;
  } else if (slope < 0.0) {
    damping = std::min(1.0, 1.0 / (1.0 - slope));
  }

  ScalarReport report;
  bool solved = false;
  for (int attempt = 0; attempt < 8 && !solved; ++attempt) {
    SolverSettings local = settings;
    local.damping = damping;
    try {
      report = damped_fixed_point(respond, start, local, box);
      solved = report.converged;
    } catch (const DivergenceError&) {
      if (attempt == 7) throw;
    }
    damping = attempt == 0 ? std::min(damping, settings.damping) : 0.5 * damping;
  }

  const double consumption = report.x();
  auto response = best_response(awareness, others_per_unit * consumption, prefs, tech, econ, settings);
  response.report.iterations = report.iterations;
  response.report.residual = report.residual;
  response.report.converged = report.converged && response.report.converged;
  response.report.argument = report.argument;
  return response;
}

/// Symmetric planner optimum: maximize alpha ln C + beta ln L - a delta P(n C)
/// along the budget line. Its first-order condition internalizes the marginal
/// damage suffered by all n agents.
inline Solved<Bundle> efficient_symmetric(double awareness, const Preferences& prefs,
                                          const PollutionTech& tech, const EconomyParams& econ,
                                          const SolverSettings& settings = {}) {
  prefs.validate();
  tech.validate();
  econ.validate();
  detail::require_awareness(awareness);

  const double w = econ.wage;
  const double hours = econ.hours;
  const double n = econ.n;
  const double damage = awareness * prefs.delta;
  auto objective = [&](double leisure) {
    const double c = w * (hours - leisure);
    return prefs.alpha * std::log(c) + prefs.beta * std::log(leisure) -
           damage * pollution(n * c, tech);
  };
  auto slope = [&](double leisure) {
    const double c = w * (hours - leisure);
    return -w * prefs.alpha / c + prefs.beta / leisure +
           damage * n * w * detail::marginal_pollution(n * c, tech);
  };
  const auto report =
      maximize_bounded(objective, slope, kBoundaryOffset, hours - kBoundaryOffset, settings);
  const double leisure = report.x();
  const double consumption = w * (hours - leisure);
  return {make_bundle(consumption, leisure, awareness, (econ.n - 1) * consumption, prefs, tech),
          report};
}

/// The three bundles on one budget line at a common awareness level.
inline Figure1Result figure1(double awareness, const Preferences& prefs, const PollutionTech& tech,
                             const EconomyParams& econ, const SolverSettings& settings = {}) {
  Figure1Result out;
  out.naive = naive_bundle(prefs, econ, tech);
  const auto nash = nash_symmetric(awareness, prefs, tech, econ, settings);
  const auto efficient = efficient_symmetric(awareness, prefs, tech, econ, settings);
  out.nash = nash.result;
  out.efficient = efficient.result;
  out.ordering_ok = out.naive.consumption >= out.nash.consumption &&
                    out.nash.consumption >= out.efficient.consumption;
  out.pollution_gap = out.nash.pollution - out.efficient.pollution;
  out.converged = nash.report.converged && efficient.report.converged;
  return out;
}

/// True-welfare loss from choosing at awareness a instead of full awareness,
/// with the others held at the symmetric equilibrium for awareness a.
inline double welfare_gap(double awareness, const Preferences& prefs, const PollutionTech& tech,
                          const EconomyParams& econ, const SolverSettings& settings = {}) {
  const auto equilibrium = nash_symmetric(awareness, prefs, tech, econ, settings);
  const double others = (econ.n - 1) * equilibrium.report.x();
  const auto aware = best_response(1.0, others, prefs, tech, econ, settings).result;
  const auto distorted = best_response(awareness, others, prefs, tech, econ, settings).result;
  return aware.true_welfare - distorted.true_welfare;
}

}  // namespace overload

#endif
