#ifndef OVERLOAD_CHOICE_HPP
#define OVERLOAD_CHOICE_HPP

// Single-agent consumption/leisure choice with a consumption externality.
//
//   U = alpha ln C + beta ln L - a delta P(C + C_others),   C = w (T - L)
//
// The awareness a scales the perceived damage; true welfare evaluates the
// same utility at a = 1.

#include <cmath>
#include <string>

#include "overload/errors.hpp"
#include "overload/numerics.hpp"

namespace overload {

/// Interior offset keeping log arguments strictly positive.
inline constexpr double kBoundaryOffset = 1e-9;

struct EconomyParams {
  int n = 2;            // identical agents
  double wage = 1.0;    // consumption units per hour
  double hours = 24.0;  // time endowment

  void validate() const {
    if (n < 1) throw DomainError("economy.n must be >= 1");
    if (!(wage > 0.0) || std::isinf(wage)) throw DomainError("economy.wage must be > 0");
    if (!(hours > 0.0) || std::isinf(hours)) throw DomainError("economy.hours must be > 0");
  }
};

struct Preferences {
  double alpha = 1.0;  // weight on ln C
  double beta = 1.0;   // weight on ln L
  double delta = 0.1;  // pollution disutility scale
  double mu = 0.0;     // direct benefit of knowledge (extended model only)

  void validate() const {
    if (!(alpha > 0.0)) throw DomainError("preferences.alpha must be > 0");
    if (!(beta > 0.0)) throw DomainError("preferences.beta must be > 0");
    if (!(delta >= 0.0)) throw DomainError("preferences.delta must be >= 0");
    if (!(mu >= 0.0)) throw DomainError("preferences.mu must be >= 0");
  }
};

struct PollutionTech {
  double gamma = 1.0;  // convexity, P(X) = X^gamma / gamma

  void validate() const {
    if (!(gamma >= 1.0) || std::isinf(gamma)) throw DomainError("pollution.gamma must be >= 1");
  }
};

struct Bundle {
  double consumption = 0.0;
  double leisure = 0.0;
  double awareness = 0.0;
  double pollution = 0.0;  // total pollution at this allocation
  double perceived_utility = 0.0;
  double true_welfare = 0.0;
};

namespace detail {

inline void require_awareness(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("awareness must lie in [0, 1]");
}

inline void require_others(double others) {
  if (!(others >= 0.0) || std::isinf(others))
    throw DomainError("others' consumption must be finite and >= 0");
}

/// P'(X) = X^(gamma - 1).
inline double marginal_pollution(double total, const PollutionTech& tech) {
  return tech.gamma == 1.0 ? 1.0 : std::pow(total, tech.gamma - 1.0);
}

}  // namespace detail

inline double pollution(double total_consumption, const PollutionTech& tech) {
  tech.validate();
  if (!(total_consumption >= 0.0)) throw DomainError("pollution: total consumption must be >= 0");
  return std::pow(total_consumption, tech.gamma) / tech.gamma;
}

inline double perceived_utility(double consumption, double leisure, double awareness,
                                double others_consumption, const Preferences& prefs,
                                const PollutionTech& tech) {
  prefs.validate();
  if (!(consumption > 0.0)) throw DomainError("perceived_utility: consumption must be > 0");
  if (!(leisure > 0.0)) throw DomainError("perceived_utility: leisure must be > 0");
  detail::require_awareness(awareness);
  detail::require_others(others_consumption);
  return prefs.alpha * std::log(consumption) + prefs.beta * std::log(leisure) -
         awareness * prefs.delta * pollution(consumption + others_consumption, tech);
}

inline double true_welfare(double consumption, double leisure, double others_consumption,
                           const Preferences& prefs, const PollutionTech& tech) {
  return perceived_utility(consumption, leisure, 1.0, others_consumption, prefs, tech);
}

inline Bundle make_bundle(double consumption, double leisure, double awareness,
                          double others_consumption, const Preferences& prefs,
                          const PollutionTech& tech) {
  Bundle out;
  out.consumption = consumption;
  out.leisure = leisure;
  out.awareness = awareness;
  out.pollution = pollution(consumption + others_consumption, tech);
  out.perceived_utility =
      perceived_utility(consumption, leisure, awareness, others_consumption, prefs, tech);
  out.true_welfare = true_welfare(consumption, leisure, others_consumption, prefs, tech);
  return out;
}

/// The choice that ignores pollution (a = 0), identical to a world without
/// the externality. Closed form C = T w alpha / (alpha + beta). Pollution and
/// welfare are evaluated with every agent choosing the same bundle.
inline Bundle naive_bundle(const Preferences& prefs, const EconomyParams& econ,
                           const PollutionTech& tech = {}) {
  prefs.validate();
  econ.validate();
  const double share = prefs.beta / (prefs.alpha + prefs.beta);
  const double leisure = econ.hours * share;
  const double consumption = econ.wage * (econ.hours - leisure);
  return make_bundle(consumption, leisure, 0.0, (econ.n - 1) * consumption, prefs, tech);
}

/// Self-concerned optimum given the others' total consumption.
inline Solved<Bundle> best_response(double awareness, double others_consumption,
                                    const Preferences& prefs, const PollutionTech& tech,
                                    const EconomyParams& econ, const SolverSettings& settings = {}) {
  prefs.validate();
  tech.validate();
  econ.validate();
  detail::require_awareness(awareness);
  detail::require_others(others_consumption);

  const double w = econ.wage;
  const double hours = econ.hours;
  const double damage = awareness * prefs.delta;
  auto objective = [&](double leisure) {
    const double c = w * (hours - leisure);
    return prefs.alpha * std::log(c) + prefs.beta * std::log(leisure) -
           damage * pollution(c + others_consumption, tech);
  };
  auto slope = [&](double leisure) {
    const double c = w * (hours - leisure);
    return -w * prefs.alpha / c + prefs.beta / leisure +
           damage * w * detail::marginal_pollution(c + others_consumption, tech);
  };
  const auto report =
      maximize_bounded(objective, slope, kBoundaryOffset, hours - kBoundaryOffset, settings);
  const double leisure = report.x();
  const double consumption = w * (hours - leisure);
  return {make_bundle(consumption, leisure, awareness, others_consumption, prefs, tech), report};
}

}  // namespace overload

#endif
