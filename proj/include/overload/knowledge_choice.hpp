#ifndef OVERLOAD_KNOWLEDGE_CHOICE_HPP
#define OVERLOAD_KNOWLEDGE_CHOICE_HPP

// Time allocation when information has to be processed into knowledge.
//
//   U = alpha ln C + beta ln L_L + mu ln(1 + K) - a(K, E) delta P(C + C_others)
//   K = I(1 - I) L_K^b,   C = w (T - L_L - L_K)
//
// Processing time L_K raises knowledge, which both benefits the agent
// directly and sharpens awareness of the pollution damage.

#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "overload/awareness.hpp"
#include "overload/choice.hpp"
#include "overload/numerics.hpp"

namespace overload {

struct ExtendedBundle {
  double consumption = 0.0;
  double pure_leisure = 0.0;
  double processing_time = 0.0;
  double knowledge = 0.0;
  double awareness = 0.0;
  double pollution = 0.0;
  double perceived_utility = 0.0;
  double true_welfare = 0.0;  // utility with the damage fully perceived
};

/// How the agent's awareness is set while choosing.
enum class AwarenessRule {
  from_knowledge,  // a = a(K, E)
  full,            // a = 1 regardless of knowledge
};

struct InformationPoint {
  double information = 0.0;
  double knowledge = 0.0;
  double awareness = 0.0;
};

inline double extended_utility(double consumption, double pure_leisure, double processing_time,
                               double information, double energy, double others_consumption,
                               const Preferences& prefs, const PollutionTech& tech,
                               const KnowledgeParams& kparams, const AwarenessSpec& aspec) {
  prefs.validate();
  if (!(consumption > 0.0)) throw DomainError("extended_utility: consumption must be > 0");
  if (!(pure_leisure > 0.0)) throw DomainError("extended_utility: pure leisure must be > 0");
  detail::require_others(others_consumption);
  const double knowledge = knowledge_stock(information, processing_time, kparams);
  const double a = awareness_knowledge(knowledge, energy, aspec);
  return prefs.alpha * std::log(consumption) + prefs.beta * std::log(pure_leisure) +
         prefs.mu * std::log1p(knowledge) -
         a * prefs.delta * pollution(consumption + others_consumption, tech);
}

namespace detail {

struct ExtendedModel {
  double information;
  double energy;
  double others;
  Preferences prefs;
  PollutionTech tech;
  KnowledgeParams kparams;
  AwarenessSpec aspec;
  EconomyParams econ;
  AwarenessRule rule;

  double factor() const { return information * (1.0 - information); }

  double knowledge(double processing) const {
    return factor() * std::pow(processing, kparams.b);
  }

  double awareness(double knowledge) const {
    return rule == AwarenessRule::full ? 1.0 : awareness_knowledge(knowledge, energy, aspec);
  }

  double consumption(double pure, double processing) const {
    return econ.wage * (econ.hours - pure - processing);
  }

  double utility(double pure, double processing) const {
    const double c = consumption(pure, processing);
    const double k = knowledge(processing);
    return prefs.alpha * std::log(c) + prefs.beta * std::log(pure) + prefs.mu * std::log1p(k) -
           awareness(k) * prefs.delta * pollution(c + others, tech);
  }

  /// {dU/dL_L, dU/dL_K}; dU/dL_K is +-inf at L_K = 0 when I(1 - I) > 0.
  std::array<double, 2> gradient(double pure, double processing) const {
    const double w = econ.wage;
    const double c = consumption(pure, processing);
    const double k = knowledge(processing);
    const double a = awareness(k);
    const double total = c + others;
    const double common = -w * prefs.alpha / c + a * prefs.delta * w * marginal_pollution(total, tech);

    const double damage_slope = rule == AwarenessRule::full
                                    ? 0.0
                                    : prefs.delta * pollution(total, tech) *
                                          awareness_knowledge_slope(k, energy, aspec);
    const double knowledge_value = prefs.mu / (1.0 + k) - damage_slope;
    double via_knowledge = 0.0;
    if (factor() > 0.0 && knowledge_value != 0.0) {
      if (processing == 0.0) {
        via_knowledge = std::copysign(std::numeric_limits<double>::infinity(), knowledge_value);
      } else {
        via_knowledge = knowledge_value * factor() * kparams.b * std::pow(processing, kparams.b - 1.0);
      }
    }
    return {common + prefs.beta / pure, common + via_knowledge};
  }

  ExtendedBundle bundle(double pure, double processing) const {
    ExtendedBundle out;
    out.consumption = consumption(pure, processing);
    out.pure_leisure = pure;
    out.processing_time = processing;
    out.knowledge = knowledge(processing);
    out.awareness = awareness(out.knowledge);
    out.pollution = pollution(out.consumption + others, tech);
    const double private_part = prefs.alpha * std::log(out.consumption) +
                                prefs.beta * std::log(pure) + prefs.mu * std::log1p(out.knowledge);
    out.perceived_utility = private_part - out.awareness * prefs.delta * out.pollution;
    out.true_welfare = private_part - prefs.delta * out.pollution;
    return out;
  }
};

}  // namespace detail

/// Optimal split of the time endowment between work, pure leisure and
/// information processing, with the others' consumption held fixed.
inline Solved<ExtendedBundle, PairReport> extended_bundle(
    double information, double energy, double others_consumption, const Preferences& prefs,
    const PollutionTech& tech, const KnowledgeParams& kparams, const AwarenessSpec& aspec,
    const EconomyParams& econ, const SolverSettings& settings = {},
    AwarenessRule rule = AwarenessRule::from_knowledge) {
  prefs.validate();
  tech.validate();
  kparams.validate();
  aspec.validate();
  econ.validate();
  detail::require_information(information);
  detail::require_energy(energy);
  detail::require_others(others_consumption);
  if (rule == AwarenessRule::from_knowledge && aspec.mode != AwarenessMode::knowledge)
    throw std::invalid_argument("extended_bundle requires awareness mode 'knowledge'");

  const detail::ExtendedModel model{information, energy, others_consumption, prefs, tech,
                                    kparams,     aspec,  econ,               rule};
  // x = L_L - eps keeps L_L >= eps; the shrunken budget keeps C >= w eps.
  const double budget = econ.hours - 2.0 * kBoundaryOffset;
  auto objective = [&](double x, double processing) {
    return model.utility(x + kBoundaryOffset, processing);
  };
  auto gradient = [&](double x, double processing) {
    return model.gradient(x + kBoundaryOffset, processing);
  };
  PairReport report = maximize_simplex2(objective, gradient, budget, settings);
  report.argument[0] += kBoundaryOffset;
  return {model.bundle(report.argument[0], report.argument[1]), report};
}

/// Knowledge and awareness across information levels at fixed processing time.
inline std::vector<InformationPoint> information_sweep(double energy, double processing_time,
                                                       std::span<const double> information_grid,
                                                       const KnowledgeParams& kparams,
                                                       const AwarenessSpec& aspec) {
  std::vector<InformationPoint> out;
  out.reserve(information_grid.size());
  for (double information : information_grid) {
    InformationPoint point;
    point.information = information;
    point.knowledge = knowledge_stock(information, processing_time, kparams);
    point.awareness = awareness_knowledge(point.knowledge, energy, aspec);
    out.push_back(point);
  }
  return out;
}

}  // namespace overload

#endif
