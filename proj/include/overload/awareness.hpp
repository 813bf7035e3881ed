#ifndef OVERLOAD_AWARENESS_HPP
#define OVERLOAD_AWARENESS_HPP

// Awareness of the environmental side effects of consumption, as a function
// of the information level I in [0, 1] and exosomatic energy use E >= 0.
// Information has an inverted-U effect through the factor I(1 - I); energy
// use lowers awareness monotonically.

#include <cmath>
#include <stdexcept>
#include <string>

#include "overload/errors.hpp"
#include "overload/numerics.hpp"

namespace overload {

enum class AwarenessMode { information, knowledge };

struct AwarenessSpec {
  AwarenessMode mode = AwarenessMode::information;
  double kappa = 0.25;  // knowledge saturation scale (knowledge mode only)

  void validate() const {
    if (!(kappa > 0.0)) throw DomainError("awareness.kappa must be > 0");
  }
};

struct KnowledgeParams {
  double b = 0.5;  // returns-to-time exponent, 0 < b < 1

  void validate() const {
    if (!(b > 0.0 && b < 1.0)) throw DomainError("knowledge.b must lie in (0, 1)");
  }
};

namespace detail {

inline void require_information(double information) {
  if (!(information >= 0.0 && information <= 1.0))
    throw DomainError("information level must lie in [0, 1], got " + std::to_string(information));
}

inline void require_energy(double energy) {
  if (!(energy >= 0.0) || std::isinf(energy))
    throw DomainError("exosomatic energy must be finite and >= 0, got " + std::to_string(energy));
}

}  // namespace detail

/// I(1 - I): zero with no information and under full overload, 1/4 at I = 1/2.
inline double overload_factor(double information) {
  detail::require_information(information);
  return information * (1.0 - information);
}

/// a = I(1 - I) / (ln(1 + E) + 1/4). Peaks at a = 1 for I = 1/2, E = 0.
inline double awareness_info(double information, double energy) {
  detail::require_information(information);
  detail::require_energy(energy);
  return information * (1.0 - information) / (std::log1p(energy) + 0.25);
}

/// K = I(1 - I) L_K^b: knowledge from time spent processing information.
inline double knowledge_stock(double information, double processing_hours,
                              const KnowledgeParams& params) {
  params.validate();
  detail::require_information(information);
  if (!(processing_hours >= 0.0) || std::isinf(processing_hours))
    throw DomainError("processing time must be finite and >= 0");
  return information * (1.0 - information) * std::pow(processing_hours, params.b);
}

/// a(K, E) = (1 - exp(-K / kappa)) / (1 + ln(1 + E)); in [0, 1), increasing
/// and concave in K, decreasing in E.
inline double awareness_knowledge(double knowledge, double energy, const AwarenessSpec& spec) {
  spec.validate();
  if (spec.mode != AwarenessMode::knowledge)
    throw std::invalid_argument("awareness_knowledge requires awareness mode 'knowledge'");
  if (!(knowledge >= 0.0)) throw DomainError("knowledge stock must be >= 0");
  detail::require_energy(energy);
  return -std::expm1(-knowledge / spec.kappa) / (1.0 + std::log1p(energy));
}

/// d a(K, E) / dK.
inline double awareness_knowledge_slope(double knowledge, double energy, const AwarenessSpec& spec) {
  return std::exp(-knowledge / spec.kappa) / (spec.kappa * (1.0 + std::log1p(energy)));
}

/// Information level I0 beyond which more information lowers awareness,
/// found numerically as the maximizer of form(., E) on [0, 1].
template <class Form>
double overload_threshold(Form&& form, double energy, const SolverSettings& settings = {}) {
  detail::require_energy(energy);
  const auto report =
      maximize_bounded([&](double information) { return form(information, energy); }, 0.0, 1.0, settings);
  return report.x();
}

inline double overload_threshold(double energy, const SolverSettings& settings = {}) {
  return overload_threshold(awareness_info, energy, settings);
}

}  // namespace overload

#endif
