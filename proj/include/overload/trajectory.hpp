#ifndef OVERLOAD_TRAJECTORY_HPP
#define OVERLOAD_TRAJECTORY_HPP

// Time paths of information and energy use mapped through the awareness
// function, plus a classifier for the shape of the resulting series.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "overload/awareness.hpp"
#include "overload/errors.hpp"

namespace overload {

enum class PathKind { constant, linear, exponential, logistic };

/// Which variable a path drives; decides the domain check on its values.
enum class PathTarget { unconstrained, information, energy };

struct PathSpec {
  PathKind kind = PathKind::constant;
  double start = 0.0;
  double end = 0.0;        // linear, logistic
  double rate = 0.0;       // exponential
  double midpoint = 0.0;   // logistic
  double steepness = 1.0;  // logistic
  double horizon = std::numeric_limits<double>::infinity();  // linear spans [0, horizon]
};

struct Series {
  std::vector<double> t;
  std::vector<double> values;

  void validate() const {
    if (t.size() != values.size()) throw std::invalid_argument("Series: t and values differ in length");
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!(t[i] > t[i - 1])) throw std::invalid_argument("Series: t must be strictly increasing");
    }
  }
};

enum class PeakShape { unimodal, monotone, multimodal };

struct PeakVerdict {
  PeakShape shape = PeakShape::monotone;
  std::size_t peak_index = 0;  // meaningful for unimodal series
};

inline std::string to_string(PathKind kind) {
  switch (kind) {
    case PathKind::constant: return "constant";
    case PathKind::linear: return "linear";
    case PathKind::exponential: return "exponential";
    case PathKind::logistic: return "logistic";
  }
  return "constant";
}

inline std::string to_string(PeakShape shape) {
  switch (shape) {
    case PeakShape::unimodal: return "unimodal";
    case PeakShape::monotone: return "monotone";
    case PeakShape::multimodal: return "multimodal";
  }
  return "monotone";
}

inline double path_eval(const PathSpec& spec, double t, PathTarget target = PathTarget::unconstrained) {
  if (!(t >= 0.0 && t <= spec.horizon))
    throw DomainError("path_eval: t = " + std::to_string(t) + " outside the path horizon");
  double value = spec.start;
  switch (spec.kind) {
    case PathKind::constant:
      break;
    case PathKind::linear:
      if (!std::isfinite(spec.horizon) || !(spec.horizon > 0.0))
        throw std::invalid_argument("path_eval: linear path needs a finite horizon > 0");
      value = spec.start + (spec.end - spec.start) * (t / spec.horizon);
      break;
    case PathKind::exponential:
      value = spec.start * std::exp(spec.rate * t);
      break;
    case PathKind::logistic:
      value = spec.start + (spec.end - spec.start) / (1.0 + std::exp(-spec.steepness * (t - spec.midpoint)));
      break;
  }
  if (target == PathTarget::information && !(value >= 0.0 && value <= 1.0))
    throw DomainError("information path leaves [0, 1] at t = " + std::to_string(t));
  if (target == PathTarget::energy && !(value >= 0.0))
    throw DomainError("energy path is negative at t = " + std::to_string(t));
  return value;
}

/// steps points evenly spaced on [0, t_max].
inline std::vector<double> uniform_grid(double t_max, int steps) {
  if (!(t_max > 0.0) || steps < 2) throw std::invalid_argument("uniform_grid: needs t_max > 0 and steps >= 2");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = t_max * (static_cast<double>(i) / (steps - 1));
  return grid;
}

inline Series awareness_trajectory(const PathSpec& information_path, const PathSpec& energy_path,
                                   std::span<const double> grid) {
  Series out;
  out.t.assign(grid.begin(), grid.end());
  out.values.reserve(grid.size());
  for (double t : grid) {
    out.values.push_back(awareness_info(path_eval(information_path, t, PathTarget::information),
                                        path_eval(energy_path, t, PathTarget::energy)));
  }
  out.validate();
  return out;
}

/// Classify by the signs of successive differences; steps within 1e-12 are
/// flat and merge into their neighbours.
inline PeakVerdict single_peak(std::span<const double> values) {
  if (values.size() < 3) throw std::invalid_argument("single_peak: needs at least 3 values");
  constexpr double kFlat = 1e-12;
  int last_sign = 0;
  int sign_runs = 0;
  bool rose = false;
  std::size_t peak = 0;
  bool peak_fixed = false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double diff = values[i] - values[i - 1];
    const int sign = diff > kFlat ? 1 : (diff < -kFlat ? -1 : 0);
    if (sign == 0) continue;
    if (sign != last_sign) {
      ++sign_runs;
      if (last_sign == 1 && sign == -1 && !peak_fixed) peak_fixed = true;
      last_sign = sign;
    }
    if (sign == 1) {
      rose = true;
      if (!peak_fixed) peak = i;
    }
  }
  PeakVerdict verdict;
  if (sign_runs <= 1) {
    verdict.shape = PeakShape::monotone;
  } else if (sign_runs == 2 && rose && peak_fixed) {
    verdict.shape = PeakShape::unimodal;
    verdict.peak_index = peak;
  } else {
    verdict.shape = PeakShape::multimodal;
  }
  return verdict;
}

inline PeakVerdict single_peak(const Series& series) { return single_peak(std::span<const double>(series.values)); }

}  // namespace overload

#endif
