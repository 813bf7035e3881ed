#ifndef OVERLOAD_TESTS_ORACLES_HPP
#define OVERLOAD_TESTS_ORACLES_HPP

// Brute-force reference solutions. Nothing here calls into the library
// solvers; the extended-model oracle also re-derives the utility itself.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <utility>

namespace oracle {

/// Best point of the lattice lo, lo + step, ... <= hi.
template <class F>
double grid_argmax(F&& f, double lo, double hi, double step) {
  const long n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  double best_x = lo;
  double best_f = -std::numeric_limits<double>::infinity();
  for (long i = 0; i <= n; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    const double v = f(x);
    if (v > best_f) {
      best_f = v;
      best_x = x;
    }
  }
  return best_x;
}

/// Same answer as grid_argmax at resolution `step` for unimodal f: a coarse
/// pass at 1000 x step, then the full fine lattice over the two coarse cells
/// on either side of the coarse winner.
template <class F>
double grid_argmax_refined(F&& f, double lo, double hi, double step) {
  const double coarse = 1000.0 * step;
  const double x0 = grid_argmax(f, lo, hi, coarse);
  return grid_argmax(f, std::max(lo, x0 - 2.0 * coarse), std::min(hi, x0 + 2.0 * coarse), step);
}

/// Exhaustive lattice over {x, y >= 0, x + y <= budget}.
template <class F>
std::array<double, 2> simplex_grid_argmax(F&& f, double budget, double step,
                                          std::array<double, 2> origin = {0.0, 0.0},
                                          double extent = -1.0) {
  if (extent < 0.0) extent = budget;
  const long n = static_cast<long>(std::floor(extent / step + 1e-9));
  std::array<double, 2> best{origin};
  double best_f = -std::numeric_limits<double>::infinity();
  for (long i = 0; i <= n; ++i) {
    const double x = origin[0] + static_cast<double>(i) * step;
    if (x < 0.0 || x > budget) continue;
    for (long j = 0; j <= n; ++j) {
      const double y = origin[1] + static_cast<double>(j) * step;
      if (y < 0.0 || x + y > budget) continue;
      const double v = f(x, y);
      if (v > best_f) {
        best_f = v;
        best = {x, y};
      }
    }
  }
  return best;
}

/// Lattice at `coarse`, then a fine lattice (step) over +-2 coarse cells.
template <class F>
std::array<double, 2> simplex_grid_argmax_refined(F&& f, double budget, double coarse, double step) {
  const auto c = simplex_grid_argmax(f, budget, coarse);
  return simplex_grid_argmax(f, budget, step, {c[0] - 2.0 * coarse, c[1] - 2.0 * coarse}, 4.0 * coarse);
}

/// Consumption/leisure utility written out independently of the library.
struct ChoiceOracle {
  double alpha = 1.0, beta = 1.0, delta = 0.1, gamma = 1.0, wage = 1.0, hours = 24.0;

  double pollution(double x) const { return std::pow(x, gamma) / gamma; }

  /// Best-response consumption by grid search over leisure at `step`.
  double best_response(double a, double others, double step) const {
    auto u = [&](double leisure) {
      const double c = wage * (hours - leisure);
      if (c <= 0.0 || leisure <= 0.0) return -std::numeric_limits<double>::infinity();
      return alpha * std::log(c) + beta * std::log(leisure) - a * delta * pollution(c + others);
    };
    return wage * (hours - grid_argmax_refined(u, step, hours - step, step));
  }

  /// Symmetric planner consumption by grid search over leisure.
  double efficient(double a, int n, double step) const {
    auto u = [&](double leisure) {
      const double c = wage * (hours - leisure);
      if (c <= 0.0 || leisure <= 0.0) return -std::numeric_limits<double>::infinity();
      return alpha * std::log(c) + beta * std::log(leisure) - a * delta * pollution(n * c);
    };
    return wage * (hours - grid_argmax_refined(u, step, hours - step, step));
  }

  /// Symmetric Nash consumption: damped iteration of the grid best response.
  double nash(double a, int n, double step) const {
    double c = wage * hours * alpha / (alpha + beta);
    for (int it = 0; it < 2000; ++it) {
      const double next = best_response(a, (n - 1) * c, step);
      if (std::abs(next - c) < 0.1 * step) return next;
      c = 0.5 * c + 0.5 * next;
    }
    return c;
  }
};

struct ExtendedOracle {
  double information = 0.5, energy = 0.0, others = 0.0;
  double alpha = 1.0, beta = 1.0, mu = 1.0, delta = 0.1, gamma = 1.0;
  double b = 0.5, kappa = 0.25, wage = 1.0, hours = 24.0;

  /// (L_L, L_K) maximizing the extended utility over a `step` lattice; the
  /// awareness term is computed once per L_K row.
  std::array<double, 2> argmax(double step) const {
    const long n = static_cast<long>(std::floor(hours / step + 1e-9));
    std::array<double, 2> best{step, 0.0};
    double best_u = -std::numeric_limits<double>::infinity();
    for (long j = 0; j <= n; ++j) {
      const double lk = static_cast<double>(j) * step;
      const double k = information * (1.0 - information) * std::pow(lk, b);
      const double a = (1.0 - std::exp(-k / kappa)) / (1.0 + std::log(1.0 + energy));
      const double knowledge_part = mu * std::log(1.0 + k);
      for (long i = 1; i <= n; ++i) {
        const double ll = static_cast<double>(i) * step;
        const double c = wage * (hours - ll - lk);
        if (c <= 0.0) break;
        const double u = alpha * std::log(c) + beta * std::log(ll) + knowledge_part -
                         a * delta * std::pow(c + others, gamma) / gamma;
        if (u > best_u) {
          best_u = u;
          best = {ll, lk};
        }
      }
    }
    return best;
  }
};

inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

}  // namespace oracle

#endif
