#ifndef OVERLOAD_NUMERICS_HPP
#define OVERLOAD_NUMERICS_HPP

// Deterministic scalar and two-variable solvers shared by every model module.
//
// Objectives may return -inf to mark points where they are infeasible (log of
// zero at a boundary); such points rank below every finite value. NaN and
// +inf are rejected with EvaluationError.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>

#include "overload/errors.hpp"

namespace overload {

struct SolverSettings {
  double tol = 1e-10;     // convergence tolerance on the argument
  int max_iter = 500;
  double damping = 0.5;   // fixed-point relaxation
  double fd_step = 1e-6;  // finite-difference step

  void validate() const {
    if (!(tol > 0.0)) throw std::invalid_argument("SolverSettings: tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("SolverSettings: max_iter must be >= 1");
    if (!(damping > 0.0 && damping <= 1.0))
      throw std::invalid_argument("SolverSettings: damping must lie in (0, 1]");
    if (!(fd_step > 0.0)) throw std::invalid_argument("SolverSettings: fd_step must be > 0");
  }

  /// Bound on the first-order residual that counts as converged.
  double residual_bound(double value) const { return 1e4 * tol * (1.0 + std::abs(value)); }
};

template <std::size_t N>
struct SolveReport {
  std::array<double, N> argument{};
  double value = 0.0;
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;

  double x() const { return argument[0]; }
};

using ScalarReport = SolveReport<1>;
using PairReport = SolveReport<2>;

/// Solver output paired with the domain object built from it.
template <class T, class Report = ScalarReport>
struct Solved {
  T result;
  Report report;
};

namespace detail {

inline constexpr double kInvPhi = 0.61803398874989484820;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double checked(double v, const char* what) {
  if (std::isnan(v) || v == kInf)
    throw EvaluationError(std::string(what) + " produced a non-finite value");
  return v;
}

/// Derivative that is NaN-checked but may be +-inf at a boundary.
inline double checked_slope(double v) {
  if (std::isnan(v)) throw EvaluationError("derivative evaluation produced NaN");
  return v;
}

/// Finite-difference slope of f restricted to [lo, hi]: central when both
/// neighbours are inside, one-sided otherwise.
template <class F>
double bounded_slope(F& f, double x, double lo, double hi, double h) {
  if (x - h >= lo && x + h <= hi) return (f(x + h) - f(x - h)) / (2.0 * h);
  if (x + h <= hi) return (f(x + h) - f(x)) / h;
  if (x - h >= lo) return (f(x) - f(x - h)) / h;
  return 0.0;
}

/// Locate the stationary point of a unimodal function near x0 by bisection on
/// its slope. Returns an endpoint when the slope says the maximum sits there.
template <class D>
double polish_on_slope(D& slope, double x0, double lo, double hi, double step, int budget,
                       int& iterations) {
  if (lo == hi) return lo;
  double s = step * (1.0 + std::abs(x0));
  double a = x0;
  double da = 0.0;
  for (;;) {
    a = std::max(lo, x0 - s);
    da = checked_slope(slope(a));
    if (a == lo || da > 0.0) break;
    s *= 4.0;
  }
  if (a == lo && da <= 0.0) return lo;

  s = step * (1.0 + std::abs(x0));
  double b = x0;
  double db = 0.0;
  for (;;) {
    b = std::min(hi, x0 + s);
    db = checked_slope(slope(b));
    if (b == hi || db < 0.0) break;
    s *= 4.0;
  }
  if (b == hi && db >= 0.0) return hi;

  // slope(a) > 0 > slope(b)
  while (iterations < budget) {
    const double m = a + 0.5 * (b - a);
    if (m <= a || m >= b) break;
    ++iterations;
    const double dm = checked_slope(slope(m));
    if (dm > 0.0) {
      a = m;
    } else if (dm < 0.0) {
      b = m;
    } else {
      return m;
    }
  }
  return a + 0.5 * (b - a);
}

template <class F, class D>
ScalarReport maximize_bounded_impl(F& f, D& slope, double lo, double hi,
                                   const SolverSettings& settings, bool exact_slope) {
  settings.validate();
  if (!(lo < hi)) throw std::invalid_argument("maximize_bounded: requires lo < hi");
  auto eval = [&](double x) { return checked(f(x), "objective"); };

  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  int it = 0;
  bool bracket_done = false;
  while (it < settings.max_iter) {
    const double width_tol =
        std::max(settings.tol, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(a + b));
    if (b - a <= width_tol) {
      bracket_done = true;
      break;
    }
    ++it;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = eval(d);
    }
  }
  const double golden_x = fc >= fd ? c : d;
  const double golden_f = std::max(fc, fd);

  int polish_it = it;
  double x = polish_on_slope(slope, golden_x, lo, hi, settings.fd_step, settings.max_iter,
                             polish_it);
  double fx = eval(x);
  if (!exact_slope) {
    // Noisy slopes may walk off a flat top; keep the better of the two.
    const double slack = 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(golden_f));
    if (fx < golden_f - slack) {
      x = golden_x;
      fx = golden_f;
    }
  }

  ScalarReport report;
  report.argument = {x};
  report.value = fx;
  report.iterations = polish_it;
  const double g = checked_slope(slope(x));
  if (x == lo) {
    report.residual = std::max(0.0, g);
  } else if (x == hi) {
    report.residual = std::max(0.0, -g);
  } else {
    report.residual = std::abs(g);
  }
  const bool polished = polish_it > it || x == lo || x == hi;
  report.converged = (bracket_done || polished) && report.residual <= settings.residual_bound(fx);
  return report;
}

/// Feasible parameter range t for p + t*dir inside {x, y >= 0, x + y <= budget}.
inline std::pair<double, double> simplex_line_range(std::array<double, 2> p,
                                                    std::array<double, 2> dir, double budget) {
  double tlo = -kInf;
  double thi = kInf;
  // each constraint reads value + t*rate >= 0
  auto limit = [&](double value, double rate) {
    if (rate > 0.0) {
      tlo = std::max(tlo, -value / rate);
    } else if (rate < 0.0) {
      thi = std::min(thi, -value / rate);
    }
  };
  limit(p[0], dir[0]);
  limit(p[1], dir[1]);
  limit(budget - p[0] - p[1], -(dir[0] + dir[1]));
  return {std::min(tlo, 0.0), std::max(thi, 0.0)};
}

inline std::array<double, 2> project_simplex(std::array<double, 2> p, double budget) {
  double x = std::clamp(p[0], 0.0, budget);
  double y = std::clamp(p[1], 0.0, budget);
  if (x + y > budget) {
    const double excess = 0.5 * (x + y - budget);
    x -= excess;
    y -= excess;
    if (x < 0.0) {
      x = 0.0;
      y = budget;
    } else if (y < 0.0) {
      y = 0.0;
      x = budget;
    }
  }
  return {x, y};
}

inline double triangle_area(const std::array<double, 2>& a, const std::array<double, 2>& b,
                            const std::array<double, 2>& c) {
  return 0.5 * std::abs((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]));
}

template <class F, class G>
PairReport maximize_simplex2_impl(F& f, G& grad, double budget, const SolverSettings& settings,
                                  bool exact_grad) {
  settings.validate();
  if (!(budget > 0.0)) throw std::invalid_argument("maximize_simplex2: budget must be > 0");
  using Point = std::array<double, 2>;
  auto eval = [&](const Point& p) { return checked(f(p[0], p[1]), "objective"); };

  // Seed from a coarse lattice so that non-concave objectives start in the
  // basin of the best region.
  constexpr int kLattice = 32;
  const double cell = budget / kLattice;
  Point seed{budget / 3.0, budget / 3.0};
  double seed_f = eval(seed);
  for (int i = 0; i <= kLattice; ++i) {
    for (int j = 0; i + j <= kLattice; ++j) {
      const Point p = project_simplex({i * cell, j * cell}, budget);
      const double v = eval(p);
      if (v > seed_f) {
        seed = p;
        seed_f = v;
      }
    }
  }

  // Nelder-Mead on the clipped simplex.
  std::array<Point, 3> simplex{};
  {
    const std::array<Point, 4> candidates{
        project_simplex({seed[0] + cell, seed[1]}, budget),
        project_simplex({seed[0], seed[1] + cell}, budget),
        project_simplex({seed[0] - cell, seed[1]}, budget),
        project_simplex({seed[0], seed[1] - cell}, budget)};
    double best_area = -1.0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        const double area = triangle_area(seed, candidates[i], candidates[j]);
        if (area > best_area) {
          best_area = area;
          simplex = {seed, candidates[i], candidates[j]};
        }
      }
    }
  }
  std::array<double, 3> values{eval(simplex[0]), eval(simplex[1]), eval(simplex[2])};
  auto order = [&] {
    std::array<std::size_t, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](std::size_t l, std::size_t r) { return values[l] > values[r]; });
    std::array<Point, 3> s{simplex[idx[0]], simplex[idx[1]], simplex[idx[2]]};
    std::array<double, 3> v{values[idx[0]], values[idx[1]], values[idx[2]]};
    simplex = s;
    values = v;
  };
  const int nm_budget = std::max(1, std::min(settings.max_iter / 2, 400));
  int nm_it = 0;
  const double nm_size_tol = 1e-7 * (1.0 + budget);
  for (; nm_it < nm_budget; ++nm_it) {
    order();
    const double diameter =
        std::max({std::hypot(simplex[1][0] - simplex[0][0], simplex[1][1] - simplex[0][1]),
                  std::hypot(simplex[2][0] - simplex[0][0], simplex[2][1] - simplex[0][1])});
    if (diameter <= nm_size_tol) break;
    const Point centroid{0.5 * (simplex[0][0] + simplex[1][0]), 0.5 * (simplex[0][1] + simplex[1][1])};
    auto along = [&](double coef) {
      return project_simplex({centroid[0] + coef * (simplex[2][0] - centroid[0]),
                              centroid[1] + coef * (simplex[2][1] - centroid[1])},
                             budget);
    };
    const Point reflected = along(-1.0);
    const double fr = eval(reflected);
    if (fr > values[0]) {
      const Point expanded = along(-2.0);
      const double fe = eval(expanded);
      if (fe > fr) {
        simplex[2] = expanded;
        values[2] = fe;
      } else {
        simplex[2] = reflected;
        values[2] = fr;
      }
    } else if (fr > values[1]) {
      simplex[2] = reflected;
      values[2] = fr;
    } else {
      const bool outside = fr > values[2];
      const Point contracted = along(outside ? -0.5 : 0.5);
      const double fcon = eval(contracted);
      if (fcon > std::max(fr, values[2]) || (fcon == values[2] && !outside)) {
        simplex[2] = contracted;
        values[2] = fcon;
      } else {
        for (std::size_t k = 1; k < 3; ++k) {
          simplex[k] = {simplex[0][0] + 0.5 * (simplex[k][0] - simplex[0][0]),
                        simplex[0][1] + 0.5 * (simplex[k][1] - simplex[0][1])};
          values[k] = eval(simplex[k]);
        }
      }
    }
  }
  order();
  Point p = simplex[0];
  double fp = values[0];
  if (seed_f > fp) {
    p = seed;
    fp = seed_f;
  }

  // Polish with exact line searches along both axes and the budget edge.
  const std::array<Point, 3> directions{Point{1.0, 0.0}, Point{0.0, 1.0}, Point{1.0, -1.0}};
  SolverSettings line_settings = settings;
  int cycles = 0;
  bool settled = false;
  const int polish_budget = std::max(1, settings.max_iter - nm_it);
  while (cycles < polish_budget) {
    ++cycles;
    double moved = 0.0;
    const double cycle_start = fp;
    for (const Point& dir : directions) {
      const auto [tlo, thi] = simplex_line_range(p, dir, budget);
      if (!(thi > tlo)) continue;
      const Point base = p;
      auto line = [&](double t) {
        return f(base[0] + t * dir[0], base[1] + t * dir[1]);
      };
      ScalarReport r;
      if (exact_grad) {
        auto line_slope = [&](double t) {
          const auto g = grad(base[0] + t * dir[0], base[1] + t * dir[1]);
          double s = 0.0;
          if (dir[0] != 0.0) s += g[0] * dir[0];
          if (dir[1] != 0.0) s += g[1] * dir[1];
          return s;
        };
        r = maximize_bounded_impl(line, line_slope, tlo, thi, line_settings, true);
      } else {
        auto line_slope = [&](double t) { return bounded_slope(line, t, tlo, thi, settings.fd_step); };
        r = maximize_bounded_impl(line, line_slope, tlo, thi, line_settings, false);
      }
      const double t = r.x();
      // x + (-x) is exactly zero, so boundary optima land exactly on the edge.
      Point q = base;
      if (dir[0] != 0.0) q[0] = base[0] + t * dir[0];
      if (dir[1] != 0.0) q[1] = base[1] + t * dir[1];
      q = project_simplex(q, budget);
      const double fq = eval(q);
      const double slack =
          exact_grad ? 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(fp)) : 0.0;
      if (fq >= fp - slack) {
        moved = std::max({moved, std::abs(q[0] - p[0]), std::abs(q[1] - p[1])});
        p = q;
        fp = fq;
      }
    }
    // A cycle that gains nothing beyond rounding is only shuffling along a
    // flat top.
    const double noise = 16.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(fp));
    if (moved <= settings.tol || fp - cycle_start <= noise) {
      settled = true;
      break;
    }
  }

  // Projected-gradient residual: largest ascent rate along a feasible direction.
  double residual = 0.0;
  const std::array<Point, 6> probes{Point{1.0, 0.0},  Point{-1.0, 0.0}, Point{0.0, 1.0},
                                    Point{0.0, -1.0}, Point{1.0, -1.0}, Point{-1.0, 1.0}};
  std::array<double, 2> g{0.0, 0.0};
  if (exact_grad) g = grad(p[0], p[1]);
  for (const Point& dir : probes) {
    const auto [tlo, thi] = simplex_line_range(p, dir, budget);
    (void)tlo;
    if (!(thi > 0.0)) continue;
    double rate = 0.0;
    if (exact_grad) {
      if (dir[0] != 0.0) rate += g[0] * dir[0];
      if (dir[1] != 0.0) rate += g[1] * dir[1];
      if (std::isnan(rate)) rate = 0.0;
    } else {
      const double h = std::min(settings.fd_step, thi);
      rate = (eval({p[0] + h * dir[0], p[1] + h * dir[1]}) - fp) / h;
    }
    residual = std::max(residual, rate);
  }

  PairReport report;
  report.argument = p;
  report.value = fp;
  report.iterations = nm_it + cycles;
  report.residual = residual;
  report.converged = settled && residual <= settings.residual_bound(fp);
  return report;
}

}  // namespace detail

/// Maximize f on [lo, hi] by golden-section search, then sharpen the estimate
/// by bisection on a central-difference slope. For unimodal f the result is
/// the global maximizer; endpoints are returned exactly when the slope
/// points outward there.
template <class F>
ScalarReport maximize_bounded(F&& f, double lo, double hi, const SolverSettings& settings = {}) {
  auto slope = [&](double x) { return detail::bounded_slope(f, x, lo, hi, settings.fd_step); };
  return detail::maximize_bounded_impl(f, slope, lo, hi, settings, false);
}

/// As above, with an analytic derivative used for the final bisection. The
/// derivative may return +-inf at an endpoint.
template <class F, class D>
ScalarReport maximize_bounded(F&& f, D&& df, double lo, double hi,
                              const SolverSettings& settings = {}) {
  return detail::maximize_bounded_impl(f, df, lo, hi, settings, true);
}

/// Maximize f(x, y) on {x >= 0, y >= 0, x + y <= budget}: lattice seed,
/// Nelder-Mead with clipping, then alternating exact line searches along the
/// two axes and the budget edge until the point stops moving.
template <class F>
PairReport maximize_simplex2(F&& f, double budget, const SolverSettings& settings = {}) {
  auto no_grad = [](double, double) { return std::array<double, 2>{0.0, 0.0}; };
  return detail::maximize_simplex2_impl(f, no_grad, budget, settings, false);
}

/// As above with an analytic gradient {df/dx, df/dy}; components may be
/// +-inf on the boundary.
template <class F, class G>
PairReport maximize_simplex2(F&& f, G&& grad, double budget, const SolverSettings& settings = {}) {
  return detail::maximize_simplex2_impl(f, grad, budget, settings, true);
}

/// Bisection for a sign change of g on [lo, hi]. The observer, if given, sees
/// every bracket (lo, hi) after each halving.
template <class G, class Observer>
double bisect_root(G&& g, double lo, double hi, const SolverSettings& settings, Observer&& observer) {
  settings.validate();
  if (!(lo < hi)) throw std::invalid_argument("bisect_root: requires lo < hi");
  double glo = detail::checked(g(lo), "root function");
  const double ghi = detail::checked(g(hi), "root function");
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if ((glo > 0.0) == (ghi > 0.0))
    throw BracketError("bisect_root: g(lo) and g(hi) have the same sign");
  for (int it = 0; it < settings.max_iter && hi - lo > settings.tol; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double gm = detail::checked(g(mid), "root function");
    if (gm == 0.0) return mid;
    if ((gm > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
    observer(lo, hi);
  }
  return lo + 0.5 * (hi - lo);
}

template <class G>
double bisect_root(G&& g, double lo, double hi, const SolverSettings& settings = {}) {
  return bisect_root(std::forward<G>(g), lo, hi, settings, [](double, double) {});
}

/// Iterates must stay inside this box or the iteration is declared divergent.
struct FixedPointBox {
  double lo = -1e12;
  double hi = 1e12;
};

/// x <- (1 - damping) x + damping map(x) until |map(x) - x| <= tol.
/// argument is the last iterate, value is map(argument).
template <class Map>
ScalarReport damped_fixed_point(Map&& map, double x0, const SolverSettings& settings = {},
                                FixedPointBox box = {}) {
  settings.validate();
  if (!(x0 >= box.lo && x0 <= box.hi)) throw DivergenceError("damped_fixed_point: x0 outside box");
  double x = x0;
  ScalarReport report;
  for (int it = 0;; ++it) {
    const double m = detail::checked(map(x), "fixed-point map");
    const double r = std::abs(m - x);
    if (r <= settings.tol || it == settings.max_iter) {
      report.argument = {x};
      report.value = m;
      report.iterations = it;
      report.residual = r;
      report.converged = r <= settings.tol;
      return report;
    }
    x = (1.0 - settings.damping) * x + settings.damping * m;
    if (!(x >= box.lo && x <= box.hi))
      throw DivergenceError("damped_fixed_point: iterate left the admissible box");
  }
}

/// Central difference (f(x + h) - f(x - h)) / 2h.
template <class F>
double fd_derivative(F&& f, double x, const SolverSettings& settings = {}) {
  const double h = settings.fd_step;
  const double up = detail::checked(f(x + h), "function");
  const double down = detail::checked(f(x - h), "function");
  if (!std::isfinite(up) || !std::isfinite(down))
    throw EvaluationError("fd_derivative: non-finite evaluation");
  return (up - down) / (2.0 * h);
}

/// Second central difference with step h.
template <class F>
double fd_second_derivative(F&& f, double x, double h) {
  const double up = f(x + h);
  const double mid = f(x);
  const double down = f(x - h);
  if (!std::isfinite(up) || !std::isfinite(mid) || !std::isfinite(down))
    throw EvaluationError("fd_second_derivative: non-finite evaluation");
  return (up - 2.0 * mid + down) / (h * h);
}

}  // namespace overload

#endif
