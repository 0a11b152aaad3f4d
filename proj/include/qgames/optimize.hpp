#pragma once

// Small derivative-free maximizers: golden-section search on a bracket, a
// grid scan with local refinement, and cyclic coordinate ascent for periodic
// parameters.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

namespace qgames {

struct ScalarMaximum {
  double argmax = 0.0;
  double value = 0.0;
};

/// Golden-section search for a maximum of a unimodal `f` on [lo, hi]; stops
/// once the bracket is narrower than `tol`.
template <class F>
ScalarMaximum golden_section_maximize(F&& f, double lo, double hi, double tol = 1e-10,
                                      int max_iterations = 200) {
  constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iterations && (hi - lo) > tol; ++it) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
    }
  }
  // Keep the best point seen at the final bracket.
  ScalarMaximum best{0.5 * (lo + hi), f(0.5 * (lo + hi))};
  if (fc > best.value) best = {c, fc};
  if (fd > best.value) best = {d, fd};
  return best;
}

/// Maximizes a 2*pi-periodic function of one variable: coarse sampling over a
/// full period around `start`, then golden-section refinement around the best sample.
template <class F>
ScalarMaximum maximize_periodic(F&& f, double start, int samples = 12, double tol = 1e-10) {
  const double step = 2.0 * std::numbers::pi / samples;
  ScalarMaximum best{start, f(start)};
  for (int k = 1; k < samples; ++k) {
    const double x = start + k * step;
    const double v = f(x);
    if (v > best.value) best = {x, v};
  }
  const ScalarMaximum refined = golden_section_maximize(f, best.argmax - step, best.argmax + step, tol);
  return refined.value > best.value ? refined : best;
}

struct CoordinateAscentResult {
  std::vector<double> x;
  double value = 0.0;
  int sweeps = 0;
};

/// Cyclic coordinate ascent over periodic coordinates. Stops when a full sweep
/// improves the objective by less than `tol`.
template <class F>
CoordinateAscentResult coordinate_ascent(F&& f, std::vector<double> x, double tol = 1e-8, int max_sweeps = 200) {
  CoordinateAscentResult r{x, f(x), 0};
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double before = r.value;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
      auto slice = [&](double t) {
        std::vector<double> y = r.x;
        y[i] = t;
        return f(y);
      };
      const ScalarMaximum m = maximize_periodic(slice, r.x[i]);
      if (m.value > r.value) {
        r.x[i] = m.argmax;
        r.value = m.value;
      }
    }
    r.sweeps = sweep + 1;
    if (r.value - before < tol) break;
  }
  return r;
}

/// Maximizes `f` on [lo, hi] by scanning `grid_points` equally spaced points
/// and refining every grid-local maximum with golden-section search. With
/// `periodic` the function is taken to have period hi - lo and the result is
/// reported in [lo, hi). Among refined maxima within `tie_tol` (relative) of
/// the best, the smallest argument wins.
template <class F>
ScalarMaximum grid_refine_maximize(F&& f, double lo, double hi, std::size_t grid_points, bool periodic,
                                   double tol = 1e-10, double tie_tol = 1e-10) {
  const std::size_t n = periodic ? grid_points : grid_points + 1;
  const double h = (hi - lo) / double(grid_points);
  std::vector<double> v(n);
  double vmax = -INFINITY, vmin = INFINITY;
  for (std::size_t k = 0; k < n; ++k) {
    v[k] = f(lo + h * double(k));
    vmax = std::max(vmax, v[k]);
    vmin = std::min(vmin, v[k]);
  }
  if (vmax - vmin <= 1e-14 * (1.0 + std::abs(vmax))) return {lo, v[0]};

  std::vector<ScalarMaximum> candidates;
  for (std::size_t k = 0; k < n; ++k) {
    const bool has_left = periodic || k > 0;
    const bool has_right = periodic || k + 1 < n;
    const double left = has_left ? v[(k + n - 1) % n] : -INFINITY;
    const double right = has_right ? v[(k + 1) % n] : -INFINITY;
    if (v[k] < left || v[k] < right) continue;
    const double x = lo + h * double(k);
    double a = x - h, b = x + h;
    if (!periodic) {
      a = std::max(a, lo);
      b = std::min(b, hi);
    }
    ScalarMaximum m = golden_section_maximize(f, a, b, tol);
    if (v[k] > m.value) m = {x, v[k]};
    if (periodic) {
      const double period = hi - lo;
      m.argmax = lo + std::fmod(std::fmod(m.argmax - lo, period) + period, period);
      // A maximum refined just below lo wraps to just below hi.
      if (m.argmax >= hi || hi - m.argmax < 1e-8 * period) m.argmax = lo;
    }
    candidates.push_back(m);
  }
  ScalarMaximum best = candidates.front();
  for (const ScalarMaximum& c : candidates) best = c.value > best.value ? c : best;
  const double cutoff = best.value - tie_tol * (1.0 + std::abs(best.value));
  for (const ScalarMaximum& c : candidates) {
    if (c.value >= cutoff && c.argmax < best.argmax) best = c;
  }
  return best;
}

/// Real trigonometric polynomial c0 + sum_k (a_k cos(k w x) + b_k sin(k w x)),
/// w = 2 pi / period.
struct TrigPolynomial {
  double omega = 1.0;
  double c0 = 0.0;
  std::vector<double> a;
  std::vector<double> b;

  double derivative(double x, int order) const {
    double out = order == 0 ? c0 : 0.0;
    for (std::size_t k = 1; k <= a.size(); ++k) {
      const double w = omega * double(k);
      const double phase = w * x + 0.5 * std::numbers::pi * order;
      out += std::pow(w, order) * (a[k - 1] * std::cos(phase) + b[k - 1] * std::sin(phase));
    }
    return out;
  }
};

/// Coefficients of a periodic `f` known to have degree below samples / 2, by
/// discrete Fourier transform of equally spaced samples.
template <class F>
TrigPolynomial fit_trig_polynomial(F&& f, double period, std::size_t samples) {
  TrigPolynomial t;
  t.omega = 2.0 * std::numbers::pi / period;
  const std::size_t degree = (samples - 1) / 2;
  t.a.assign(degree, 0.0);
  t.b.assign(degree, 0.0);
  for (std::size_t j = 0; j < samples; ++j) {
    const double x = period * double(j) / double(samples);
    const double v = f(x);
    t.c0 += v / double(samples);
    for (std::size_t k = 1; k <= degree; ++k) {
      t.a[k - 1] += 2.0 * v * std::cos(t.omega * double(k) * x) / double(samples);
      t.b[k - 1] += 2.0 * v * std::sin(t.omega * double(k) * x) / double(samples);
    }
  }
  return t;
}

/// Newton iteration on t'(x) = 0 starting near a maximum; keeps `x` when a
/// step would leave a neighbourhood of radius `radius`.
inline double polish_stationary_point(const TrigPolynomial& t, double x, double radius, int iterations = 20) {
  const double start = x;
  for (int it = 0; it < iterations; ++it) {
    const double d2 = t.derivative(x, 2);
    if (!(d2 < 0.0)) return x;
    const double next = x - t.derivative(x, 1) / d2;
    if (std::abs(next - start) > radius) return x;
    if (next == x) break;
    x = next;
  }
  return x;
}

}  // namespace qgames
