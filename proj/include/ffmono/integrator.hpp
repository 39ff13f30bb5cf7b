#pragma once

// Embedded Dormand-Prince 5(4) step with PI step-size control.  All flows in
// the library (Hamiltonian, Moser path, oscillator) share this driver; the
// state is a fixed 4-vector.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ffmono/errors.hpp"

namespace ffmono {

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double initial_step = 1e-3;
  std::int64_t max_steps = 1000000;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
      throw std::invalid_argument("integrator tolerances must be positive");
    if (!(initial_step > 0.0))
      throw std::invalid_argument("integrator initial_step must be positive");
    if (max_steps < 1)
      throw std::invalid_argument("integrator max_steps must be >= 1");
  }
};

namespace detail {

using State4 = std::array<double, 4>;

inline bool finite(const State4& y) {
  return std::isfinite(y[0]) && std::isfinite(y[1]) && std::isfinite(y[2]) &&
         std::isfinite(y[3]);
}

// Integrates y' = f(t, y) from t0 to t1 (either direction).  on_step is
// called after every accepted step as on_step(t_prev, y_prev, t, y) and may
// return false to stop early.  Throws NumericalError on blow-up, step-count
// exhaustion, or step underflow.
template <class RHS, class OnStep>
void rk45(RHS&& f, double t0, double t1, State4 y, const IntegratorConfig& cfg,
          OnStep&& on_step) {
  cfg.validate();
  if (t0 == t1) return;
  const double dir = (t1 > t0) ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);

  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // y5 - y4 weights (applied to k1..k7) for the embedded error estimate.
  static constexpr double d1 = 71.0 / 57600, d3 = -71.0 / 16695,
                          d4 = 71.0 / 1920, d5 = -17253.0 / 339200,
                          d6 = 22.0 / 525, d7 = -1.0 / 40;
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                          c5 = 8.0 / 9;

  double t = t0;
  double h = std::min(cfg.initial_step, span) * dir;
  State4 k1 = f(t, y);  // FSAL: reused across accepted steps
  double err_prev = 1.0;
  std::int64_t steps = 0;

  auto stage = [](const State4& y0, double h, const double* w,
                  const State4* ks, int n) {
    State4 out = y0;
    for (int s = 0; s < n; ++s)
      for (int i = 0; i < 4; ++i) out[i] += h * w[s] * ks[s][i];
    return out;
  };

  while (true) {
    if (steps++ >= cfg.max_steps)
      throw NumericalError(NumericalError::Kind::step_limit,
                           "integrator exhausted max_steps at t = " +
                               std::to_string(t));
    bool last = false;
    if ((t + h - t1) * dir >= 0.0) {
      h = t1 - t;
      last = true;
    }
    if (t + h == t)
      throw NumericalError(NumericalError::Kind::step_underflow,
                           "step size underflow at t = " + std::to_string(t));

    State4 ks[7];
    ks[0] = k1;
    {
      const double w2[] = {a21};
      ks[1] = f(t + c2 * h, stage(y, h, w2, ks, 1));
      const double w3[] = {a31, a32};
      ks[2] = f(t + c3 * h, stage(y, h, w3, ks, 2));
      const double w4[] = {a41, a42, a43};
      ks[3] = f(t + c4 * h, stage(y, h, w4, ks, 3));
      const double w5[] = {a51, a52, a53, a54};
      ks[4] = f(t + c5 * h, stage(y, h, w5, ks, 4));
      const double w6[] = {a61, a62, a63, a64, a65};
      ks[5] = f(t + h, stage(y, h, w6, ks, 5));
    }
    State4 y_new;
    for (int i = 0; i < 4; ++i)
      y_new[i] = y[i] + h * (b1 * ks[0][i] + b3 * ks[2][i] + b4 * ks[3][i] +
                             b5 * ks[4][i] + b6 * ks[5][i]);
    ks[6] = f(t + h, y_new);

    if (!finite(y_new))
      throw NumericalError(NumericalError::Kind::blow_up,
                           "non-finite state during integration at t = " +
                               std::to_string(t));

    double err = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double e = h * (d1 * ks[0][i] + d3 * ks[2][i] + d4 * ks[3][i] +
                            d5 * ks[4][i] + d6 * ks[5][i] + d7 * ks[6][i]);
      const double sc =
          cfg.abs_tol +
          cfg.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      err += (e / sc) * (e / sc);
    }
    err = std::sqrt(err / 4.0);

    if (err <= 1.0) {
      const double t_prev = t;
      const State4 y_prev = y;
      t += h;
      y = y_new;
      k1 = ks[6];
      if (!on_step(t_prev, y_prev, t, y)) return;
      if (last) return;
      // PI controller (order 5): err^-0.14 with err_prev^0.08 damping.
      double fac = 0.9 * std::pow(std::max(err, 1e-16), -0.7 / 5.0) *
                   std::pow(std::max(err_prev, 1e-16), 0.4 / 5.0);
      fac = std::min(10.0, std::max(0.2, fac));
      h *= fac;
      err_prev = std::max(err, 1e-16);
    } else {
      h *= std::max(0.2, 0.9 * std::pow(err, -1.0 / 5.0));
    }
  }
}

// Endpoint-only convenience wrapper.
template <class RHS>
State4 rk45_endpoint(RHS&& f, double t0, double t1, const State4& y0,
                     const IntegratorConfig& cfg) {
  State4 out = y0;
  rk45(f, t0, t1, y0, cfg,
       [&](double, const State4&, double, const State4& y) {
         out = y;
         return true;
       });
  return out;
}

}  // namespace detail
}  // namespace ffmono
