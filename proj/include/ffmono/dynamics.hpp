#pragma once

// Flows of the focus-focus model and its flat perturbations.  The standard
// flows are closed-form; perturbed flows go through the shared RK5(4) driver.

#include <complex>
#include <vector>

#include "ffmono/integrator.hpp"
#include "ffmono/phase_space.hpp"
#include "ffmono/polynomial.hpp"

namespace ffmono {

enum class Which { h1, h2 };

// Hamiltonian pair h1 = q1 + Re R, h2 = q2 + Im R for a flat perturbation R;
// in the chart the Hamiltonian is z1 z2 + R(z1, z2).
class PerturbedSystem {
 public:
  PerturbedSystem() = default;  // standard system (R = 0)
  explicit PerturbedSystem(FlatPolynomial R);

  static PerturbedSystem standard() { return PerturbedSystem{}; }

  double h1(const PhasePoint& p) const;
  double h2(const PhasePoint& p) const;
  EnergyMomentum integral_map(const PhasePoint& p) const;
  Complex hamiltonian(const ComplexPair& z) const;

  // X_h with the convention X_h -| omega = dh, i.e.
  // X = (dh/dpx, dh/dpy, -dh/dx, -dh/dy).
  TangentVector vector_field(Which which, const PhasePoint& p) const;

  // Chart velocity of the same field: (z1 + R_2, -(z2 + R_1)) for h1 and
  // (-i(z1 + R_2), i(z2 + R_1)) for h2, where R_j = dR/dz_j.
  ComplexPair chart_field(Which which, const ComplexPair& z) const;

  bool is_standard() const { return pert_.is_zero(); }
  const FlatPolynomial& perturbation() const { return pert_; }

 private:
  FlatPolynomial pert_;
  Poly2 dr1_, dr2_;
};

// Closed-form flow of q1: (e^t x, e^t y, e^-t px, e^-t py).
// Throws std::range_error when |t| > 700 (e^t overflows).
PhasePoint standard_flow_q1(double t, const PhasePoint& p);

// Closed-form flow of q2: simultaneous rotation by s in the (x, y) and
// (px, py) planes; in the chart (e^{-is} z1, e^{is} z2).
PhasePoint standard_flow_q2(double s, const PhasePoint& p);

// Complex-time flow of the standard Hamiltonian: (e^tau z1, e^-tau z2).
// Throws std::range_error when |Re tau| > 700.
ComplexPair complex_flow(Complex tau, const ComplexPair& z);

struct Trajectory {
  Which field = Which::h1;
  std::vector<double> times;        // strictly increasing, includes endpoints
  std::vector<PhasePoint> points;   // same length as times
};

// Integrates X_{h1} or X_{h2} over [t0, t1] (t0 < t1 required) recording the
// accepted steps.
Trajectory integrate(const PerturbedSystem& sys, Which which,
                     const PhasePoint& start, double t0, double t1,
                     const IntegratorConfig& cfg);

namespace detail {

inline State4 to_state(const PhasePoint& p) { return {p.x, p.y, p.px, p.py}; }
inline PhasePoint from_state(const State4& y) { return {y[0], y[1], y[2], y[3]}; }

// RHS closure for the Hamiltonian fields, shared with the scattering module.
struct HamiltonianRHS {
  const PerturbedSystem* sys;
  Which which;
  double sign;  // +1 forward field, -1 reversed field
  State4 operator()(double /*t*/, const State4& y) const {
    const TangentVector v =
        sys->vector_field(which, from_state(y));
    return {sign * v.dx, sign * v.dy, sign * v.dpx, sign * v.dpy};
  }
};

}  // namespace detail
}  // namespace ffmono
