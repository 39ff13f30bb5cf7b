#pragma once

// Scattering data on the fibers near the focus-focus point: entry/exit cross
// sections, complex transit time, connection 1-form, per-fiber scattering
// phase, and the monodromy certificate (winding -1 of the phase over a loop
// of regular values).

#include <complex>
#include <cstdint>
#include <vector>

#include "ffmono/dynamics.hpp"
#include "ffmono/normal_form.hpp"

namespace ffmono {

// Entry section point on {|z2| = eps} of the fiber z1 z2 = c.
ComplexPair xi_section(Complex c, double s, double eps);
// Exit section point on {|z1| = eps} of the same fiber.
ComplexPair eta_section(Complex c, double s, double eps);

// Complex time tau with complex_flow(tau, xi_s(c)) = eta_s(c):
// tau = -(ln|c/eps^2| + i Arg c).  Requires c != 0.
Complex transit_time_standard(Complex c, double eps);

// Rotation number of the transit: mu(c) = Im tau = -Arg(c), principal branch
// (-pi, pi], so mu takes values in [-pi, pi).
double mu(Complex c);

// Connection 1-form theta(v) = -Im(v1 / z1) evaluated at w on the chart
// tangent v; normalized so that theta(X_{q2}) = 1.  Rejects |z1| < 1e-12.
double connection_eval(const ComplexPair& w, const ComplexPair& v);

// Scattering phase of the standard fiber z1 z2 = c: -Arg(c).
double scattering_phase_standard(Complex c);

// Same value obtained numerically: the connection is integrated along the
// q1-flow trajectory through the section point (c, 1) truncated to
// [-T, T], seeded with the principal entry phase of z1.  Independent of T
// because the integrand vanishes along the closed-form flow.
double scattering_phase_standard_numerical(Complex c, double T,
                                           int nodes = 4096);

struct ScatteringRecord {
  EnergyMomentum c;
  Complex transit_tau;     // elapsed real time + i * phase
  double phase = 0.0;      // -(tracked exit angle of z1 in the normal chart)
  ComplexPair entry_point; // on the stable section {|z2| = eps}
  ComplexPair exit_point;  // on the unstable section {|z1| = eps}
};

// Phase of the perturbed fiber through c: the X_{h1} trajectory from
// Phi(xi_0(c)) is followed until its Phi^{-1}-image crosses {|z1| = eps}
// (bisection to 1e-10 in t), accumulating the pulled-back connection.
ScatteringRecord scattering_phase(const PerturbedSystem& sys,
                                  const NormalizingMap& nm,
                                  const EnergyMomentum& c, double eps,
                                  const IntegratorConfig& cfg);

struct MonodromyResult {
  double radius = 0.0;
  int samples = 0;
  std::vector<double> phases_raw;  // principal-valued, length samples + 1
  std::vector<double> phases;      // unwrapped
  int winding = 0;
  double max_unwrap_jump = 0.0;
};

// Sweeps c = r e^{i phi_k}, phi_k = 2 pi k / n, k = 0..n (clockwise reverses
// the loop), unwraps the phases and certifies the winding.  Requires n >= 16
// and 1e-3 <= r <= eps^2 e^2.
MonodromyResult monodromy_scan(const PerturbedSystem& sys,
                               const NormalizingMap& nm, double r, int n,
                               double eps, const IntegratorConfig& cfg,
                               bool clockwise = false);

// Unwraps a phase sequence by adding multiples of 2 pi so consecutive jumps
// are minimal; max_jump receives the largest corrected jump.  Throws
// NumericalError(unwrap_ambiguity) when a corrected jump reaches pi/2.
std::vector<double> unwrap_phases(const std::vector<double>& raw,
                                  double* max_jump = nullptr);

// round((last - first) / 2 pi) of an unwrapped sequence.
int winding_from_phases(const std::vector<double>& unwrapped);

// Deflection angle of the planar hyperbolic oscillator
// u = xi1 eta1 + xi2 eta2 on Omega = dxi1^dxi2 - deta1^deta2, between the
// outgoing and (reversed) incoming asymptote directions estimated from the
// trajectory over [-T, T]; converges to atan2(h, l).
double oscillator_deflection(double h, double l, double T,
                             const IntegratorConfig& cfg);

// Flows Phi(xi_s(0)) (a stable-manifold point of the singular fiber) forward
// for time T and returns the distance of the endpoint from the equilibrium.
double singular_fiber_probe(const PerturbedSystem& sys,
                            const NormalizingMap& nm, double s, double eps,
                            double T, const IntegratorConfig& cfg);

}  // namespace ffmono
