#pragma once

// Action integrals over the vanishing cycles: loop form (1/2pi) \oint alpha
// along the normalized q2-orbit, Stokes (disk) form as a 2D quadrature of the
// pulled-back symplectic form, and the flatness profile of action - h2.

#include <cstdint>
#include <vector>

#include "ffmono/dynamics.hpp"
#include "ffmono/normal_form.hpp"

namespace ffmono {

// (1/2pi) \oint alpha along the q2-orbit through z; equals q2(z) identically
// for the standard system.  Composite trapezoid with `nodes` points.
double loop_action_standard(const PhasePoint& z, int nodes = 256);

// Action of the fiber through w for the perturbed system: the q2-orbit of
// the normalized image Phi^{-1}(w) is pushed forward through Phi into a
// cycle on the fiber, and alpha is integrated along it.  Tangents are mapped
// through the Jacobian of Phi by central differences (relative step 1e-5).
double loop_action(const PerturbedSystem& sys, const NormalizingMap& nm,
                   const PhasePoint& w, const IntegratorConfig& cfg,
                   int nodes = 256);

// Stokes form: quadrature of the pulled-back symplectic form over the
// Phi-image of the cone disk spanning the q2-orbit through the normalized
// point z (polar grid, `grid` radial cells by 4*grid angular cells).
// Agrees with loop_action(w) at z = Phi^{-1}(w).
double disk_action(const PerturbedSystem& sys, const NormalizingMap& nm,
                   const PhasePoint& z, int grid);

// For each radius rho: sup over `samples` seeded points with |w| = rho of
// |loop_action(w) - h2(w)| / rho^2.  Decays with rho by flatness of the
// perturbation.
std::vector<double> flatness_profile(const PerturbedSystem& sys,
                                     const NormalizingMap& nm,
                                     const std::vector<double>& radii,
                                     int samples, std::uint64_t seed = 0);

}  // namespace ffmono
