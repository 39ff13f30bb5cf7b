#pragma once

// Phase space (R^4, omega = dx ^ dp_x + dy ^ dp_y) with the complex chart
// (z1, z2) = (x - i y, p_x + i p_y), under which q1 + i q2 = z1 z2 for the
// quadratic integrals q1 = x p_x + y p_y, q2 = x p_y - y p_x.

#include <cmath>
#include <complex>

namespace ffmono {

using Complex = std::complex<double>;

struct PhasePoint {
  double x = 0.0;
  double y = 0.0;
  double px = 0.0;
  double py = 0.0;
};

struct TangentVector {
  double dx = 0.0;
  double dy = 0.0;
  double dpx = 0.0;
  double dpy = 0.0;
};

// Point (or tangent) expressed in the complex chart.
struct ComplexPair {
  Complex z1{0.0, 0.0};
  Complex z2{0.0, 0.0};
};

// Value of the integral map (h1, h2); c1 + i c2 is the regular value used by
// the scattering sweeps.
struct EnergyMomentum {
  double c1 = 0.0;
  double c2 = 0.0;
  Complex value() const { return {c1, c2}; }
};

inline ComplexPair to_complex(const PhasePoint& p) {
  return {Complex{p.x, -p.y}, Complex{p.px, p.py}};
}

inline PhasePoint from_complex(const ComplexPair& z) {
  return {z.z1.real(), -z.z1.imag(), z.z2.real(), z.z2.imag()};
}

// The same chart on tangent vectors: (v1, v2) = (dx - i dy, dpx + i dpy).
inline ComplexPair tangent_to_chart(const TangentVector& v) {
  return {Complex{v.dx, -v.dy}, Complex{v.dpx, v.dpy}};
}

inline TangentVector tangent_from_chart(const ComplexPair& v) {
  return {v.z1.real(), -v.z1.imag(), v.z2.real(), v.z2.imag()};
}

inline double q1(const PhasePoint& p) { return p.x * p.px + p.y * p.py; }
inline double q2(const PhasePoint& p) { return p.x * p.py - p.y * p.px; }

// Tautological 1-form alpha = p_x dx + p_y dy (omega = -d alpha).
inline double alpha_eval(const PhasePoint& p, const TangentVector& v) {
  return p.px * v.dx + p.py * v.dy;
}

// Symplectic pairing omega(v, w); the base point is kept in the signature
// because the callers treat omega as a form field.
inline double omega_eval(const PhasePoint& /*p*/, const TangentVector& v,
                         const TangentVector& w) {
  return v.dx * w.dpx - v.dpx * w.dx + v.dy * w.dpy - v.dpy * w.dy;
}

inline bool is_finite(const PhasePoint& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.px) &&
         std::isfinite(p.py);
}

inline double norm(const PhasePoint& p) {
  return std::sqrt(p.x * p.x + p.y * p.y + p.px * p.px + p.py * p.py);
}

}  // namespace ffmono
