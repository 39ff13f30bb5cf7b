#include "ffmono/action.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ffmono {

namespace {

// Directional derivative of Phi at p along v by central differences, with
// the step scaled relative to the base point.
TangentVector pushforward_tangent(const NormalizingMap& nm,
                                  const PhasePoint& p,
                                  const TangentVector& v) {
  const double vmag =
      std::sqrt(v.dx * v.dx + v.dy * v.dy + v.dpx * v.dpx + v.dpy * v.dpy);
  if (vmag == 0.0) return {0.0, 0.0, 0.0, 0.0};
  const double h = 1e-5 * std::max(1.0, norm(p)) / vmag;
  const PhasePoint plus =
      nm.forward(PhasePoint{p.x + h * v.dx, p.y + h * v.dy, p.px + h * v.dpx,
                            p.py + h * v.dpy});
  const PhasePoint minus =
      nm.forward(PhasePoint{p.x - h * v.dx, p.y - h * v.dy, p.px - h * v.dpx,
                            p.py - h * v.dpy});
  const double inv2h = 1.0 / (2.0 * h);
  return {(plus.x - minus.x) * inv2h, (plus.y - minus.y) * inv2h,
          (plus.px - minus.px) * inv2h, (plus.py - minus.py) * inv2h};
}

PhasePoint sphere_point(std::mt19937_64& rng, double rho) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  double g[4], n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& gi : g) {
      gi = gauss(rng);
      n2 += gi * gi;
    }
  } while (n2 < 1e-12);
  const double s = rho / std::sqrt(n2);
  return {g[0] * s, g[1] * s, g[2] * s, g[3] * s};
}

const PerturbedSystem& standard_system() {
  static const PerturbedSystem sys;
  return sys;
}

}  // namespace

double loop_action_standard(const PhasePoint& z, int nodes) {
  if (nodes < 8) throw std::invalid_argument("quadrature nodes must be >= 8");
  // Periodic trapezoid over one q2-orbit; the integrand reduces to q2.
  double sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double s = 2.0 * M_PI * j / nodes;
    const PhasePoint g = standard_flow_q2(s, z);
    sum += alpha_eval(g, standard_system().vector_field(Which::h2, g));
  }
  return sum / nodes;
}

double loop_action(const PerturbedSystem& sys, const NormalizingMap& nm,
                   const PhasePoint& w, const IntegratorConfig& cfg,
                   int nodes) {
  (void)sys;  // the cycle is determined by nm and the circle action alone
  if (nodes < 8) throw std::invalid_argument("quadrature nodes must be >= 8");
  cfg.validate();
  if (nm.is_identity()) return loop_action_standard(w, nodes);
  const PhasePoint z = nm.inverse(w);
  double sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double s = 2.0 * M_PI * j / nodes;
    const PhasePoint g = standard_flow_q2(s, z);
    const TangentVector v = standard_system().vector_field(Which::h2, g);
    const TangentVector dg = pushforward_tangent(nm, g, v);
    sum += alpha_eval(nm.forward(g), dg);
  }
  return sum / nodes;
}

double disk_action(const PerturbedSystem& sys, const NormalizingMap& nm,
                   const PhasePoint& z, int grid) {
  (void)sys;
  if (grid < 1) throw std::invalid_argument("disk grid must be >= 1");
  const ComplexPair zc = to_complex(z);
  if (std::abs(zc.z1) == 0.0 && std::abs(zc.z2) == 0.0) return 0.0;

  // Cone disk spanning the q2-orbit of the normalized point:
  // m(rho, phi) = (rho e^{i phi} z1, rho e^{-i phi} z2), mapped forward
  // through Phi; the pulled-back symplectic form is integrated over the
  // polar grid, the phi direction being periodic (midpoint rule) and each
  // radial cell carrying two Gauss nodes.
  auto g = [&](double rho, double phi) -> PhasePoint {
    const Complex e = std::polar(1.0, phi);
    const ComplexPair m{rho * e * zc.z1, rho * zc.z2 / e};
    return nm.is_identity() ? from_complex(m)
                            : from_complex(nm.forward(m));
  };
  const double hr = 1e-4, hp = 1e-4;
  auto form_value = [&](double rho, double phi) {
    const PhasePoint grp = g(rho + hr, phi), grm = g(rho - hr, phi);
    const PhasePoint gpp = g(rho, phi + hp), gpm = g(rho, phi - hp);
    const TangentVector dr{(grp.x - grm.x) / (2 * hr), (grp.y - grm.y) / (2 * hr),
                           (grp.px - grm.px) / (2 * hr),
                           (grp.py - grm.py) / (2 * hr)};
    const TangentVector dp{(gpp.x - gpm.x) / (2 * hp), (gpp.y - gpm.y) / (2 * hp),
                           (gpp.px - gpm.px) / (2 * hp),
                           (gpp.py - gpm.py) / (2 * hp)};
    return omega_eval(PhasePoint{}, dr, dp);  // pairing is point-independent
  };

  const int nphi = 4 * grid;
  const double dphi = 2.0 * M_PI / nphi;
  const double drho = 1.0 / grid;
  const double gauss = 0.5 / std::sqrt(3.0);  // 2-node Gauss offsets
  double sum = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double mid = (i + 0.5) * drho;
    for (const double rho : {mid - gauss * drho, mid + gauss * drho}) {
      double ring = 0.0;
      for (int j = 0; j < nphi; ++j) ring += form_value(rho, (j + 0.5) * dphi);
      sum += 0.5 * drho * ring * dphi;  // Gauss weights are 1/2 each
    }
  }
  return sum / (2.0 * M_PI);
}

std::vector<double> flatness_profile(const PerturbedSystem& sys,
                                     const NormalizingMap& nm,
                                     const std::vector<double>& radii,
                                     int samples, std::uint64_t seed) {
  if (radii.empty()) throw std::invalid_argument("radii list must be non-empty");
  for (double rho : radii)
    if (!(rho > 0.0))
      throw std::invalid_argument("profile radii must be positive");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");

  std::vector<double> profile;
  profile.reserve(radii.size());
  for (double rho : radii) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    double sup = 0.0;
    for (int k = 0; k < samples; ++k) {
      const PhasePoint w = sphere_point(rng, rho);
      const double dev =
          std::abs(loop_action(sys, nm, w, nm.config()) - sys.h2(w));
      sup = std::max(sup, dev);
    }
    profile.push_back(sup / (rho * rho));
  }
  return profile;
}

}  // namespace ffmono
