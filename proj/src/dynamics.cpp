#include "ffmono/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ffmono {

namespace {
constexpr double kExpGuard = 700.0;  // e^700 is the last safe magnitude
}

PerturbedSystem::PerturbedSystem(FlatPolynomial R)
    : pert_(std::move(R)),
      dr1_(pert_.poly().dz1()),
      dr2_(pert_.poly().dz2()) {}

double PerturbedSystem::h1(const PhasePoint& p) const {
  double v = q1(p);
  if (!pert_.is_zero()) v += pert_.poly().eval(to_complex(p)).real();
  return v;
}

double PerturbedSystem::h2(const PhasePoint& p) const {
  double v = q2(p);
  if (!pert_.is_zero()) v += pert_.poly().eval(to_complex(p)).imag();
  return v;
}

EnergyMomentum PerturbedSystem::integral_map(const PhasePoint& p) const {
  if (pert_.is_zero()) return {q1(p), q2(p)};
  const Complex r = pert_.poly().eval(to_complex(p));
  return {q1(p) + r.real(), q2(p) + r.imag()};
}

Complex PerturbedSystem::hamiltonian(const ComplexPair& z) const {
  Complex v = z.z1 * z.z2;
  if (!pert_.is_zero()) v += pert_.poly().eval(z);
  return v;
}

TangentVector PerturbedSystem::vector_field(Which which,
                                            const PhasePoint& p) const {
  // Gradients of Re R and Im R through the chart: with R_j = dR/dz_j,
  //   d(Re R) = (Re R_1, Im R_1, Re R_2, -Im R_2),
  //   d(Im R) = (Im R_1, -Re R_1, Im R_2, Re R_2).
  Complex r1{0.0, 0.0}, r2{0.0, 0.0};
  if (!pert_.is_zero()) {
    const ComplexPair z = to_complex(p);
    r1 = dr1_.eval(z);
    r2 = dr2_.eval(z);
  }
  if (which == Which::h1) {
    return {p.x + r2.real(), p.y - r2.imag(), -(p.px + r1.real()),
            -(p.py + r1.imag())};
  }
  return {-p.y + r2.imag(), p.x + r2.real(), -(p.py + r1.imag()),
          p.px + r1.real()};
}

ComplexPair PerturbedSystem::chart_field(Which which,
                                         const ComplexPair& z) const {
  Complex r1{0.0, 0.0}, r2{0.0, 0.0};
  if (!pert_.is_zero()) {
    r1 = dr1_.eval(z);
    r2 = dr2_.eval(z);
  }
  const Complex v1 = z.z1 + r2;
  const Complex v2 = -(z.z2 + r1);
  if (which == Which::h1) return {v1, v2};
  const Complex mi{0.0, -1.0};  // h2-flow rotates: (-i v1, -i v2)
  return {mi * v1, mi * v2};
}

PhasePoint standard_flow_q1(double t, const PhasePoint& p) {
  if (!std::isfinite(t) || std::abs(t) > kExpGuard)
    throw std::range_error("flow time " + std::to_string(t) +
                           " exceeds the exp overflow guard (|t| <= 700)");
  const double e = std::exp(t), ei = std::exp(-t);
  return {e * p.x, e * p.y, ei * p.px, ei * p.py};
}

PhasePoint standard_flow_q2(double s, const PhasePoint& p) {
  if (!std::isfinite(s))
    throw std::range_error("rotation angle must be finite");
  const double c = std::cos(s), sn = std::sin(s);
  return {c * p.x - sn * p.y, sn * p.x + c * p.y, c * p.px - sn * p.py,
          sn * p.px + c * p.py};
}

ComplexPair complex_flow(Complex tau, const ComplexPair& z) {
  if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag()) ||
      std::abs(tau.real()) > kExpGuard)
    throw std::range_error("complex flow time exceeds the overflow guard");
  const Complex e = std::exp(tau);
  return {e * z.z1, z.z2 / e};
}

Trajectory integrate(const PerturbedSystem& sys, Which which,
                     const PhasePoint& start, double t0, double t1,
                     const IntegratorConfig& cfg) {
  if (!(t0 < t1))
    throw std::invalid_argument("integration span must satisfy t0 < t1");
  if (!is_finite(start))
    throw std::invalid_argument("integration start point must be finite");
  Trajectory out;
  out.field = which;
  out.times.push_back(t0);
  out.points.push_back(start);
  detail::HamiltonianRHS rhs{&sys, which, 1.0};
  detail::rk45(rhs, t0, t1, detail::to_state(start), cfg,
               [&](double, const detail::State4&, double t,
                   const detail::State4& y) {
                 out.times.push_back(t);
                 out.points.push_back(detail::from_state(y));
                 return true;
               });
  return out;
}

}  // namespace ffmono
