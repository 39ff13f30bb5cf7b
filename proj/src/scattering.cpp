#include "ffmono/scattering.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ffmono/errors.hpp"

namespace ffmono {
namespace {

using detail::State4;

// Shared pieces of the event-tracking transit solver.
struct TransitContext {
  detail::HamiltonianRHS rhs;
  const NormalizingMap* nm = nullptr;
  const IntegratorConfig* cfg = nullptr;

  ComplexPair chart_image(const State4& y) const {
    return nm->inverse(to_complex(detail::from_state(y)));
  }
  State4 flow(const State4& y, double from, double to) const {
    if (from == to) return y;
    return detail::rk45_endpoint(rhs, from, to, y, *cfg);
  }
};

// Continuous increment of arg z1 (in the normal chart) across the pseudo-time
// segment [ta, tb]; arg_a, arg_b are the principal values at the endpoints.
// Splits the segment until each piece turns by less than pi/2, so the branch
// of the angle is unambiguous.
double angle_increment(const TransitContext& ctx, double ta, const State4& ya,
                       double arg_a, double tb, double arg_b, int depth) {
  const double delta = std::remainder(arg_b - arg_a, 2.0 * M_PI);
  if (std::abs(delta) < 0.5 * M_PI) return delta;
  if (depth >= 48)
    throw NumericalError(
        NumericalError::Kind::unwrap_ambiguity,
        "phase tracking could not resolve the branch of arg z1 near pseudo-"
        "time " +
            std::to_string(ta));
  const double tm = 0.5 * (ta + tb);
  const State4 ym = ctx.flow(ya, ta, tm);
  const double arg_m = std::arg(ctx.chart_image(ym).z1);
  return angle_increment(ctx, ta, ya, arg_a, tm, arg_m, depth + 1) +
         angle_increment(ctx, tm, ym, arg_m, tb, arg_b, depth + 1);
}

}  // namespace

ComplexPair xi_section(Complex c, double s, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw std::invalid_argument("section radius eps must be positive");
  if (!std::isfinite(s))
    throw std::invalid_argument("section parameter s must be finite");
  const Complex z2 = std::polar(eps, -s);
  return {c / z2, z2};
}

ComplexPair eta_section(Complex c, double s, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw std::invalid_argument("section radius eps must be positive");
  if (!std::isfinite(s))
    throw std::invalid_argument("section parameter s must be finite");
  const Complex z1 = std::polar(eps, s);
  return {z1, c / z1};
}

Complex transit_time_standard(Complex c, double eps) {
  if (!(std::abs(c) > 0.0))
    throw std::invalid_argument("transit time requires a nonzero value c");
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw std::invalid_argument("section radius eps must be positive");
  return {-std::log(std::abs(c) / (eps * eps)), -std::arg(c)};
}

double mu(Complex c) {
  if (!(std::abs(c) > 0.0))
    throw std::invalid_argument("rotation number requires a nonzero value c");
  return -std::arg(c);
}

double connection_eval(const ComplexPair& w, const ComplexPair& v) {
  if (!(std::abs(w.z1) >= 1e-12))
    throw DomainError("connection form evaluated too close to its pole: "
                      "|z1| = " +
                      std::to_string(std::abs(w.z1)) + " < 1e-12");
  return -(v.z1 / w.z1).imag();
}

double scattering_phase_standard(Complex c) {
  if (!(std::abs(c) > 0.0))
    throw std::invalid_argument("scattering phase requires a nonzero value c");
  return -std::arg(c);
}

double scattering_phase_standard_numerical(Complex c, double T, int nodes) {
  if (!(std::abs(c) > 0.0))
    throw std::invalid_argument("scattering phase requires a nonzero value c");
  if (!(T > 0.0) || !(T <= 340.0))
    throw std::invalid_argument("truncation horizon T must lie in (0, 340]");
  if (nodes < 16) throw std::invalid_argument("need at least 16 nodes");
  const PerturbedSystem sys;  // standard
  const double h = 2.0 * T / nodes;
  double sum = 0.0;
  for (int k = 0; k <= nodes; ++k) {
    const double t = -T + h * k;
    const ComplexPair g{std::exp(t) * c, Complex{std::exp(-t), 0.0}};
    const ComplexPair v = sys.chart_field(Which::h1, g);
    // Evaluated inline: z1 != 0 along the whole trajectory, so the public
    // pole guard is not needed here.
    const double f = -(v.z1 / g.z1).imag();
    sum += (k == 0 || k == nodes) ? 0.5 * f : f;
  }
  return -std::arg(std::exp(-T) * c) + h * sum;
}

ScatteringRecord scattering_phase(const PerturbedSystem& sys,
                                  const NormalizingMap& nm,
                                  const EnergyMomentum& c, double eps,
                                  const IntegratorConfig& cfg) {
  cfg.validate();
  const Complex cc = c.value();
  if (!std::isfinite(cc.real()) || !std::isfinite(cc.imag()) ||
      !(std::abs(cc) > 0.0))
    throw std::invalid_argument(
        "scattering requires a finite nonzero regular value c");
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw std::invalid_argument("section radius eps must be positive");

  const ComplexPair w0 = xi_section(cc, 0.0, eps);
  if (std::abs(w0.z1) < 1e-12)
    throw DomainError("entry point lies on the connection pole: |z1| = " +
                      std::to_string(std::abs(w0.z1)) + " < 1e-12");

  const double r0 = std::abs(w0.z1);
  double ang = std::arg(w0.z1);  // continuously tracked arg z1, seeded
                                 // with the principal entry value

  // Entry already on the exit section: zero transit.
  if (std::abs(r0 - eps) <= 1e-12 * std::max(1.0, eps))
    return {c, Complex{0.0, -ang}, -ang, w0, w0};

  // |z1| grows along the forward flow, so run it backwards when the entry
  // point starts outside the exit cylinder.
  const double dir = (r0 < eps) ? 1.0 : -1.0;
  const TransitContext ctx{detail::HamiltonianRHS{&sys, Which::h1, dir}, &nm,
                           &cfg};
  const double horizon = std::abs(std::log(eps * eps / std::abs(cc))) + 10.0;

  State4 prev_y = detail::to_state(nm.forward(from_complex(w0)));
  double prev_arg = ang;
  const bool enter_below = r0 < eps;

  bool found = false;
  double exit_t = 0.0;
  ComplexPair exit_w;

  detail::rk45(
      ctx.rhs, 0.0, horizon, prev_y, cfg,
      [&](double ta, const State4&, double tb, const State4& yb) {
        const ComplexPair wb = ctx.chart_image(yb);
        const double arg_b = std::arg(wb.z1);
        const double gb = std::abs(wb.z1) - eps;
        if (enter_below ? (gb < 0.0) : (gb > 0.0)) {
          // Still on the entry side: accumulate and continue.
          ang += angle_increment(ctx, ta, prev_y, prev_arg, tb, arg_b, 0);
          prev_y = yb;
          prev_arg = arg_b;
          return true;
        }
        // The section was crossed inside [ta, tb]: bisect to 1e-10 in t,
        // keeping the angle accumulation aligned with the traversed path.
        double lo = ta;
        double hi = tb;
        State4 y_lo = prev_y;
        double arg_lo = prev_arg;
        double arg_hi = arg_b;
        State4 y_hi = yb;
        while (hi - lo > 1e-10) {
          const double tm = 0.5 * (lo + hi);
          const State4 ym = ctx.flow(y_lo, lo, tm);
          const ComplexPair wm = ctx.chart_image(ym);
          const double gm = std::abs(wm.z1) - eps;
          const double arg_m = std::arg(wm.z1);
          if (enter_below ? (gm < 0.0) : (gm > 0.0)) {
            ang += angle_increment(ctx, lo, y_lo, arg_lo, tm, arg_m, 0);
            lo = tm;
            y_lo = ym;
            arg_lo = arg_m;
          } else {
            hi = tm;
            y_hi = ym;
            arg_hi = arg_m;
          }
        }
        ang += angle_increment(ctx, lo, y_lo, arg_lo, hi, arg_hi, 0);
        exit_t = hi;
        exit_w = ctx.chart_image(y_hi);
        found = true;
        return false;
      });

  if (!found)
    throw NumericalError(
        NumericalError::Kind::no_crossing,
        "trajectory did not reach the exit section |z1| = " +
            std::to_string(eps) + " within pseudo-time " +
            std::to_string(horizon));

  const double phase = -ang;
  return {c, Complex{dir * exit_t, phase}, phase, w0, exit_w};
}

std::vector<double> unwrap_phases(const std::vector<double>& raw,
                                  double* max_jump) {
  if (raw.empty())
    throw std::invalid_argument("cannot unwrap an empty phase sequence");
  std::vector<double> out(raw.size());
  out[0] = raw[0];
  double mj = 0.0;
  for (std::size_t k = 1; k < raw.size(); ++k) {
    const double jump = std::remainder(raw[k] - out[k - 1], 2.0 * M_PI);
    if (std::abs(jump) >= 0.5 * M_PI)
      throw NumericalError(
          NumericalError::Kind::unwrap_ambiguity,
          "phase jump " + std::to_string(jump) + " at sample " +
              std::to_string(k) +
              " is too large to unwrap; increase the sample count",
          static_cast<int>(k));
    mj = std::max(mj, std::abs(jump));
    out[k] = out[k - 1] + jump;
  }
  if (max_jump != nullptr) *max_jump = mj;
  return out;
}

int winding_from_phases(const std::vector<double>& unwrapped) {
  if (unwrapped.size() < 2)
    throw std::invalid_argument("winding needs at least two phase samples");
  return static_cast<int>(
      std::lround((unwrapped.back() - unwrapped.front()) / (2.0 * M_PI)));
}

MonodromyResult monodromy_scan(const PerturbedSystem& sys,
                               const NormalizingMap& nm, double r, int n,
                               double eps, const IntegratorConfig& cfg,
                               bool clockwise) {
  cfg.validate();
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw std::invalid_argument("section radius eps must be positive");
  if (n < 16)
    throw std::invalid_argument(
        "sample count n must be >= 16; coarser loops cannot be unwrapped "
        "reliably");
  const double r_max = eps * eps * std::exp(2.0);
  if (!(r >= 1e-3) || !(r <= r_max))
    throw std::invalid_argument(
        "loop radius r = " + std::to_string(r) +
        " outside the supported annulus [1e-3, " + std::to_string(r_max) +
        "] for eps = " + std::to_string(eps));

  MonodromyResult res;
  res.radius = r;
  res.samples = n;
  res.phases_raw.reserve(static_cast<std::size_t>(n) + 1);
  const double orient = clockwise ? -1.0 : 1.0;
  for (int k = 0; k <= n; ++k) {
    const double phi = orient * 2.0 * M_PI * k / n;
    const EnergyMomentum ck{r * std::cos(phi), r * std::sin(phi)};
    try {
      res.phases_raw.push_back(scattering_phase(sys, nm, ck, eps, cfg).phase);
    } catch (NumericalError& e) {
      e.sample_index = k;
      throw;
    } catch (const DomainError& e) {
      throw NumericalError(NumericalError::Kind::domain_exit,
                           "sample " + std::to_string(k) + ": " + e.what(), k);
    }
  }
  res.phases = unwrap_phases(res.phases_raw, &res.max_unwrap_jump);
  res.winding = winding_from_phases(res.phases);
  const double span = res.phases.back() - res.phases.front();
  if (std::abs(2.0 * M_PI * res.winding - span) > 0.1)
    throw NumericalError(NumericalError::Kind::inconsistent,
                         "winding " + std::to_string(res.winding) +
                             " inconsistent with unwrapped phase span " +
                             std::to_string(span));
  return res;
}

double oscillator_deflection(double h, double l, double T,
                             const IntegratorConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(h) || !std::isfinite(l) || !(std::hypot(h, l) > 0.0))
    throw std::invalid_argument("(h, l) must be finite and nonzero");
  if (!(T >= 1.0) || !(T <= 300.0))
    throw std::invalid_argument("horizon T must lie in [1, 300]");

  // Seed on the level set (u, ell) = (h, l): with zeta = xi1 + i xi2 and
  // chi = eta2 - i eta1 the flow is zeta' = chi, chi' = zeta, so
  // zeta(t) = P e^t + Q e^{-t}; choosing Q = sqrt|w| real and P = w / Q with
  // w = (l - i h) / 2 realizes the prescribed invariants.
  const Complex w{0.5 * l, -0.5 * h};
  const double q = std::sqrt(std::abs(w));
  const Complex p = w / q;
  const Complex zeta0 = p + q;
  const Complex chi0 = p - q;
  const State4 y0{zeta0.real(), zeta0.imag(), -chi0.imag(), chi0.real()};

  // Averaged unit direction of the configuration velocity (xi1', xi2') over
  // [0.9 T, T], plus the earlier window [0.45 T, 0.5 T] used to detect a
  // still-drifting asymptote.  The reversed sweep measures d xi / d sigma,
  // whose limit is the reversed incoming direction -u_in directly.
  struct Windows {
    Complex full, half;
  };
  auto sweep = [&](double sign) -> Windows {
    auto rhs = [sign](double, const State4& y) -> State4 {
      return {sign * y[3], -sign * y[2], -sign * y[1], sign * y[0]};
    };
    Complex sum_full{0.0, 0.0}, sum_half{0.0, 0.0};
    int n_full = 0, n_half = 0;
    detail::rk45(rhs, 0.0, T, y0, cfg,
                 [&](double, const State4&, double t, const State4& y) {
                   const Complex v{sign * y[3], -sign * y[2]};
                   const double m = std::abs(v);
                   if (m > 0.0) {
                     if (t >= 0.45 * T && t <= 0.5 * T) {
                       sum_half += v / m;
                       ++n_half;
                     }
                     if (t >= 0.9 * T) {
                       sum_full += v / m;
                       ++n_full;
                     }
                   }
                   return true;
                 });
    if (n_full == 0 || n_half == 0 || !(std::abs(sum_full) > 0.0) ||
        !(std::abs(sum_half) > 0.0))
      throw NumericalError(NumericalError::Kind::inconsistent,
                           "empty averaging window along the oscillator "
                           "trajectory");
    return {sum_full / std::abs(sum_full), sum_half / std::abs(sum_half)};
  };

  const Windows out = sweep(1.0);
  const Windows in = sweep(-1.0);
  const double drift_out =
      std::abs(std::remainder(std::arg(out.full) - std::arg(out.half), 2.0 * M_PI));
  const double drift_in =
      std::abs(std::remainder(std::arg(in.full) - std::arg(in.half), 2.0 * M_PI));
  if (drift_out > 1e-6 || drift_in > 1e-6)
    throw NumericalError(
        NumericalError::Kind::not_stabilized,
        "asymptote directions still drifting at the horizon (out " +
            std::to_string(drift_out) + ", in " + std::to_string(drift_in) +
            "); increase T");

  const Complex u_out = out.full;
  const Complex r_in = in.full;  // already the reversed incoming direction
  return std::arg(r_in * std::conj(u_out));
}

double singular_fiber_probe(const PerturbedSystem& sys,
                            const NormalizingMap& nm, double s, double eps,
                            double T, const IntegratorConfig& cfg) {
  cfg.validate();
  if (!(T > 0.0) || !(T <= 600.0))
    throw std::invalid_argument("probe time T must lie in (0, 600]");
  const ComplexPair w0 = xi_section(Complex{0.0, 0.0}, s, eps);
  const PhasePoint p0 = nm.forward(from_complex(w0));
  const detail::HamiltonianRHS rhs{&sys, Which::h1, 1.0};
  const State4 yT =
      detail::rk45_endpoint(rhs, 0.0, T, detail::to_state(p0), cfg);
  return norm(detail::from_state(yT));
}

}  // namespace ffmono
