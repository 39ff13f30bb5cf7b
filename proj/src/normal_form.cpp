#include "ffmono/normal_form.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ffmono/errors.hpp"

namespace ffmono {

namespace {

constexpr double kMorseBound = 1.0 / 16.0;
constexpr double kDetGuard = 1e-6;

std::string point_str(const ComplexPair& z) {
  std::ostringstream os;
  os << "(z1 = " << z.z1.real() << (z.z1.imag() < 0 ? " - " : " + ")
     << std::abs(z.z1.imag()) << "i, z2 = " << z.z2.real()
     << (z.z2.imag() < 0 ? " - " : " + ") << std::abs(z.z2.imag()) << "i)";
  return os.str();
}

// Integral-form Taylor split of a polynomial with min degree >= 1:
// p = p1 * z1 + p2 * z2 with monomial weights a/(a+b), b/(a+b).
void taylor_split(const Poly2& p, Poly2* p1, Poly2* p2) {
  std::vector<Term> t1, t2;
  for (const Term& t : p.terms()) {
    const double d = double(t.a + t.b);
    if (t.a > 0) t1.push_back({t.a - 1, t.b, (t.a / d) * t.coeff});
    if (t.b > 0) t2.push_back({t.a, t.b - 1, (t.b / d) * t.coeff});
  }
  *p1 = Poly2(std::move(t1));
  *p2 = Poly2(std::move(t2));
}

}  // namespace

TaylorFactorization factor_flat(const FlatPolynomial& R) {
  TaylorFactorization f;
  taylor_split(R.poly(), &f.g1, &f.g2);
  taylor_split(R.poly().dz1(), &f.f1, &f.e1);
  taylor_split(R.poly().dz2(), &f.f2, &f.e2);
  return f;
}

Mat2c moser_matrix(double t, const ComplexPair& z,
                   const TaylorFactorization& f) {
  if (!(t >= 0.0 && t <= 2.0))
    throw std::invalid_argument("path time must lie in [0, 2]");
  return {t * f.f1.eval(z), Complex{1.0, 0.0} + t * f.f2.eval(z),
          Complex{1.0, 0.0} + t * f.e1.eval(z), t * f.e2.eval(z)};
}

bool domain_check(const TaylorFactorization& f, double radius, int samples) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  if (samples < 4) throw std::invalid_argument("samples must be >= 4");
  const Poly2* polys[] = {&f.f1, &f.e1, &f.f2, &f.e2};
  for (double r : {radius, radius / 2.0})
    for (const Poly2* p : polys)
      if (p->max_abs_on_torus(r, r, samples) >= kMorseBound) return false;
  return true;
}

ComplexPair MoserField::eval(double t, const ComplexPair& z) const {
  const Mat2c m = moser_matrix(t, z, fact_);
  const Complex det = m.det();
  if (std::abs(det) < kDetGuard)
    throw DomainError("homological system is near-singular (|det| = " +
                      std::to_string(std::abs(det)) + ") at " + point_str(z));
  const Complex rhs1 = -fact_.g1.eval(z);
  const Complex rhs2 = -fact_.g2.eval(z);
  // Cramer on [[a11, a12], [a21, a22]] (A, B)^T = (rhs1, rhs2)^T.
  return {(rhs1 * m.a22 - m.a12 * rhs2) / det,
          (m.a11 * rhs2 - rhs1 * m.a21) / det};
}

ComplexPair moser_field_eval(const MoserField& mf, double t,
                             const ComplexPair& z) {
  return mf.eval(t, z);
}

NormalizingMap::NormalizingMap(MoserField field, double domain_radius,
                               double certified_radius, IntegratorConfig cfg)
    : field_(std::move(field)),
      domain_radius_(domain_radius),
      certified_radius_(certified_radius),
      cfg_(cfg) {}

ComplexPair NormalizingMap::flow(const ComplexPair& z, double t_from,
                                 double t_to) const {
  if (is_identity()) return z;
  const double bound = certified_radius_ * (1.0 + 1e-9) + 1e-12;
  auto check = [&](const ComplexPair& w) {
    if (std::abs(w.z1) > bound || std::abs(w.z2) > bound)
      throw DomainError("Moser path left the certified polydisk (radius " +
                        std::to_string(certified_radius_) + ") at " +
                        point_str(w));
  };
  check(z);
  detail::State4 y{z.z1.real(), z.z1.imag(), z.z2.real(), z.z2.imag()};
  auto rhs = [this](double t, const detail::State4& s) -> detail::State4 {
    const ComplexPair ab =
        field_.eval(t, {Complex{s[0], s[1]}, Complex{s[2], s[3]}});
    return {ab.z1.real(), ab.z1.imag(), ab.z2.real(), ab.z2.imag()};
  };
  detail::rk45(rhs, t_from, t_to, y, cfg_,
               [&](double, const detail::State4&, double,
                   const detail::State4& s) {
                 y = s;
                 check({Complex{s[0], s[1]}, Complex{s[2], s[3]}});
                 return true;
               });
  return {Complex{y[0], y[1]}, Complex{y[2], y[3]}};
}

ComplexPair NormalizingMap::forward(const ComplexPair& z) const {
  return flow(z, 0.0, 1.0);
}

ComplexPair NormalizingMap::inverse(const ComplexPair& z) const {
  return flow(z, 1.0, 0.0);
}

ComplexPair NormalizingMap::forward_t(const ComplexPair& z, double t) const {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::invalid_argument("path time must lie in [0, 1]");
  return flow(z, 0.0, t);
}

ComplexPair NormalizingMap::inverse_t(const ComplexPair& z, double t) const {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::invalid_argument("path time must lie in [0, 1]");
  return flow(z, t, 0.0);
}

PhasePoint NormalizingMap::forward(const PhasePoint& p) const {
  return from_complex(forward(to_complex(p)));
}

PhasePoint NormalizingMap::inverse(const PhasePoint& p) const {
  return from_complex(inverse(to_complex(p)));
}

NormalizingMap normalize(const FlatPolynomial& R, double radius,
                         const IntegratorConfig& cfg) {
  cfg.validate();
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  if (R.is_zero()) {
    return NormalizingMap(MoserField{}, radius,
                          std::numeric_limits<double>::infinity(), cfg);
  }
  TaylorFactorization f = factor_flat(R);
  if (!domain_check(f, radius))
    throw DomainError(
        "Morse bound fails on the polydisk of radius " + std::to_string(radius) +
        "; the perturbation is too large for the normal form there");
  // Extend the certificate outward: evaluations between sections routinely
  // sit outside the user's polydisk, and the bound often holds much further.
  double certified = radius;
  for (int i = 0; i < 40; ++i) {
    const double next = certified * 1.25;
    if (next > 64.0 || !domain_check(f, next)) break;
    certified = next;
  }
  return NormalizingMap(MoserField(std::move(f)), radius, certified, cfg);
}

}  // namespace ffmono
