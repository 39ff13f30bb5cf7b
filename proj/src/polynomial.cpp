#include "ffmono/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ffmono {

namespace {

std::string term_name(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// z^n by repeated multiplication; exponents are small.
Complex ipow(Complex z, int n) {
  Complex r{1.0, 0.0};
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

}  // namespace

Poly2::Poly2(std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.a < 0 || t.b < 0)
      throw std::invalid_argument("polynomial term " + term_name(t.a, t.b) +
                                  " has a negative power");
    if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag()))
      throw std::invalid_argument("polynomial term " + term_name(t.a, t.b) +
                                  " has a non-finite coefficient");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& u, const Term& v) {
    return u.a != v.a ? u.a < v.a : u.b < v.b;
  });
  for (const Term& t : terms) {
    if (!terms_.empty() && terms_.back().a == t.a && terms_.back().b == t.b)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(t);
  }
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) {
                                return t.coeff == Complex{0.0, 0.0};
                              }),
               terms_.end());
}

Complex Poly2::eval(Complex z1, Complex z2) const {
  Complex sum{0.0, 0.0};
  for (const Term& t : terms_) sum += t.coeff * ipow(z1, t.a) * ipow(z2, t.b);
  return sum;
}

Poly2 Poly2::dz1() const {
  std::vector<Term> out;
  for (const Term& t : terms_)
    if (t.a > 0) out.push_back({t.a - 1, t.b, double(t.a) * t.coeff});
  return Poly2(std::move(out));
}

Poly2 Poly2::dz2() const {
  std::vector<Term> out;
  for (const Term& t : terms_)
    if (t.b > 0) out.push_back({t.a, t.b - 1, double(t.b) * t.coeff});
  return Poly2(std::move(out));
}

Poly2 Poly2::shifted(int da, int db, Complex coeff) const {
  std::vector<Term> out;
  for (const Term& t : terms_)
    out.push_back({t.a + da, t.b + db, coeff * t.coeff});
  return Poly2(std::move(out));
}

Poly2 Poly2::minus(const Poly2& other) const {
  std::vector<Term> out = terms_;
  for (const Term& t : other.terms_) out.push_back({t.a, t.b, -t.coeff});
  return Poly2(std::move(out));
}

int Poly2::min_total_degree() const {
  int m = std::numeric_limits<int>::max();
  for (const Term& t : terms_) m = std::min(m, t.a + t.b);
  return m;
}

double Poly2::max_coeff_abs() const {
  double m = 0.0;
  for (const Term& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

double Poly2::max_abs_on_torus(double r1, double r2, int samples) const {
  if (samples < 1) throw std::invalid_argument("torus samples must be >= 1");
  double m = 0.0;
  const double dphi = 2.0 * M_PI / samples;
  for (int i = 0; i < samples; ++i) {
    const Complex z1 = std::polar(r1, i * dphi);
    for (int j = 0; j < samples; ++j) {
      const Complex z2 = std::polar(r2, j * dphi);
      m = std::max(m, std::abs(eval(z1, z2)));
    }
  }
  return m;
}

FlatPolynomial::FlatPolynomial(std::vector<Term> terms) : poly_(std::move(terms)) {
  for (const Term& t : poly_.terms())
    if (t.a + t.b < 3)
      throw std::invalid_argument(
          "perturbation term " + term_name(t.a, t.b) +
          " has total degree < 3; the perturbation must be flat");
}

}  // namespace ffmono
