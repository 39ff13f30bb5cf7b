#pragma once

// Bivariate complex polynomials in (z1, z2).  Poly2 is the general carrier
// used for derivatives and Taylor factors; FlatPolynomial is the validated
// perturbation type whose terms all have total degree >= 3.

#include <complex>
#include <vector>

#include "ffmono/phase_space.hpp"

namespace ffmono {

struct Term {
  int a = 0;  // power of z1
  int b = 0;  // power of z2
  Complex coeff{0.0, 0.0};
};

class Poly2 {
 public:
  Poly2() = default;
  // Normalizes: sorts by (a, b), merges duplicate keys, drops zero terms.
  // Throws std::invalid_argument on negative powers or non-finite
  // coefficients.
  explicit Poly2(std::vector<Term> terms);

  Complex eval(Complex z1, Complex z2) const;
  Complex eval(const ComplexPair& z) const { return eval(z.z1, z.z2); }

  Poly2 dz1() const;
  Poly2 dz2() const;

  // this * coeff * z1^da * z2^db
  Poly2 shifted(int da, int db, Complex coeff) const;

  // Coefficient-wise difference, used by factorization identity checks.
  Poly2 minus(const Poly2& other) const;

  bool empty() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  int min_total_degree() const;  // large sentinel when empty
  double max_coeff_abs() const;

  // max |p| over the torus {|z1| = r1, |z2| = r2} sampled at `samples`
  // equispaced angles per circle.
  double max_abs_on_torus(double r1, double r2, int samples) const;

 private:
  std::vector<Term> terms_;
};

// Perturbation of the focus-focus model: every term has total degree >= 3,
// so the Hamiltonian z1 z2 + R keeps its quadratic part and the Taylor
// factorizations used by the normal form have no constant obstruction.
class FlatPolynomial {
 public:
  FlatPolynomial() = default;  // zero perturbation
  explicit FlatPolynomial(std::vector<Term> terms);

  static FlatPolynomial zero() { return FlatPolynomial{}; }

  const Poly2& poly() const { return poly_; }
  bool is_zero() const { return poly_.empty(); }

 private:
  Poly2 poly_;
};

}  // namespace ffmono
