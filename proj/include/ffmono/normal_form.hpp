#pragma once

// Constructive complex Morse lemma around the focus-focus equilibrium: a
// Moser-path flow carrying z1 z2 + R(z) into z1 z2 on a certified polydisk.

#include <complex>

#include "ffmono/dynamics.hpp"
#include "ffmono/polynomial.hpp"

namespace ffmono {

// Taylor factors R = g1 z1 + g2 z2 and dR/dz_j = f_j z1 + e_j z2, built
// term-wise with the integral-form weights a/(a+b), b/(a+b).
struct TaylorFactorization {
  Poly2 g1, g2;  // vanish to first order (R has degree >= 3)
  Poly2 f1, e1;  // split of dR/dz1
  Poly2 f2, e2;  // split of dR/dz2
};

TaylorFactorization factor_flat(const FlatPolynomial& R);

struct Mat2c {
  Complex a11, a12, a21, a22;
  Complex det() const { return a11 * a22 - a12 * a21; }
};

// Coefficient matrix of the homological system at path time t:
// [[t f1, 1 + t f2], [1 + t e1, t e2]].  Requires t in [0, 2].
Mat2c moser_matrix(double t, const ComplexPair& z,
                   const TaylorFactorization& f);

// True iff |e1|, |f1|, |e2|, |f2| < 1/16 on the sampled distinguished
// boundary of the polydisk (radii {radius, radius/2}, `samples` angles per
// circle).  When true the matrix determinant is bounded away from zero
// (|det| >= 47/64) for every t in [0, 2] and z in the polydisk.
bool domain_check(const TaylorFactorization& f, double radius,
                  int samples = 64);

// Time-dependent vector field (A, B) solving the homological equation
// dH_t . X_t = -R via the 2x2 system above (Cramer).  Near-singular matrices
// (|det| < 1e-6) raise DomainError.
class MoserField {
 public:
  MoserField() = default;
  explicit MoserField(TaylorFactorization f) : fact_(std::move(f)) {}

  ComplexPair eval(double t, const ComplexPair& z) const;
  bool is_zero() const { return fact_.g1.empty() && fact_.g2.empty(); }
  const TaylorFactorization& factorization() const { return fact_; }

 private:
  TaylorFactorization fact_;
};

ComplexPair moser_field_eval(const MoserField& mf, double t,
                             const ComplexPair& z);

// Normalizing diffeomorphism Phi = time-0-to-1 flow of the Moser field, with
// H(Phi(z)) = z1 z2 on the certified polydisk.  Evaluations integrate the
// path flow on demand; trajectories that exit the certified polydisk raise
// DomainError with the exit point.
class NormalizingMap {
 public:
  NormalizingMap() = default;
  NormalizingMap(MoserField field, double domain_radius,
                 double certified_radius, IntegratorConfig cfg);

  ComplexPair forward(const ComplexPair& z) const;    // Phi
  ComplexPair inverse(const ComplexPair& z) const;    // Phi^{-1}
  ComplexPair forward_t(const ComplexPair& z, double t) const;  // Phi_t
  ComplexPair inverse_t(const ComplexPair& z, double t) const;

  PhasePoint forward(const PhasePoint& p) const;
  PhasePoint inverse(const PhasePoint& p) const;

  double domain_radius() const { return domain_radius_; }
  // Largest polydisk radius at which the boundary check passed; flow
  // evaluations are enforced against this one.
  double certified_radius() const { return certified_radius_; }
  const IntegratorConfig& config() const { return cfg_; }
  const MoserField& field() const { return field_; }
  bool is_identity() const { return field_.is_zero(); }

 private:
  ComplexPair flow(const ComplexPair& z, double t_from, double t_to) const;

  MoserField field_;
  double domain_radius_ = 0.0;
  double certified_radius_ = 0.0;
  IntegratorConfig cfg_;
};

// Builds the normalizing map for R on the polydisk of the given radius.
// Requires domain_check(factor_flat(R), radius); the certificate is then
// extended outward to the largest sampled radius that still passes, so that
// evaluations moderately outside the requested polydisk stay usable.
NormalizingMap normalize(const FlatPolynomial& R, double radius,
                         const IntegratorConfig& cfg);

}  // namespace ffmono
