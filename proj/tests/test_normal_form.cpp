#include <random>

#include "doctest.h"
#include "ffmono/errors.hpp"
#include "ffmono/normal_form.hpp"

using namespace ffmono;

namespace {

const FlatPolynomial& quartic() {
  static const FlatPolynomial R({{2, 2, {0.05, 0.0}}});
  return R;
}

Complex random_complex(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  const double re = dist(rng), im = dist(rng);
  return {re, im};
}

}  // namespace

TEST_CASE("taylor factors reassemble the perturbation and its gradient") {
  const FlatPolynomial R({{2, 2, {0.05, 0.0}}, {3, 0, {0.0, -0.2}},
                          {1, 2, {0.3, 0.1}}});
  const TaylorFactorization f = factor_flat(R);
  std::mt19937_64 rng(20);
  for (int i = 0; i < 50; ++i) {
    const Complex z1 = random_complex(rng, 0.7);
    const Complex z2 = random_complex(rng, 0.7);
    const Complex r = R.poly().eval(z1, z2);
    const Complex r1 = R.poly().dz1().eval(z1, z2);
    const Complex r2 = R.poly().dz2().eval(z1, z2);
    CHECK(std::abs(f.g1.eval(z1, z2) * z1 + f.g2.eval(z1, z2) * z2 - r) <
          1e-14);
    CHECK(std::abs(f.f1.eval(z1, z2) * z1 + f.e1.eval(z1, z2) * z2 - r1) <
          1e-14);
    CHECK(std::abs(f.f2.eval(z1, z2) * z1 + f.e2.eval(z1, z2) * z2 - r2) <
          1e-14);
  }
}

TEST_CASE("path matrix starts at the off-diagonal swap") {
  const TaylorFactorization f = factor_flat(quartic());
  const Mat2c m = moser_matrix(0.0, ComplexPair{{0.1, 0.0}, {0.1, 0.0}}, f);
  CHECK(std::abs(m.a11) == 0.0);
  CHECK(std::abs(m.a12 - 1.0) == 0.0);
  CHECK(std::abs(m.a21 - 1.0) == 0.0);
  CHECK(std::abs(m.a22) == 0.0);
  CHECK(std::abs(m.det() + 1.0) == 0.0);
  CHECK_THROWS_AS(moser_matrix(2.5, ComplexPair{}, f),
                  std::invalid_argument);
}

TEST_CASE("domain check accepts small flat terms and rejects large ones") {
  CHECK(domain_check(factor_flat(quartic()), 0.3));
  CHECK(domain_check(factor_flat(FlatPolynomial()), 0.3));
  const FlatPolynomial big({{2, 2, {40.0, 0.0}}});
  CHECK_FALSE(domain_check(factor_flat(big), 0.3));
  CHECK_THROWS_AS(normalize(big, 0.3, IntegratorConfig{}), DomainError);
}

TEST_CASE("normalizing map conjugates the hamiltonian to the model") {
  const IntegratorConfig cfg;
  const NormalizingMap nm = normalize(quartic(), 0.3, cfg);
  const PerturbedSystem sys(quartic());
  CHECK(nm.certified_radius() == doctest::Approx(0.91552734375));
  CHECK_FALSE(nm.is_identity());

  std::mt19937_64 rng(21);
  double max_res = 0.0, max_rt = 0.0;
  for (int i = 0; i < 40; ++i) {
    const ComplexPair z{random_complex(rng, 0.15), random_complex(rng, 0.15)};
    const ComplexPair w = nm.forward(z);
    max_res = std::max(max_res, std::abs(sys.hamiltonian(w) - z.z1 * z.z2));
    const ComplexPair back = nm.inverse(w);
    max_rt = std::max(max_rt, std::abs(back.z1 - z.z1) +
                                  std::abs(back.z2 - z.z2));
  }
  CHECK(max_res < 1e-10);
  CHECK(max_rt < 1e-10);
}

TEST_CASE("zero perturbation normalizes to the identity") {
  const NormalizingMap nm =
      normalize(FlatPolynomial(), 0.3, IntegratorConfig{});
  CHECK(nm.is_identity());
  const ComplexPair z{{0.12, -0.05}, {-0.3, 0.07}};
  const ComplexPair w = nm.forward(z);
  CHECK(w.z1 == z.z1);
  CHECK(w.z2 == z.z2);
}

TEST_CASE("evaluations outside the certificate are refused") {
  const NormalizingMap nm = normalize(quartic(), 0.3, IntegratorConfig{});
  const double r = nm.certified_radius();
  CHECK_THROWS_AS(nm.forward(ComplexPair{{2.0 * r, 0.0}, {0.0, 0.0}}),
                  DomainError);
}
