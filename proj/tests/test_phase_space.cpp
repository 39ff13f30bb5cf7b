#include <random>

#include "doctest.h"
#include "ffmono/phase_space.hpp"

using namespace ffmono;

TEST_CASE("complex chart roundtrips points and tangents") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const PhasePoint p{dist(rng), dist(rng), dist(rng), dist(rng)};
    const PhasePoint q = from_complex(to_complex(p));
    CHECK(q.x == p.x);
    CHECK(q.y == p.y);
    CHECK(q.px == p.px);
    CHECK(q.py == p.py);

    const TangentVector v{dist(rng), dist(rng), dist(rng), dist(rng)};
    const TangentVector w = tangent_from_chart(tangent_to_chart(v));
    CHECK(w.dx == v.dx);
    CHECK(w.dy == v.dy);
    CHECK(w.dpx == v.dpx);
    CHECK(w.dpy == v.dpy);
  }
}

TEST_CASE("q1 + i q2 equals z1 z2 in the chart") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const PhasePoint p{dist(rng), dist(rng), dist(rng), dist(rng)};
    const ComplexPair z = to_complex(p);
    const Complex prod = z.z1 * z.z2;
    CHECK(prod.real() == doctest::Approx(q1(p)).epsilon(1e-14));
    CHECK(prod.imag() == doctest::Approx(q2(p)).epsilon(1e-14));
  }
}

TEST_CASE("symplectic pairing is antisymmetric with unit coordinate blocks") {
  const PhasePoint p{};
  const TangentVector ex{1, 0, 0, 0}, ey{0, 1, 0, 0};
  const TangentVector epx{0, 0, 1, 0}, epy{0, 0, 0, 1};
  CHECK(omega_eval(p, ex, epx) == 1.0);
  CHECK(omega_eval(p, ey, epy) == 1.0);
  CHECK(omega_eval(p, epx, ex) == -1.0);
  CHECK(omega_eval(p, ex, ey) == 0.0);
  CHECK(omega_eval(p, ex, epy) == 0.0);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const TangentVector v{dist(rng), dist(rng), dist(rng), dist(rng)};
    const TangentVector w{dist(rng), dist(rng), dist(rng), dist(rng)};
    CHECK(omega_eval(p, v, w) == doctest::Approx(-omega_eval(p, w, v)));
    CHECK(omega_eval(p, v, v) == doctest::Approx(0.0));
  }
}

TEST_CASE("tautological form pairs momenta with position displacements") {
  const PhasePoint p{0.0, 0.0, 3.0, -2.0};
  CHECK(alpha_eval(p, TangentVector{1, 0, 0, 0}) == 3.0);
  CHECK(alpha_eval(p, TangentVector{0, 1, 0, 0}) == -2.0);
  CHECK(alpha_eval(p, TangentVector{0, 0, 1, 1}) == 0.0);
}
