#include <random>
#include <stdexcept>

#include "doctest.h"
#include "ffmono/dynamics.hpp"

using namespace ffmono;

namespace {

PhasePoint random_point(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  return {dist(rng), dist(rng), dist(rng), dist(rng)};
}

double dist4(const PhasePoint& a, const PhasePoint& b) {
  return norm(PhasePoint{a.x - b.x, a.y - b.y, a.px - b.px, a.py - b.py});
}

}  // namespace

TEST_CASE("standard flows preserve both quadratic integrals") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 50; ++i) {
    const PhasePoint p = random_point(rng, 1.5);
    for (double t : {-1.3, 0.4, 2.0}) {
      const PhasePoint a = standard_flow_q1(t, p);
      CHECK(q1(a) == doctest::Approx(q1(p)).epsilon(1e-12));
      CHECK(q2(a) == doctest::Approx(q2(p)).epsilon(1e-12));
      const PhasePoint b = standard_flow_q2(t, p);
      CHECK(q1(b) == doctest::Approx(q1(p)).epsilon(1e-12));
      CHECK(q2(b) == doctest::Approx(q2(p)).epsilon(1e-12));
    }
  }
}

TEST_CASE("complex-time flow restricts to the real flows") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const PhasePoint p = random_point(rng, 1.5);
    const double t = 0.7, s = -1.1;
    // real time: the q1 flow
    const PhasePoint a = standard_flow_q1(t, p);
    const PhasePoint az = from_complex(complex_flow(Complex{t, 0.0},
                                                    to_complex(p)));
    CHECK(dist4(a, az) < 1e-13);
    // imaginary time -is: the q2 flow by s
    const PhasePoint b = standard_flow_q2(s, p);
    const PhasePoint bz = from_complex(complex_flow(Complex{0.0, -s},
                                                    to_complex(p)));
    CHECK(dist4(b, bz) < 1e-13);
  }
  CHECK_THROWS_AS(standard_flow_q1(701.0, PhasePoint{1, 0, 0, 0}),
                  std::range_error);
  CHECK_THROWS_AS(complex_flow(Complex{-701.0, 0.0}, ComplexPair{}),
                  std::range_error);
}

TEST_CASE("vector fields agree with their chart expressions") {
  const PerturbedSystem std_sys;
  const PerturbedSystem pert(FlatPolynomial({{2, 2, {0.05, 0.0}},
                                             {3, 0, {0.0, -0.2}}}));
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    const PhasePoint p = random_point(rng, 1.0);
    for (const PerturbedSystem* sys : {&std_sys, &pert}) {
      for (Which w : {Which::h1, Which::h2}) {
        const ComplexPair via_chart = sys->chart_field(w, to_complex(p));
        const ComplexPair via_field =
            tangent_to_chart(sys->vector_field(w, p));
        CHECK(std::abs(via_chart.z1 - via_field.z1) < 1e-13);
        CHECK(std::abs(via_chart.z2 - via_field.z2) < 1e-13);
      }
    }
  }
}

TEST_CASE("hamiltonian value matches the integral map in the chart") {
  const PerturbedSystem pert(FlatPolynomial({{2, 2, {0.05, 0.0}}}));
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const PhasePoint p = random_point(rng, 1.0);
    const Complex h = pert.hamiltonian(to_complex(p));
    CHECK(h.real() == doctest::Approx(pert.h1(p)).epsilon(1e-13));
    CHECK(h.imag() == doctest::Approx(pert.h2(p)).epsilon(1e-13));
    const EnergyMomentum em = pert.integral_map(p);
    CHECK(em.c1 == pert.h1(p));
    CHECK(em.c2 == pert.h2(p));
  }
}

TEST_CASE("integrated standard flow matches the closed form") {
  const PerturbedSystem sys;
  const IntegratorConfig cfg;
  const PhasePoint p{0.3, -0.2, 0.1, 0.4};
  const Trajectory tr = integrate(sys, Which::h1, p, 0.0, 1.5, cfg);
  REQUIRE(tr.times.size() == tr.points.size());
  REQUIRE(tr.times.front() == 0.0);
  REQUIRE(tr.times.back() == 1.5);
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    const PhasePoint want = standard_flow_q1(tr.times[i], p);
    CHECK(dist4(tr.points[i], want) < 1e-9);
  }
}

TEST_CASE("perturbed flow conserves both integrals") {
  const PerturbedSystem sys(FlatPolynomial({{2, 2, {0.05, 0.0}}}));
  const IntegratorConfig cfg;
  const PhasePoint p{0.25, -0.1, 0.15, 0.2};
  const double a1 = sys.h1(p), a2 = sys.h2(p);
  for (Which w : {Which::h1, Which::h2}) {
    const Trajectory tr = integrate(sys, w, p, 0.0, 2.0, cfg);
    for (const PhasePoint& q : tr.points) {
      CHECK(sys.h1(q) == doctest::Approx(a1).epsilon(1e-9));
      CHECK(sys.h2(q) == doctest::Approx(a2).epsilon(1e-9));
    }
  }
}

TEST_CASE("integration rejects reversed spans and blow-ups") {
  const PerturbedSystem sys;
  const IntegratorConfig cfg;
  CHECK_THROWS_AS(integrate(sys, Which::h1, PhasePoint{}, 1.0, 0.0, cfg),
                  std::invalid_argument);
  // the q1 flow grows like e^t; far horizons overflow to a blow-up
  CHECK_THROWS_AS(
      integrate(sys, Which::h1, PhasePoint{1, 0, 0, 0}, 0.0, 800.0, cfg),
      NumericalError);
}
