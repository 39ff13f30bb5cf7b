#include <random>

#include "doctest.h"
#include "ffmono/action.hpp"
#include "ffmono/normal_form.hpp"

using namespace ffmono;

namespace {

struct Fixture {
  PerturbedSystem sys{FlatPolynomial({{2, 2, {0.05, 0.0}}})};
  NormalizingMap nm =
      normalize(FlatPolynomial({{2, 2, {0.05, 0.0}}}), 0.3,
                IntegratorConfig{});
  IntegratorConfig cfg;
};

}  // namespace

TEST_CASE("loop action of the model equals the angular integral") {
  std::mt19937_64 rng(30);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const PhasePoint z{dist(rng), dist(rng), dist(rng), dist(rng)};
    CHECK(loop_action_standard(z) == doctest::Approx(q2(z)).epsilon(1e-12));
  }
  // and through the full machinery with an identity normalizing map
  const PerturbedSystem sys;
  const NormalizingMap nm =
      normalize(FlatPolynomial(), 0.3, IntegratorConfig{});
  const PhasePoint w{0.4, -0.2, 0.3, 0.5};
  CHECK(loop_action(sys, nm, w, IntegratorConfig{}) ==
        doctest::Approx(q2(w)).epsilon(1e-10));
}

TEST_CASE("disk quadrature reproduces the model action") {
  const PerturbedSystem sys;
  const NormalizingMap nm =
      normalize(FlatPolynomial(), 0.3, IntegratorConfig{});
  const PhasePoint z{0.3, -0.1, 0.2, 0.25};
  CHECK(disk_action(sys, nm, z, 64) == doctest::Approx(q2(z)).epsilon(1e-8));
}

TEST_CASE("loop and disk forms of the perturbed action agree") {
  const Fixture f;
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> dist(-0.12, 0.12);
  for (int i = 0; i < 5; ++i) {
    const PhasePoint w{dist(rng), dist(rng), dist(rng), dist(rng)};
    const double loop = loop_action(f.sys, f.nm, w, f.cfg);
    const PhasePoint z = f.nm.inverse(w);
    const double disk = disk_action(f.sys, f.nm, z, 48);
    CHECK(std::abs(loop - disk) < 1e-6);
  }
}

TEST_CASE("action deviates from the momentum integral quadratically flatly") {
  const Fixture f;
  const PhasePoint w{0.1, 0.0, 0.0, 0.1};
  const double gap = std::abs(loop_action(f.sys, f.nm, w, f.cfg) -
                              f.sys.h2(w));
  const double w2 = norm(w) * norm(w);
  CHECK(gap <= 1e-3 * w2);
}

TEST_CASE("flatness profile decays and is seed-deterministic") {
  const Fixture f;
  const std::vector<double> radii{0.2, 0.1, 0.05};
  const std::vector<double> a = flatness_profile(f.sys, f.nm, radii, 4, 42);
  const std::vector<double> b = flatness_profile(f.sys, f.nm, radii, 4, 42);
  REQUIRE(a.size() == 3);
  CHECK(a == b);
  CHECK(a[0] > a[1]);
  CHECK(a[1] > a[2]);
  CHECK(a[0] < 1e-2);
}
