#include <catch2/catch_amalgamated.hpp>

#include "bcgauge/battery.hpp"
#include "bcgauge/seminorm.hpp"

using namespace bcg;

namespace {

ModuleVector dyadic_vec(SplitRng& rng, std::size_t dim) {
  return detail::dyadic_vector(rng, dim, 4.0);
}

}  // namespace

TEST_CASE("constant family series sums to p/(1+p)") {
  const SeminormFamily f({DSeminorm::knorm()});
  const ModuleVector x = ModuleVector::scalar(Bicomplex::one());
  const ModuleVector y = ModuleVector::zero(1);

  // |x-y|_k = 1, so the limit is 1/2; the partial sum at N lags by 2^-N/2
  const Hyperbolic d30 = dmetric(f, x, y, 30);
  CHECK(std::fabs(d30.a1() - 0.5) <= std::ldexp(1.0, -30));
  CHECK(std::fabs(d30.a2() - 0.5) <= std::ldexp(1.0, -30));

  CHECK(dmetric(f, x, x, 17) == Hyperbolic::zero());

  SplitRng rng(80);
  for (int i = 0; i < 500; ++i) {
    const ModuleVector a = dyadic_vec(rng, 2), b = dyadic_vec(rng, 2);
    const Hyperbolic v = dnorm(a - b);
    const Hyperbolic limit(v.a1() / (1.0 + v.a1()), v.a2() / (1.0 + v.a2()));
    const Hyperbolic partial = dmetric(f, a, b, 30);
    CHECK(std::fabs(limit.a1() - partial.a1()) <= std::ldexp(1.0, -30));
    CHECK(std::fabs(limit.a2() - partial.a2()) <= std::ldexp(1.0, -30));
  }
}

TEST_CASE("translation invariance is exact at every truncation") {
  SplitRng rng(81);
  const SeminormFamily f = battery_detail::metric_family_increasing(2);
  for (int i = 0; i < 1000; ++i) {
    const ModuleVector x = dyadic_vec(rng, 2), y = dyadic_vec(rng, 2),
                       z = dyadic_vec(rng, 2);
    const int n = 1 + static_cast<int>(rng.uniform_index(64));
    CHECK(dmetric(f, translate(z, x), translate(z, y), n) == dmetric(f, x, y, n));
  }
}

TEST_CASE("metric axioms") {
  CHECK(metric_axiom_check(battery_detail::metric_family_constant(), 2000, 82, 2).pass);
  CHECK(metric_axiom_check(battery_detail::metric_family_increasing(2), 2000, 83, 2)
            .pass);
}

TEST_CASE("partial sums are monotone with a 2^-N tail") {
  SplitRng rng(84);
  const SeminormFamily f = battery_detail::metric_family_increasing(2);
  for (int i = 0; i < 300; ++i) {
    const ModuleVector x = dyadic_vec(rng, 2), y = dyadic_vec(rng, 2);
    const Hyperbolic full = dmetric(f, x, y, 64);
    Hyperbolic prev = dmetric(f, x, y, 1);
    for (int n : {2, 4, 8, 16, 32, 64}) {
      const Hyperbolic cur = dmetric(f, x, y, n);
      CHECK(leq(prev, cur));
      prev = cur;
    }
    for (int n : {1, 2, 4, 8, 16, 32}) {
      const Hyperbolic at = dmetric(f, x, y, n);
      const double tail = std::ldexp(1.0, -n) + 1e-12;
      CHECK(full.a1() - at.a1() <= tail);
      CHECK(full.a2() - at.a2() <= tail);
    }
  }
}

TEST_CASE("a non-separated family yields distance zero between distinct points") {
  const SeminormFamily f({DSeminorm::component_abs(1, 0)});
  SplitRng rng(85);
  const ModuleVector x = detail::gaussian_vector(rng, 2, 1.0);
  CVector shift1(2), shift2(2);
  shift2[0] = Complex(1.5, 0);  // an e2-supported displacement
  const ModuleVector y = x - ModuleVector::from_parts(shift1, shift2);
  CHECK_FALSE(x == y);
  CHECK(dmetric(f, x, y, 64) == Hyperbolic::zero());
}

TEST_CASE("metric neighborhoods refine seminorm neighborhoods") {
  SECTION("delta formula") {
    CHECK(metric_topology_delta(1, Hyperbolic::one()) == Hyperbolic(0.25, 0.25));
    CHECK(metric_topology_delta(2, Hyperbolic(1.0, 3.0)) == Hyperbolic(0.125, 0.1875));
    CHECK_THROWS_AS(metric_topology_delta(1, Hyperbolic(1.0, 0.0)),
                    invalid_value_error);
  }
  SECTION("sampled implication for two increasing families") {
    const SeminormFamily a = increasing_family(SeminormFamily(
        {DSeminorm::knorm(), DSeminorm::scaled(DSeminorm::knorm(), Hyperbolic(2.0))}));
    CHECK(metric_topology_compat_check(a, 1, Hyperbolic::one(), 3000, 86, 2).pass);

    const SeminormFamily b = battery_detail::metric_family_increasing(2);
    CHECK(metric_topology_compat_check(b, 2, Hyperbolic(1.0, 3.0), 3000, 87, 2).pass);
  }
}
