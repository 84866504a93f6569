#include <catch2/catch_amalgamated.hpp>

#include "bcgauge/battery.hpp"
#include "bcgauge/gauge.hpp"

using namespace bcg;

namespace {

ModuleVector random_vec(SplitRng& rng, std::size_t dim, double sigma = 1.0) {
  return ModuleVector::from_parts(sampling::gaussian_cvec(rng, dim, sigma),
                                  sampling::gaussian_cvec(rng, dim, sigma));
}

}  // namespace

TEST_CASE("component gauges") {
  const BodyRep ball = BodyRep::ball(ComponentNorm::l2, 2.0);
  const CVector unit = {Complex(1, 0), Complex(0, 0)};
  CHECK(gauge_component(ball, unit) == Catch::Approx(0.5));

  const BodyRep slab = BodyRep::slab({{{Complex(1, 0), Complex(0, 0)}, 1.0}});
  const CVector u = {Complex(3, 0), Complex(0, 0)};
  CHECK(gauge_component(slab, u) == Catch::Approx(3.0));

  CHECK(gauge_component(ball, CVector(2)) == 0.0);
  CHECK(gauge_component(BodyRep::whole_space(), u) == 0.0);
}

TEST_CASE("gauge of a knorm ball is the dnorm") {
  const SetRep s = SetRep::knorm_ball(Hyperbolic::one(), Openness::closed);
  const ModuleVector x = ModuleVector::from_parts({Complex(3, 0)}, {Complex(0, 4)});
  const GaugeResult g = gauge(s, x);
  CHECK(g.value.a1() == Catch::Approx(3.0));
  CHECK(g.value.a2() == Catch::Approx(4.0));

  // bisection oracle agrees to its tolerance
  const GaugeResult b = gauge_bisect(s, x, 1e-8);
  CHECK(std::fabs(g.value.a1() - b.value.a1()) <= 1e-8 + 1e-12);
  CHECK(std::fabs(g.value.a2() - b.value.a2()) <= 1e-8 + 1e-12);
}

TEST_CASE("gauge of an idempotent pair divides componentwise") {
  const SetRep s = SetRep::pair(BodyRep::ball(ComponentNorm::l2, 2.0),
                                BodyRep::ball(ComponentNorm::l2, 0.5), Openness::closed);
  const GaugeResult g = gauge(s, ModuleVector::scalar(Bicomplex::one()));
  CHECK(g.value.a1() == Catch::Approx(0.5));
  CHECK(g.value.a2() == Catch::Approx(2.0));

  CHECK(gauge(s, ModuleVector::zero(1)).value == Hyperbolic::zero());
  CHECK_THROWS_AS(gauge(SetRep::raw("cross_sum_lt_2"), ModuleVector::zero(1)),
                  unsupported_error);
}

TEST_CASE("bisection matches the closed form on randomized sets") {
  SplitRng rng(50);
  for (int si = 0; si < 10; ++si) {
    const SetRep s = battery_detail::random_structural_set(rng, 2, si);
    for (int i = 0; i < 20; ++i) {
      const ModuleVector x = random_vec(rng, 2, i % 2 ? 0.3 : 2.0);
      const Hyperbolic g = gauge(s, x).value;
      const Hyperbolic b = gauge_bisect(s, x, 1e-8).value;
      CHECK(std::fabs(g.a1() - b.a1()) <= 1e-8 + 1e-12);
      CHECK(std::fabs(g.a2() - b.a2()) <= 1e-8 + 1e-12);
    }
  }
  CHECK(gauge_bisect(SetRep::knorm_ball(Hyperbolic::one(), Openness::closed),
                     ModuleVector::zero(2), 1e-10)
            .value == Hyperbolic::zero());
}

TEST_CASE("bisection works per component body on the raw cross-sum set") {
  const SetRep cross = SetRep::raw("cross_sum_lt_2");
  const GaugeResult b =
      gauge_bisect(cross, ModuleVector::scalar(Bicomplex::one()), 1e-8);
  CHECK(b.value.a1() == Catch::Approx(0.5).margin(1e-7));
  CHECK(b.value.a2() == Catch::Approx(0.5).margin(1e-7));
}

TEST_CASE("bisection reports non-absorbed directions") {
  const SetRep slice = SetRep::raw("e1_disk_slice");
  CHECK_THROWS_AS(
      gauge_bisect(slice, ModuleVector::scalar(Bicomplex::one()), 1e-8),
      not_absorbed_error);
}

TEST_CASE("unit sets") {
  const SetRep s = SetRep::knorm_ball(Hyperbolic::one(), Openness::closed);
  const SetRep strict = unit_set(s, UnitSetKind::strict);
  CHECK(openness_of(strict) == Openness::open);
  CHECK(to_json(unit_set(strict, UnitSetKind::strict)) == to_json(strict));

  // A_B lies inside C_B
  SplitRng rng(51);
  const SetRep nonstrict = unit_set(s, UnitSetKind::nonstrict);
  for (int i = 0; i < 2000; ++i) {
    const ModuleVector x = random_vec(rng, 2, 0.7);
    if (contains(strict, x)) CHECK(contains(nonstrict, x));
  }
}

TEST_CASE("gauge chain on open and closed variants") {
  const SetRep pair = SetRep::pair(BodyRep::ball(ComponentNorm::l2, 2.0),
                                   BodyRep::ball(ComponentNorm::l1, 0.75),
                                   Openness::closed);
  CHECK(gauge_chain_check(pair, 3000, 52, 2).pass);
  CHECK(gauge_chain_check(interior(pair), 3000, 53, 2).pass);
  const SetRep kball = SetRep::knorm_ball(Hyperbolic(1.0, 2.0), Openness::open);
  CHECK(gauge_chain_check(kball, 3000, 54, 2).pass);

  // an exact boundary point sits in C_B but outside A_B
  const ModuleVector boundary =
      ModuleVector::from_parts({Complex(2, 0), Complex(0, 0)},
                               {Complex(0.75, 0), Complex(0, 0)});
  const Hyperbolic g = gauge(pair, boundary).value;
  CHECK(leq(g, Hyperbolic::one()));
  CHECK_FALSE(lt_strict(g, Hyperbolic::one()));
}

TEST_CASE("gauge is homogeneous for null-cone scalars") {
  SplitRng rng(55);
  const SetRep s = SetRep::pair(BodyRep::ball(ComponentNorm::l2, 1.5),
                                BodyRep::ball(ComponentNorm::linf, 0.5),
                                Openness::closed);
  for (int i = 0; i < 500; ++i) {
    const ModuleVector x = random_vec(rng, 2);
    const Complex mu = rng.normal_complex();
    const Bicomplex lam = i % 2 ? Bicomplex::from_idempotent(mu, 0.0)
                                : Bicomplex::from_idempotent(0.0, mu);
    const Hyperbolic lhs = gauge(s, scalar_mul(lam, x)).value;
    const Hyperbolic rhs = knorm(lam) * gauge(s, x).value;
    CHECK(std::fabs(lhs.a1() - rhs.a1()) <= 1e-12 * std::max(1.0, rhs.a1()));
    CHECK(std::fabs(lhs.a2() - rhs.a2()) <= 1e-12 * std::max(1.0, rhs.a2()));
  }
}

TEST_CASE("scaling the set divides the gauge") {
  SplitRng rng(56);
  const SetRep s = SetRep::knorm_ball(Hyperbolic(1.0, 2.0), Openness::closed);
  for (int i = 0; i < 500; ++i) {
    const Bicomplex lam = battery_detail::random_invertible(rng);
    const ModuleVector x = random_vec(rng, 3);
    const Hyperbolic lhs = gauge(scale_set(lam, s), x).value;
    const Hyperbolic rhs = gauge(s, x).value / knorm(lam);
    CHECK(std::fabs(lhs.a1() - rhs.a1()) <= 1e-12 * std::max(1.0, rhs.a1()));
    CHECK(std::fabs(lhs.a2() - rhs.a2()) <= 1e-12 * std::max(1.0, rhs.a2()));
  }
}

TEST_CASE("norms from bounded sets") {
  const SetRep s = SetRep::pair(BodyRep::ball(ComponentNorm::l2, 2.0),
                                BodyRep::ball(ComponentNorm::l2, 0.5), Openness::closed);
  const DSeminorm p = dnorm_from_bounded_set(s, 2);
  SplitRng rng(57);
  for (int i = 0; i < 500; ++i) {
    const ModuleVector x = random_vec(rng, 2);
    const Hyperbolic v = p.eval(x);
    const Hyperbolic expected = dnorm(x) / Hyperbolic(2.0, 0.5);
    CHECK(v.a1() == Catch::Approx(expected.a1()).margin(1e-12));
    CHECK(v.a2() == Catch::Approx(expected.a2()).margin(1e-12));
    if (!x.is_zero()) CHECK((v.a1() > 0.0 || v.a2() > 0.0));
  }

  CHECK_THROWS_AS(
      dnorm_from_bounded_set(SetRep::pair(BodyRep::whole_space(),
                                          BodyRep::ball(ComponentNorm::l2, 1.0),
                                          Openness::closed),
                             2),
      unbounded_error);
}
