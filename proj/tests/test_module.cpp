#include <catch2/catch_amalgamated.hpp>

#include "bcgauge/module.hpp"
#include "bcgauge/rng.hpp"

using namespace bcg;

namespace {

ModuleVector random_vec(SplitRng& rng, std::size_t dim, double sigma = 1.0) {
  std::vector<Bicomplex> e;
  for (std::size_t c = 0; c < dim; ++c)
    e.emplace_back(rng.normal_complex(sigma), rng.normal_complex(sigma));
  return ModuleVector(std::move(e));
}

double vec_dist(const ModuleVector& a, const ModuleVector& b) {
  return euclid_type_norm(a - b);
}

}  // namespace

TEST_CASE("idempotent split and join") {
  SplitRng rng(30);
  for (int i = 0; i < 500; ++i) {
    const ModuleVector x = random_vec(rng, 3);
    const ModuleVector back = ModuleVector::from_parts(x.part1(), x.part2());
    CHECK(vec_dist(back, x) <= 1e-15 * std::max(1.0, euclid_type_norm(x)));
  }
}

TEST_CASE("scalar action") {
  SplitRng rng(31);
  const ModuleVector x = random_vec(rng, 2);

  SECTION("e1 keeps the first split and kills the second") {
    const ModuleVector y = scalar_mul(Bicomplex::e1(), x);
    const CVector y1 = y.part1(), y2 = y.part2(), x1 = x.part1();
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(std::abs(y1[c] - x1[c]) < 1e-15);
      CHECK(std::abs(y2[c]) < 1e-15);
    }
  }
  SECTION("identities") {
    CHECK(scalar_mul(Bicomplex::one(), x) == x);
    CHECK(scalar_mul(Bicomplex::zero(), x).is_zero());
  }
  SECTION("split view acts componentwise") {
    const Bicomplex lam = Bicomplex::from_idempotent(Complex(2, 1), Complex(0, 3));
    const ModuleVector y = scalar_mul(lam, x);
    const CVector x1 = x.part1(), x2 = x.part2();
    const CVector y1 = y.part1(), y2 = y.part2();
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(std::abs(y1[c] - lam.z1() * x1[c]) < 1e-12);
      CHECK(std::abs(y2[c] - lam.z2() * x2[c]) < 1e-12);
    }
  }
}

TEST_CASE("translations") {
  SplitRng rng(32);
  const ModuleVector x = random_vec(rng, 3), y = random_vec(rng, 3);
  CHECK(translate(ModuleVector::zero(3), x) == x);
  CHECK(vec_dist(translate(-y, translate(y, x)), x) < 1e-12);

  // split views add componentwise: oracle is entrywise cartesian addition
  const ModuleVector s = translate(y, x);
  const CVector s1 = s.part1(), x1 = x.part1(), y1 = y.part1();
  for (std::size_t c = 0; c < 3; ++c) CHECK(std::abs(s1[c] - (x1[c] + y1[c])) < 1e-12);
}

TEST_CASE("hyperbolic-valued module norm") {
  CVector x1 = {Complex(1, 0), Complex(0, 0)}, x2 = {Complex(0, 0), Complex(0, 0)};
  CHECK(dnorm(ModuleVector::from_parts(x1, x2)) == Hyperbolic::e1());
  CHECK(dnorm(ModuleVector::zero(4)) == Hyperbolic::zero());

  SplitRng rng(33);
  for (int i = 0; i < 500; ++i) {
    const ModuleVector x = random_vec(rng, 2), y = random_vec(rng, 2);
    for (ComponentNorm n1 : {ComponentNorm::l2, ComponentNorm::l1, ComponentNorm::linf})
      for (ComponentNorm n2 : {ComponentNorm::l2, ComponentNorm::l1}) {
        const Hyperbolic v = dnorm(x, n1, n2);
        CHECK(v.in_nonneg_cone());
        // homogeneity under a hyperbolic scalar
        const Hyperbolic lam(rng.uniform(0, 3), rng.uniform(0, 3));
        const Hyperbolic lhs = dnorm(scalar_mul(lam, x), n1, n2);
        const Hyperbolic rhs = lam * v;
        CHECK(std::fabs(lhs.a1() - rhs.a1()) <= 1e-12 * std::max(1.0, rhs.a1()));
        CHECK(std::fabs(lhs.a2() - rhs.a2()) <= 1e-12 * std::max(1.0, rhs.a2()));
        // triangle under <='
        const Hyperbolic sum = dnorm(x + y, n1, n2);
        const Hyperbolic bound = v + dnorm(y, n1, n2);
        CHECK(sum.a1() <= bound.a1() + 1e-9);
        CHECK(sum.a2() <= bound.a2() + 1e-9);
      }
    CHECK((dnorm(x).is_zero()) == x.is_zero());
  }

  SECTION("general bicomplex homogeneity uses the knorm") {
    SplitRng rng2(34);
    for (int i = 0; i < 500; ++i) {
      const ModuleVector x = random_vec(rng2, 3);
      const Bicomplex lam(rng2.normal_complex(), rng2.normal_complex());
      const Hyperbolic lhs = dnorm(scalar_mul(lam, x));
      const Hyperbolic rhs = knorm(lam) * dnorm(x);
      CHECK(std::fabs(lhs.a1() - rhs.a1()) <= 1e-12 * std::max(1.0, rhs.a1()));
      CHECK(std::fabs(lhs.a2() - rhs.a2()) <= 1e-12 * std::max(1.0, rhs.a2()));
    }
  }
}

TEST_CASE("euclidean-type norm") {
  CVector a = {Complex(3, 0)}, b = {Complex(4, 0)};
  CHECK(euclid_type_norm(ModuleVector::from_parts(a, b)) ==
        Catch::Approx(std::sqrt(12.5)));
  CHECK(euclid_type_norm(ModuleVector::zero(2)) == 0.0);

  SplitRng rng(35);
  SECTION("agrees with the scalar norm in dimension 1") {
    for (int i = 0; i < 100; ++i) {
      const Bicomplex z(rng.normal_complex(), rng.normal_complex());
      CHECK(euclid_type_norm(ModuleVector::scalar(z)) ==
            Catch::Approx(euclid_norm(z)).epsilon(1e-12).margin(1e-300));
    }
  }
  SECTION("real-norm bound ||zx|| <= sqrt(2)|z| ||x||") {
    const double root2 = std::sqrt(2.0);
    for (int i = 0; i < 1000; ++i) {
      const ModuleVector x = random_vec(rng, 2);
      const Bicomplex z(rng.normal_complex(), rng.normal_complex());
      CHECK(euclid_type_norm(scalar_mul(z, x)) <=
            root2 * euclid_norm(z) * euclid_type_norm(x) * (1 + 1e-12));
    }
  }
  SECTION("magnitude identity for l2 components") {
    for (int i = 0; i < 500; ++i) {
      const ModuleVector x = random_vec(rng, 3);
      const Hyperbolic v = dnorm(x);
      const double mag = euclid_norm(Bicomplex::from_hyperbolic(v));
      CHECK(mag == Catch::Approx(euclid_type_norm(x)).epsilon(1e-12).margin(1e-300));
    }
  }
}

TEST_CASE("invertible scalars act bijectively") {
  SplitRng rng(36);
  for (int i = 0; i < 300; ++i) {
    const ModuleVector x = random_vec(rng, 2);
    const Bicomplex lam = Bicomplex::from_idempotent(
        std::polar(rng.uniform(0.2, 3.0), rng.uniform(0.0, 6.28)),
        std::polar(rng.uniform(0.2, 3.0), rng.uniform(0.0, 6.28)));
    const ModuleVector back = scalar_mul(invert(lam), scalar_mul(lam, x));
    CHECK(vec_dist(back, x) <= 1e-12 * std::max(1.0, euclid_type_norm(x)));
  }
}

TEST_CASE("dimension rules") {
  CHECK_THROWS_AS(ModuleVector::zero(2) + ModuleVector::zero(3), dimension_error);
  CHECK_THROWS_AS(ModuleVector(std::vector<Bicomplex>{}), invalid_value_error);
  CHECK_THROWS_AS(ModuleVector::from_parts(CVector(2), CVector(3)), dimension_error);
}
