#include <catch2/catch_amalgamated.hpp>

#include "bcgauge/expr.hpp"

using namespace bcg;

TEST_CASE("cartesian literals") {
  const Bicomplex z = eval_expression("1+2i+3j+4k");
  CHECK(z.w1() == Complex(1, 2));
  CHECK(z.w2() == Complex(3, 4));

  CHECK(eval_expression("-2i").w1() == Complex(0, -2));
  CHECK(eval_expression("1.5 - 0.5k") == Bicomplex(Complex(1.5, 0), Complex(0, -0.5)));
}

TEST_CASE("idempotent literals") {
  const Bicomplex z = eval_expression("[3|4]");
  CHECK(std::abs(z.z1() - Complex(3, 0)) < 1e-15);
  CHECK(std::abs(z.z2() - Complex(4, 0)) < 1e-15);

  const Bicomplex w = eval_expression("[1+2i|3]");
  CHECK(std::abs(w.z1() - Complex(1, 2)) < 1e-15);
  CHECK(std::abs(w.z2() - Complex(3, 0)) < 1e-15);

  CHECK_THROWS_AS(eval_expression("[j|0]"), parse_error);
}

TEST_CASE("units and idempotent elements") {
  CHECK(eval_expression("e1*e2") == Bicomplex::zero());
  CHECK(eval_expression("e1+e2") == Bicomplex::one());
  CHECK(eval_expression("i*j") == Bicomplex::unit_k());
  CHECK(eval_expression("k*k") == Bicomplex::one());
  CHECK(eval_expression("(1+k)/2") == Bicomplex::e1());
}

TEST_CASE("operator precedence and arithmetic") {
  CHECK(eval_expression("1+2*3") == Bicomplex(7.0));
  CHECK(eval_expression("(1+2)*3") == Bicomplex(9.0));
  CHECK(eval_expression("8/2/2") == Bicomplex(2.0));
  CHECK(eval_expression("-3+1") == Bicomplex(-2.0));
}

TEST_CASE("conjugation postfix") {
  const Bicomplex z = eval_expression("(1+2i+3j+4k)^dag2");
  CHECK(z.w1() == Complex(1, 2));
  CHECK(z.w2() == Complex(-3, -4));
  CHECK(eval_expression("e1^dag3") == Bicomplex::e1());
  CHECK_THROWS_AS(eval_expression("1^dag9"), parse_error);
}

TEST_CASE("functions") {
  const Bicomplex kn = eval_expression("knorm([3|4])");
  CHECK(std::abs(kn.z1() - Complex(3, 0)) < 1e-15);
  CHECK(std::abs(kn.z2() - Complex(4, 0)) < 1e-15);

  CHECK(eval_expression("abs([3|4])") ==
        Bicomplex(std::sqrt(12.5)));
  CHECK(eval_expression("inv([2|4])") == Bicomplex::from_idempotent(0.5, 0.25));
  CHECK_THROWS_AS(eval_expression("inv(e1)"), null_cone_error);
  CHECK_THROWS_AS(eval_expression("e1/e2"), null_cone_error);
  CHECK_THROWS_AS(eval_expression("frob(1)"), parse_error);
}

TEST_CASE("parse errors carry positions") {
  try {
    eval_expression("1+");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position == 2);
  }
  try {
    eval_expression("2*foo");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position == 2);
  }
  CHECK_THROWS_AS(eval_expression("[1|"), parse_error);
  CHECK_THROWS_AS(eval_expression("(1"), parse_error);
  CHECK_THROWS_AS(eval_expression("1 2"), parse_error);
}
