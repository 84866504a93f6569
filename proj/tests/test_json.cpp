#include <catch2/catch_amalgamated.hpp>

#include "bcgauge/json_io.hpp"
#include "bcgauge/rng.hpp"

using namespace bcg;

TEST_CASE("scalar schemas") {
  const json j = json::parse(R"({"w1":[1.0,2.0],"w2":[3.0,-4.5]})");
  const Bicomplex z = bicomplex_from_json(j);
  CHECK(z.w1() == Complex(1.0, 2.0));
  CHECK(z.w2() == Complex(3.0, -4.5));
  CHECK(to_json(z) == j);

  CHECK(hyperbolic_from_json(json::parse(R"({"e1":3,"e2":4})")) == Hyperbolic(3, 4));
  CHECK_THROWS_AS(bicomplex_from_json(json::parse(R"({"w1":[1,2]})")), parse_error);
  CHECK_THROWS_AS(complex_from_json(json::parse("[1]")), parse_error);
}

TEST_CASE("vector round trip") {
  SplitRng rng(90);
  for (int i = 0; i < 200; ++i) {
    std::vector<Bicomplex> e;
    const std::size_t n = 1 + rng.uniform_index(4);
    for (std::size_t c = 0; c < n; ++c)
      e.emplace_back(rng.normal_complex(), rng.normal_complex());
    const ModuleVector x(std::move(e));
    const ModuleVector back = vector_from_json(to_json(x));
    CHECK(back == x);
  }
  CHECK_THROWS_AS(vector_from_json(json::parse(R"({"dim":2,"entries":[]})")),
                  parse_error);
}

TEST_CASE("set schemas round trip") {
  const char* texts[] = {
      R"({"kind":"knorm_ball","radius":{"e1":1.0,"e2":2.0},"openness":"open","n1":"l2","n2":"l1"})",
      R"({"kind":"idempotent_pair","b1":{"kind":"ball","norm":"linf","radius":0.5},
          "b2":{"kind":"modslab","constraints":[{"f":[[1.0,0.0],[0.0,1.0]],"c":2.0}]},
          "openness":"closed"})",
      R"({"kind":"idempotent_pair",
          "b1":{"kind":"intersection","parts":[{"kind":"ball","norm":"l2","radius":1.0},
                                               {"kind":"ball","norm":"l1","radius":2.0}]},
          "b2":{"kind":"ball","norm":"l2","radius":1.0},"openness":"open"})",
      R"({"kind":"raw","name":"cross_sum_lt_2"})"};
  for (const char* text : texts) {
    const SetRep s = set_from_json(json::parse(text));
    CHECK(to_json(set_from_json(to_json(s))) == to_json(s));
  }

  CHECK_THROWS_AS(set_from_json(json::parse(R"({"kind":"raw","name":"nope"})")),
                  invalid_value_error);
  CHECK_THROWS_AS(
      set_from_json(json::parse(
          R"({"kind":"idempotent_pair","b1":{"kind":"ball","norm":"l2","radius":0.0},
              "b2":{"kind":"ball","norm":"l2","radius":1.0},"openness":"open"})")),
      parse_error);
}

TEST_CASE("family schemas round trip") {
  const json fam = json::parse(R"({
    "seminorms": [
      {"kind":"knorm","n1":"l2","n2":"linf"},
      {"kind":"component_abs","which":2,"coord":1},
      {"kind":"scaled","base":{"kind":"knorm"},"factor":{"e1":2.0,"e2":0.0}},
      {"kind":"from_gauge","set":{"kind":"knorm_ball","radius":{"e1":1.0,"e2":1.0},
                                  "openness":"closed"}}
    ]})");
  const SeminormFamily f = family_from_json(fam);
  CHECK(f.size() == 4);
  CHECK(to_json(family_from_json(to_json(f))) == to_json(f));
  CHECK_THROWS_AS(family_from_json(json::parse(R"({"seminorms":[{"kind":"wat"}]})")),
                  parse_error);
}

TEST_CASE("parsed and rebuilt sets agree on membership") {
  SplitRng rng(91);
  const SetRep s = set_from_json(json::parse(
      R"({"kind":"idempotent_pair","b1":{"kind":"ball","norm":"l1","radius":1.5},
          "b2":{"kind":"modslab","constraints":[{"f":[[1.0,0.0],[0.0,-1.0]],"c":1.0},
                                                {"f":[[0.5,0.5],[1.0,0.0]],"c":2.0}]},
          "openness":"closed"})"));
  const SetRep back = set_from_json(to_json(s));
  for (int i = 0; i < 2000; ++i) {
    CVector u1(2), u2(2);
    for (auto* u : {&u1, &u2})
      for (Complex& c : *u) c = rng.normal_complex(1.2);
    const ModuleVector x = ModuleVector::from_parts(u1, u2);
    CHECK(contains(s, x) == contains(back, x));
  }
}
