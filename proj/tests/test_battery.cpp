#include <catch2/catch_amalgamated.hpp>

#include "bcgauge/battery.hpp"

using namespace bcg;

namespace {

BatteryConfig small_config(std::uint64_t seed = 42) {
  BatteryConfig cfg;
  cfg.seed = seed;
  cfg.samples = 250;
  return cfg;
}

}  // namespace

TEST_CASE("registry shape") {
  const auto& reg = check_registry();
  long scalar = 0, expect = 0;
  for (const CheckDef& d : reg) {
    if (d.suite == "scalar") ++scalar;
    if (d.expect_witness) ++expect;
  }
  CHECK(scalar >= 8);
  CHECK(expect >= 4);  // the counterexample sets each drive more than one check

  // ids are unique
  for (std::size_t i = 0; i < reg.size(); ++i)
    for (std::size_t j = i + 1; j < reg.size(); ++j)
      CHECK(reg[i].id != reg[j].id);
}

TEST_CASE("all suites pass at a small budget") {
  for (const char* suite : {"scalar", "sets", "gauge", "seminorm", "metric"}) {
    const auto records = run_battery(small_config(), suite);
    INFO(suite);
    CHECK(records.size() > 0);
    CHECK(count_failures(records) == 0);
  }
}

TEST_CASE("counterexample checks carry their witnesses") {
  const auto records = run_battery(small_config(), "sets");
  bool found_convex = false, found_section = false;
  for (const ReportRecord& r : records) {
    if (r.check_id == "sets.cross_sum_not_bc_convex") {
      found_convex = true;
      CHECK(r.status == "pass");
      CHECK(r.expect_witness);
      REQUIRE_FALSE(r.witness.is_null());
      CHECK(r.witness.at("lambda").at("e1").get<double>() == 1.0);
      CHECK(r.witness.at("lambda").at("e2").get<double>() == 0.0);
    }
    if (r.check_id == "sets.union_set_e1_section_escapes") {
      found_section = true;
      CHECK(r.status == "pass");
      REQUIRE_FALSE(r.witness.is_null());
    }
  }
  CHECK(found_convex);
  CHECK(found_section);
}

TEST_CASE("reports are deterministic for one seed") {
  const auto a = run_battery(small_config(11), "all");
  const auto b = run_battery(small_config(11), "all");
  CHECK(render_report_json(a, false) == render_report_json(b, false));
  CHECK(report_body_hash(a) == report_body_hash(b));
}

TEST_CASE("records appear once per configured check in registry order") {
  const auto records = run_battery(small_config(), "all");
  const auto& reg = check_registry();
  REQUIRE(records.size() == reg.size());
  for (std::size_t i = 0; i < reg.size(); ++i)
    CHECK(records[i].check_id == reg[i].id);
}

TEST_CASE("report rendering") {
  const auto records = run_battery(small_config(), "metric");
  const std::string body = render_report_json(records);
  // one JSON object per line, last line is the summary
  std::size_t lines = 0;
  std::size_t pos = 0;
  while ((pos = body.find('\n', pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  CHECK(lines == records.size() + 1);
  const std::string last = body.substr(body.rfind('\n', body.size() - 2) + 1);
  const json summary = json::parse(last);
  CHECK(summary.at("summary").get<bool>());
  CHECK(summary.at("failures").get<long>() == 0);

  const std::string text = render_report_text(records);
  CHECK(text.find("[pass] metric.axioms_knorm_family") != std::string::npos);
}
