// Acceptance suite: runs each acceptance criterion at its stated budget and
// tolerance and prints one pass/fail line per criterion.  Exits nonzero if
// any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <regex>
#include <string>

#include "bcgauge/bcgauge.hpp"

using namespace bcg;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int criterion, const std::string& what, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

BatteryConfig config_with_samples(long samples) {
  BatteryConfig cfg;  // tol_rel 1e-12, tol_slack 1e-9, bisect_tol 1e-8, dim 2
  cfg.samples = samples;
  return cfg;
}

std::string run_cli_capture(const std::string& args) {
  const std::string cmd = std::string(BCGAUGE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "";
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

void criterion_1_scalar_battery() {
  Timer timer;
  const BatteryConfig cfg = config_with_samples(100000);
  const bool pass = battery_detail::check_knorm_multiplicative(cfg, 101).pass &&
                    battery_detail::check_euclid_submultiplicative(cfg, 102).pass &&
                    battery_detail::check_knorm_magnitude_identity(cfg, 103).pass &&
                    battery_detail::check_idempotent_roundtrip(cfg, 104).pass;
  const double secs = timer.seconds();
  char detail[128];
  std::snprintf(detail, sizeof(detail), "1e5 pairs x 4 identities, %.2fs", secs);
  report(1, "scalar algebra battery", pass && secs < 5.0, detail);
}

void criterion_2_gauge_oracle() {
  Timer timer;
  BatteryConfig cfg = config_with_samples(2000);  // 200 points x 10 sets
  const CheckResult r = battery_detail::check_gauge_oracle(cfg, 201);
  const double secs = timer.seconds();
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "200 points x 10 sets, max |closed-bisect| = %.3g, %.2fs",
                r.max_violation, secs);
  report(2, "gauge closed form vs bisection oracle", r.pass && secs < 30.0, detail);
}

void criterion_3_gauge_seminorm() {
  const BatteryConfig cfg = config_with_samples(10000);
  const CheckResult sub = battery_detail::check_gauge_subadditive(cfg, 301);
  const CheckResult inv = battery_detail::check_gauge_homogeneous(cfg, 302, false);
  const CheckResult nc = battery_detail::check_gauge_homogeneous(cfg, 303, true);
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "subadd viol %.3g, homog(inv) %.3g, homog(null-cone) %.3g",
                sub.max_violation, inv.max_violation, nc.max_violation);
  report(3, "gauge is a D-seminorm under stratified scalars",
         sub.pass && inv.pass && nc.pass, detail);
}

void criterion_4_gauge_chain() {
  const BatteryConfig cfg = config_with_samples(80000);  // 1e4 per set variant
  const CheckResult chain = battery_detail::check_gauge_chain(cfg, 401);
  const BatteryConfig cfg2 = config_with_samples(10000);
  const CheckResult open_eq =
      battery_detail::check_unit_set_identity(cfg2, 402, Openness::open);
  const CheckResult closed_eq =
      battery_detail::check_unit_set_identity(cfg2, 403, Openness::closed);
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%ld chain samples, zero violations = %s",
                chain.samples_run, chain.pass ? "yes" : "no");
  report(4, "gauge chain inclusions and open/closed equalities",
         chain.pass && open_eq.pass && closed_eq.pass, detail);
}

void criterion_5_counterexamples() {
  const SetRep cross = SetRep::raw("cross_sum_lt_2");
  const SampledOutcome convex = is_bc_convex_sampled(cross, 10000, 501, 1);
  bool witness_ok = !convex.pass && convex.witness.has_value();
  if (witness_ok) {
    const SetWitness& w = *convex.witness;
    witness_ok = w.lambda_h && *w.lambda_h == Hyperbolic::e1() &&
                 w.x->entries()[0].z1() == Complex(1.5, 0.0) &&
                 std::abs(w.x->entries()[0].z2()) == 0.0 &&
                 w.y->entries()[0].z2() == Complex(1.5, 0.0) &&
                 std::abs(w.y->entries()[0].z1()) == 0.0;
  }

  const SetRep uni = SetRep::raw("kball_half_union_one");
  const bool absorbing = is_bc_absorbing_sampled(uni, 10000, 502, 1).pass;
  const SampledOutcome section = component_section_check(uni, 1, 10000, 503, 1);
  const bool escape_ok = !section.pass && section.witness.has_value() &&
                         *section.witness->point ==
                             ModuleVector::scalar(Bicomplex::e1());

  report(5, "counterexample sets reproduced with canonical witnesses",
         witness_ok && absorbing && escape_ok,
         std::string("not-BC-convex witness lambda=e1,x=e1*3/2,y=e2*3/2: ") +
             (witness_ok ? "found" : "missing") +
             "; union set absorbing: " + (absorbing ? "yes" : "no") +
             "; e1*B escapes with witness e1: " + (escape_ok ? "yes" : "no"));
}

void criterion_6_unit_sets() {
  Timer timer;
  const BatteryConfig cfg = config_with_samples(480000);  // 1e4 per sub-check
  const CheckResult r = battery_detail::check_unit_sets_properties(cfg, 601);
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%ld samples across variants, %.2fs",
                r.samples_run, timer.seconds());
  report(6, "seminorm unit sets are BC-convex/balanced/absorbing", r.pass, detail);
}

void criterion_7_metric_battery() {
  const PropertyOutcome constant = metric_axiom_check(
      battery_detail::metric_family_constant(), 10000, 701, 2, 64, 1e-9);
  const PropertyOutcome increasing = metric_axiom_check(
      battery_detail::metric_family_increasing(2), 10000, 702, 2, 64, 1e-9);
  const BatteryConfig cfg = config_with_samples(10000);
  const CheckResult translation =
      battery_detail::check_metric_translation_invariance(cfg, 703);
  const CheckResult sums = battery_detail::check_metric_partial_sums(cfg, 704);
  const CheckResult limit = battery_detail::check_metric_constant_limit(cfg, 705);
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "axioms viol %.3g / %.3g, limit gap %.3g (budget 2^-30)",
                constant.max_violation, increasing.max_violation, limit.max_violation);
  report(7, "D-metric battery at N=64 and the constant-family limit at N=30",
         constant.pass && increasing.pass && translation.pass && sums.pass &&
             limit.pass,
         detail);
}

void criterion_8_topology_compat() {
  const BatteryConfig cfg = config_with_samples(10000);
  const CheckResult a = battery_detail::check_metric_topology_compat(cfg, 801, 0);
  const CheckResult b = battery_detail::check_metric_topology_compat(cfg, 802, 1);
  char detail[96];
  std::snprintf(detail, sizeof(detail), "%ld + %ld pairs, zero violations",
                a.samples_run, b.samples_run);
  report(8, "metric/seminorm topology compatibility for two increasing families",
         a.pass && b.pass, detail);
}

void criterion_9_kernel() {
  const PropertyOutcome k1 = kernel_check(DSeminorm::component_abs(1, 0), 10000, 901, 2,
                                          1e-12);
  const PropertyOutcome k2 = kernel_check(DSeminorm::component_abs(2, 1), 10000, 902, 2,
                                          1e-12);
  char detail[96];
  std::snprintf(detail, sizeof(detail), "max |p| on 2x1e4 combinations = %.3g",
                std::max(k1.max_violation, k2.max_violation));
  report(9, "seminorm kernels are BC-submodules", k1.pass && k2.pass, detail);
}

void criterion_10_determinism() {
  static const std::regex timing(",?\"elapsed_ms\":[-+0-9.eE]+");
  const std::string args = "check --seed 42 --samples 400 --format json";
  const std::string a = std::regex_replace(run_cli_capture(args), timing, "");
  const std::string b = std::regex_replace(run_cli_capture(args), timing, "");
  const bool cli_ok = !a.empty() && a == b;

  const BatteryConfig cfg = config_with_samples(400);
  const std::string r1 = render_report_json(run_battery(cfg, "all"), false);
  const std::string r2 = render_report_json(run_battery(cfg, "all"), false);
  report(10, "fixed-seed reports are byte-identical", cli_ok && r1 == r2,
         cli_ok ? "CLI and in-process bodies match across reruns"
                : "CLI report bodies differ");
}

}  // namespace

int main() {
  criterion_1_scalar_battery();
  criterion_2_gauge_oracle();
  criterion_3_gauge_seminorm();
  criterion_4_gauge_chain();
  criterion_5_counterexamples();
  criterion_6_unit_sets();
  criterion_7_metric_battery();
  criterion_8_topology_compat();
  criterion_9_kernel();
  criterion_10_determinism();

  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
