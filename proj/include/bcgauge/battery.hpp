#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "bcgauge/json_io.hpp"

namespace bcg {

struct BatteryConfig {
  std::uint64_t seed = 42;
  long samples = 10000;
  double tol_rel = 1e-12;
  double tol_slack = 1e-9;
  double bisect_tol = 1e-8;
  std::size_t dimension = 2;
};

/// Raw outcome of one property run.  `pass` refers to the property itself;
/// counterexample checks are scored by the runner via `expect_witness`.
struct CheckResult {
  bool pass = true;
  json witness;  // null when no witness
  long samples_run = 0;
  double max_violation = 0.0;
  bool unsupported = false;
};

struct CheckDef {
  std::string id;
  std::string suite;
  bool expect_witness;
  std::function<CheckResult(const BatteryConfig&, std::uint64_t seed)> run;
};

struct ReportRecord {
  std::string check_id;
  std::string status;  // pass | fail | unsupported
  bool expect_witness = false;
  json witness;
  long samples_run = 0;
  double max_violation = 0.0;
  double elapsed_ms = 0.0;
};

// ---------------------------------------------------------------------------
// Witness serialization
// ---------------------------------------------------------------------------

inline json to_json(const SetWitness& w) {
  json out = json::object();
  if (w.x) out["x"] = to_json(*w.x);
  if (w.y) out["y"] = to_json(*w.y);
  if (w.lambda_h) out["lambda"] = to_json(*w.lambda_h);
  if (w.lambda) out["lambda"] = to_json(*w.lambda);
  if (w.point) out["point"] = to_json(*w.point);
  return out;
}

inline json to_json(const PropertyWitness& w) {
  json out = json::object();
  out["what"] = w.what;
  if (w.x) out["x"] = to_json(*w.x);
  if (w.y) out["y"] = to_json(*w.y);
  if (w.z) out["z"] = to_json(*w.z);
  if (w.lambda) out["lambda"] = to_json(*w.lambda);
  if (w.violation != 0.0) out["violation"] = w.violation;
  return out;
}

inline CheckResult from_outcome(const SampledOutcome& o) {
  CheckResult r;
  r.pass = o.pass;
  r.samples_run = o.samples_run;
  r.max_violation = o.max_violation;
  if (o.witness) r.witness = to_json(*o.witness);
  return r;
}

inline CheckResult from_outcome(const PropertyOutcome& o) {
  CheckResult r;
  r.pass = o.pass;
  r.samples_run = o.samples_run;
  r.max_violation = o.max_violation;
  if (o.witness) r.witness = to_json(*o.witness);
  return r;
}

// ---------------------------------------------------------------------------
// Shared fixtures
// ---------------------------------------------------------------------------

namespace battery_detail {

inline Bicomplex random_bicomplex(SplitRng& rng, double sigma = 1.0) {
  return {rng.normal_complex(sigma), rng.normal_complex(sigma)};
}

inline Hyperbolic random_dplus(SplitRng& rng, double hi = 2.0) {
  return {rng.uniform(0.0, hi), rng.uniform(0.0, hi)};
}

/// A small accumulator for hand-rolled checks.
struct Acc {
  CheckResult r;
  void sample() { ++r.samples_run; }
  void violation(double v) { r.max_violation = std::max(r.max_violation, v); }
  void fail(json w, double v = 1.0) {
    r.pass = false;
    violation(v);
    if (r.witness.is_null()) r.witness = std::move(w);
  }
  bool ok() const { return r.pass; }
};

inline bool close_rel(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

inline bool close_rel(Hyperbolic a, Hyperbolic b, double tol) {
  return close_rel(a.a1(), b.a1(), tol) && close_rel(a.a2(), b.a2(), tol);
}

inline double rel_err(Hyperbolic a, Hyperbolic b) {
  double e = 0.0;
  detail::close_rel(a, b, 0.0, &e);
  return e;
}

inline BodyRep random_ball(SplitRng& rng) {
  static const ComponentNorm kinds[] = {ComponentNorm::l2, ComponentNorm::l1,
                                        ComponentNorm::linf};
  return BodyRep::ball(kinds[rng.uniform_index(3)], rng.uniform(0.5, 2.5));
}

inline BodyRep random_slab(SplitRng& rng, std::size_t dim, bool spanning = true) {
  std::vector<SlabConstraint> cs;
  if (spanning) {
    for (std::size_t c = 0; c < dim; ++c) {
      CVector f(dim);
      f[c] = 1.0;
      cs.push_back(SlabConstraint{f, rng.uniform(0.5, 2.0)});
    }
  }
  const std::size_t extra = 1 + rng.uniform_index(2);
  for (std::size_t e = 0; e < extra; ++e) {
    CVector f(dim);
    for (Complex& v : f) v = rng.normal_complex();
    cs.push_back(SlabConstraint{std::move(f), rng.uniform(0.5, 2.0)});
  }
  return BodyRep::slab(std::move(cs));
}

/// Randomized structural sets cycling over the four archetypes the gauge
/// criteria call for: ball pairs, slab pairs, intersections, knorm balls.
inline SetRep random_structural_set(SplitRng& rng, std::size_t dim, int archetype) {
  const Openness o = rng.next_u64() % 2 ? Openness::open : Openness::closed;
  switch (archetype % 4) {
    case 0:
      return SetRep::pair(random_ball(rng), random_ball(rng), o);
    case 1:
      return SetRep::pair(random_slab(rng, dim), random_slab(rng, dim), o);
    case 2:
      return SetRep::pair(
          BodyRep::intersection({random_ball(rng), random_slab(rng, dim)}),
          BodyRep::intersection({random_slab(rng, dim), random_ball(rng)}), o);
    default:
      return SetRep::knorm_ball(Hyperbolic(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0)),
                                o);
  }
}

inline ModuleVector random_vector(SplitRng& rng, std::size_t dim, double sigma = 1.0) {
  return ModuleVector::from_parts(sampling::gaussian_cvec(rng, dim, sigma),
                                  sampling::gaussian_cvec(rng, dim, sigma));
}

/// Named seminorm variants exercised by the seminorm suite.
inline std::vector<std::pair<std::string, DSeminorm>> seminorm_variants(
    std::size_t dim) {
  std::vector<std::pair<std::string, DSeminorm>> out;
  out.emplace_back("knorm_l2", DSeminorm::knorm());
  out.emplace_back("knorm_l1_linf",
                   DSeminorm::knorm(ComponentNorm::l1, ComponentNorm::linf));
  out.emplace_back("component_abs_1", DSeminorm::component_abs(1, 0));
  out.emplace_back("component_abs_2", DSeminorm::component_abs(2, dim - 1));
  out.emplace_back("from_gauge",
                   DSeminorm::from_gauge(SetRep::pair(
                       BodyRep::ball(ComponentNorm::l2, 2.0),
                       BodyRep::ball(ComponentNorm::l1, 0.5), Openness::closed)));
  out.emplace_back("scaled", DSeminorm::scaled(DSeminorm::knorm(), Hyperbolic(2.0, 3.0)));
  out.emplace_back("scaled_degenerate",
                   DSeminorm::scaled(DSeminorm::knorm(), Hyperbolic(1.0, 0.0)));
  std::vector<DSeminorm> items;
  for (std::size_t c = 0; c < dim; ++c) {
    items.push_back(DSeminorm::component_abs(1, c));
    items.push_back(DSeminorm::component_abs(2, c));
  }
  out.emplace_back("sup", DSeminorm::sup(std::move(items)));
  return out;
}

inline SeminormFamily coverage_family(std::size_t dim) {
  std::vector<DSeminorm> ps;
  for (std::size_t c = 0; c < dim; ++c) ps.push_back(DSeminorm::component_abs(1, c));
  for (std::size_t c = 0; c < dim; ++c) ps.push_back(DSeminorm::component_abs(2, c));
  return SeminormFamily(std::move(ps), true);
}

}  // namespace battery_detail

// ---------------------------------------------------------------------------
// The check registry
// ---------------------------------------------------------------------------

const std::vector<CheckDef>& check_registry();

inline std::vector<ReportRecord> run_battery(const BatteryConfig& cfg,
                                             const std::string& suite) {
  std::vector<ReportRecord> records;
  const auto& registry = check_registry();
  for (std::size_t i = 0; i < registry.size(); ++i) {
    const CheckDef& def = registry[i];
    if (suite != "all" && def.suite != suite) continue;
    const std::uint64_t seed = SplitRng(cfg.seed).split(i + 1).next_u64();
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult res;
    try {
      res = def.run(cfg, seed);
    } catch (const unsupported_error& e) {
      res.unsupported = true;
      res.witness = json{{"error", e.what()}};
    }
    const auto t1 = std::chrono::steady_clock::now();

    ReportRecord rec;
    rec.check_id = def.id;
    rec.expect_witness = def.expect_witness;
    rec.witness = res.witness;
    rec.samples_run = res.samples_run;
    rec.max_violation = res.max_violation;
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (res.unsupported) {
      rec.status = "unsupported";
    } else if (def.expect_witness) {
      rec.status = !res.pass && !res.witness.is_null() ? "pass" : "fail";
    } else {
      rec.status = res.pass ? "pass" : "fail";
    }
    records.push_back(std::move(rec));
  }
  return records;
}

// ---------------------------------------------------------------------------
// Report rendering: JSON-lines records plus a summary line.  Timing fields
// are excluded from the hashed body so reruns with one seed hash alike.
// ---------------------------------------------------------------------------

inline json record_json(const ReportRecord& r, bool with_elapsed) {
  json out{{"check_id", r.check_id},
           {"status", r.status},
           {"expect_witness", r.expect_witness},
           {"samples_run", r.samples_run},
           {"max_violation", r.max_violation}};
  if (!r.witness.is_null()) out["witness"] = r.witness;
  if (with_elapsed) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

inline std::uint64_t report_body_hash(const std::vector<ReportRecord>& records) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  const auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
  };
  for (const ReportRecord& r : records) {
    mix(record_json(r, false).dump());
    mix("\n");
  }
  return h;
}

inline long count_failures(const std::vector<ReportRecord>& records) {
  long n = 0;
  for (const ReportRecord& r : records)
    if (r.status != "pass") ++n;
  return n;
}

inline std::string render_report_json(const std::vector<ReportRecord>& records,
                                      bool with_elapsed = true) {
  std::string out;
  double total_ms = 0.0;
  for (const ReportRecord& r : records) {
    out += record_json(r, with_elapsed).dump();
    out += '\n';
    total_ms += r.elapsed_ms;
  }
  char hash[32];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(report_body_hash(records)));
  json summary{{"summary", true},
               {"checks", records.size()},
               {"failures", count_failures(records)},
               {"body_hash", hash}};
  if (with_elapsed) summary["elapsed_ms"] = total_ms;
  out += summary.dump();
  out += '\n';
  return out;
}

inline std::string render_report_text(const std::vector<ReportRecord>& records) {
  std::string out;
  for (const ReportRecord& r : records) {
    out += "[" + r.status + "] " + r.check_id;
    out += " (samples=" + std::to_string(r.samples_run);
    out += ", max_violation=" + fmt_real(r.max_violation) + ")";
    if (r.status == "fail" && !r.witness.is_null())
      out += "\n    witness: " + r.witness.dump();
    out += '\n';
  }
  out += std::to_string(records.size()) + " checks, " +
         std::to_string(count_failures(records)) + " failures\n";
  return out;
}

}  // namespace bcg

#include "bcgauge/battery_checks.hpp"
