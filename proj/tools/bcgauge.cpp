// Command-line front end: expression evaluation over the bicomplex ring,
// gauge and metric queries against JSON set/family files, and the seeded
// property-check battery with JSON-lines reports.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bcgauge/bcgauge.hpp"

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitNullCone = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitNotAbsorbed = 4;
constexpr int kExitInputMismatch = 5;
constexpr int kExitParseError = 64;

bcg::json parse_json_text(const std::string& text) {
  try {
    return bcg::json::parse(text);
  } catch (const bcg::json::exception& e) {
    throw bcg::parse_error(std::string("invalid JSON: ") + e.what(), 0);
  }
}

bcg::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bcg::parse_error("cannot open file: " + path, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

/// A point argument is a JSON file path, inline JSON, or a scalar expression
/// (yielding a 1-dimensional vector).
bcg::ModuleVector parse_point(const std::string& arg) {
  if (std::filesystem::exists(arg)) return bcg::vector_from_json(load_json_file(arg));
  const std::size_t first = arg.find_first_not_of(" \t");
  if (first != std::string::npos && arg[first] == '{')
    return bcg::vector_from_json(parse_json_text(arg));
  return bcg::ModuleVector::scalar(bcg::eval_expression(arg));
}

int cmd_eval(const std::string& expr, const std::string& format) {
  const bcg::Bicomplex value = bcg::eval_expression(expr);
  const bcg::Bicomplex mi = bcg::modulus_squared(value, bcg::ModulusKind::i_sq);
  const bcg::Bicomplex mj = bcg::modulus_squared(value, bcg::ModulusKind::j_sq);
  const bcg::Bicomplex mk = bcg::modulus_squared(value, bcg::ModulusKind::k_sq);

  if (format == "json") {
    bcg::json out{{"value", bcg::to_json(value)},
                  {"idempotent", {{"z1", bcg::to_json(value.z1())},
                                  {"z2", bcg::to_json(value.z2())}}},
                  {"euclid_norm", bcg::euclid_norm(value)},
                  {"knorm", bcg::to_json(bcg::knorm(value))},
                  {"modulus_sq_i", bcg::to_json(mi)},
                  {"modulus_sq_j", bcg::to_json(mj)},
                  {"modulus_sq_k", bcg::to_json(bcg::as_hyperbolic(mk))}};
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "cartesian:  " << bcg::to_string(value) << "\n";
  std::cout << "idempotent: " << bcg::to_idempotent_string(value) << "\n";
  if (bcg::is_hyperbolic(value))
    std::cout << "hyperbolic: " << bcg::to_string(bcg::as_hyperbolic(value)) << "\n";
  std::cout << "|Z|^2_i:    " << bcg::to_string(mi.w1()) << "\n";
  std::cout << "|Z|^2_j:    " << bcg::to_string(mj) << "\n";
  std::cout << "|Z|^2_k:    " << bcg::to_string(bcg::as_hyperbolic(mk)) << "\n";
  std::cout << "|Z|_k:      " << bcg::to_string(bcg::knorm(value)) << "\n";
  std::cout << "|Z|:        " << bcg::fmt_real(bcg::euclid_norm(value)) << "\n";
  return 0;
}

int cmd_gauge(const std::string& set_file, const std::string& point_arg,
              double bisect_tol, const std::string& method,
              const std::string& format) {
  const bcg::SetRep set = bcg::set_from_json(load_json_file(set_file));
  const bcg::ModuleVector x = parse_point(point_arg);

  std::optional<bcg::GaugeResult> closed, bisect;
  if (method == "closed" || method == "both") closed = bcg::gauge(set, x);
  if (method == "bisect" || method == "both")
    bisect = bcg::gauge_bisect(set, x, bisect_tol);

  if (format == "json") {
    bcg::json out = bcg::json::object();
    if (closed) out["closed_form"] = bcg::to_json(*closed);
    if (bisect) out["bisection"] = bcg::to_json(*bisect);
    if (closed && bisect) {
      const bcg::Hyperbolic d = closed->value - bisect->value;
      out["difference"] = bcg::json{{"e1", d.a1()}, {"e2", d.a2()}};
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (closed) std::cout << "closed_form: " << bcg::to_string(closed->value) << "\n";
  if (bisect)
    std::cout << "bisection:   " << bcg::to_string(bisect->value)
              << "   (tol " << bcg::fmt_real(bisect->tol) << ")\n";
  if (closed && bisect) {
    const bcg::Hyperbolic d = closed->value - bisect->value;
    std::cout << "difference:  " << bcg::to_string(d) << "\n";
  }
  return 0;
}

int cmd_metric(const std::string& family_file, const std::string& x_arg,
               const std::string& y_arg, int truncation, const std::string& format) {
  const bcg::SeminormFamily family =
      bcg::family_from_json(load_json_file(family_file));
  const bcg::ModuleVector x = parse_point(x_arg);
  const bcg::ModuleVector y = parse_point(y_arg);
  const bcg::Hyperbolic d = bcg::dmetric(family, x, y, truncation);
  const double tail = std::ldexp(1.0, -truncation);

  if (format == "json") {
    bcg::json out{{"distance", bcg::to_json(d)},
                  {"N", truncation},
                  {"tail_bound", tail}};
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "d(x, y) = " << bcg::to_string(d) << "\n";
  std::cout << "partial sum through N=" << truncation
            << ", tail bound <= " << bcg::fmt_real(tail) << "\n";
  return 0;
}

int cmd_check(const bcg::BatteryConfig& cfg, const std::string& suite,
              const std::string& format) {
  const std::vector<bcg::ReportRecord> records = bcg::run_battery(cfg, suite);
  if (format == "json") {
    std::cout << bcg::render_report_json(records);
  } else {
    std::cout << bcg::render_report_text(records);
  }
  return bcg::count_failures(records) == 0 ? 0 : kExitCheckFailure;
}

int cmd_decompose(const std::string& vector_arg, const std::string& set_file,
                  const std::string& format) {
  if (!vector_arg.empty()) {
    const bcg::ModuleVector x = parse_point(vector_arg);
    const bcg::CVector x1 = x.part1(), x2 = x.part2();
    if (format == "json") {
      bcg::json p1 = bcg::json::array(), p2 = bcg::json::array();
      for (bcg::Complex c : x1) p1.push_back(bcg::to_json(c));
      for (bcg::Complex c : x2) p2.push_back(bcg::to_json(c));
      std::cout << bcg::json{{"dim", x.dim()}, {"x1", p1}, {"x2", p2}}.dump() << "\n";
      return 0;
    }
    std::cout << "x  = " << bcg::to_string(x) << "\n";
    std::string s1 = "(", s2 = "(";
    for (std::size_t c = 0; c < x.dim(); ++c) {
      if (c) {
        s1 += ", ";
        s2 += ", ";
      }
      s1 += bcg::to_string(x1[c]);
      s2 += bcg::to_string(x2[c]);
    }
    std::cout << "x1 = " << s1 << ")\n";
    std::cout << "x2 = " << s2 << ")\n";
    return 0;
  }
  const bcg::SetRep set = bcg::set_from_json(load_json_file(set_file));
  const bcg::json out{{"b1", bcg::to_json(bcg::component_body(set, 1))},
                      {"b2", bcg::to_json(bcg::component_body(set, 2))},
                      {"openness", bcg::to_string(bcg::openness_of(set))}};
  std::cout << out.dump(format == "json" ? -1 : 2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bicomplex/hyperbolic numerics: gauges, seminorms, D-metrics"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a bicomplex expression");
  std::string expr;
  eval->add_option("expr", expr, "expression, e.g. \"knorm([3|4])\"")->required();

  // gauge
  auto* gaugecmd = app.add_subcommand("gauge", "Minkowski gauge of a set at a point");
  std::string set_file, point_arg, method = "both";
  double bisect_tol = 1e-8;
  gaugecmd->add_option("set", set_file, "set JSON file")->required();
  gaugecmd->add_option("point", point_arg, "point: expression, JSON or file")
      ->required();
  gaugecmd->add_option("--bisect-tol", bisect_tol, "bisection tolerance")
      ->capture_default_str();
  gaugecmd->add_option("--method", method, "which gauge route to run")
      ->check(CLI::IsMember({"both", "closed", "bisect"}))
      ->capture_default_str();

  // metric
  auto* metriccmd = app.add_subcommand("metric", "family-induced D-metric");
  std::string family_file, x_arg, y_arg;
  int truncation = 64;
  metriccmd->add_option("family", family_file, "seminorm family JSON file")->required();
  metriccmd->add_option("x", x_arg, "first point")->required();
  metriccmd->add_option("y", y_arg, "second point")->required();
  metriccmd->add_option("--N", truncation, "series truncation")->capture_default_str();

  // check
  auto* checkcmd = app.add_subcommand("check", "run the property-check battery");
  bcg::BatteryConfig cfg;
  std::string suite = "all";
  checkcmd->add_option("--suite", suite, "which suite to run")
      ->check(CLI::IsMember({"all", "scalar", "sets", "gauge", "seminorm", "metric"}))
      ->capture_default_str();
  checkcmd->add_option("--seed", cfg.seed, "battery seed")
      ->envname("BCGAUGE_SEED")
      ->capture_default_str();
  checkcmd->add_option("--samples", cfg.samples, "samples per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  checkcmd->add_option("--dim", cfg.dimension, "module dimension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  checkcmd->add_option("--tol", cfg.tol_rel, "relative tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  checkcmd->add_option("--bisect-tol", cfg.bisect_tol, "bisection tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // decompose
  auto* decomp = app.add_subcommand("decompose", "idempotent split of a vector or set");
  std::string dec_vector, dec_set;
  decomp->add_option("--vector", dec_vector, "vector: expression, JSON or file");
  decomp->add_option("--set", dec_set, "set JSON file");

  for (CLI::App* sub : app.get_subcommands({}))
    sub->fallthrough();  // lets the global --format follow the subcommand

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParseError;
  }

  try {
    if (*eval) return cmd_eval(expr, format);
    if (*gaugecmd) return cmd_gauge(set_file, point_arg, bisect_tol, method, format);
    if (*metriccmd) return cmd_metric(family_file, x_arg, y_arg, truncation, format);
    if (*checkcmd) return cmd_check(cfg, suite, format);
    if (*decomp) {
      if (dec_vector.empty() == dec_set.empty()) {
        std::cerr << "decompose needs exactly one of --vector or --set\n";
        return kExitParseError;
      }
      return cmd_decompose(dec_vector, dec_set, format);
    }
  } catch (const bcg::null_cone_error& e) {
    std::cerr << "error: null cone: " << e.what() << "\n";
    return kExitNullCone;
  } catch (const bcg::unsupported_error& e) {
    std::cerr << "error: unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const bcg::not_absorbed_error& e) {
    std::cerr << "error: not absorbed: " << e.what() << "\n";
    return kExitNotAbsorbed;
  } catch (const bcg::dimension_error& e) {
    std::cerr << "error: input mismatch: " << e.what() << "\n";
    return kExitInputMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitParseError;
}
