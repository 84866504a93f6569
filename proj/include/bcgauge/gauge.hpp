#pragma once

#include <cmath>
#include <limits>

#include "bcgauge/set_checks.hpp"
#include "bcgauge/sets.hpp"

namespace bcg {

enum class GaugeMethod { closed_form, bisection };

struct GaugeResult {
  Hyperbolic value;
  GaugeMethod method;
  double tol = 0.0;  // half-width of the bisection bracket; 0 for closed form
};

/// Classical Minkowski gauge of a component body: nonnegative, positively
/// homogeneous, subadditive.  Zero radii and empty slabs give the two
/// degenerate answers (infinity off the origin, zero everywhere).
inline double gauge_component(const BodyRep& b, std::span<const Complex> u) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return b.visit([&](const auto& r) -> double {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, BodyRep::Ball>) {
      const double m = component_norm(r.norm, u);
      if (r.radius > 0.0) return m / r.radius;
      return m == 0.0 ? 0.0 : inf;
    } else if constexpr (std::is_same_v<T, BodyRep::ModSlab>) {
      double g = 0.0;
      for (const SlabConstraint& c : r.constraints) {
        if (c.functional.size() != u.size())
          throw dimension_error("slab constraint dimension disagrees with point");
        const double m = std::abs(linalg::inner(c.functional, u));
        if (c.bound > 0.0) {
          g = std::max(g, m / c.bound);
        } else if (m != 0.0) {
          return inf;
        }
      }
      return g;
    } else {
      double g = 0.0;
      for (const BodyRep& p : r.parts) g = std::max(g, gauge_component(p, u));
      return g;
    }
  });
}

/// q_B(x) as the componentwise pair of classical gauges of the component
/// bodies.  The decomposition is validated against gauge_bisect; if the two
/// ever disagree beyond tolerance the closed form is the suspect.
inline GaugeResult gauge(const SetRep& s, const ModuleVector& x) {
  if (!s.is_structural()) throw detail::raw_unsupported("gauge");
  if (auto d = set_required_dim(s); d && *d != x.dim())
    throw dimension_error("set and point dimensions disagree");
  const CVector x1 = x.part1(), x2 = x.part2();
  const double g1 = gauge_component(component_body(s, 1), x1);
  const double g2 = gauge_component(component_body(s, 2), x2);
  return {Hyperbolic(g1, g2), GaugeMethod::closed_form, 0.0};
}

namespace detail {

/// Membership predicate "e_l x lies in alpha * (e_l S)", realized by testing
/// the e_l-supported vector with component x_l / alpha.
inline bool section_scaled_member(const SetRep& s, const CVector& xl, int l,
                                  double alpha, std::size_t dim) {
  CVector scaled(xl.size());
  for (std::size_t c = 0; c < xl.size(); ++c) scaled[c] = xl[c] / alpha;
  const CVector zero(dim);
  return contains(s, l == 1 ? ModuleVector::from_parts(scaled, zero)
                            : ModuleVector::from_parts(zero, scaled));
}

inline bool cvec_is_zero(const CVector& u) {
  for (Complex c : u)
    if (c != Complex{}) return false;
  return true;
}

}  // namespace detail

/// Independent oracle for the gauge: per idempotent component, brackets the
/// monotone membership predicate by doubling from 1 and bisects to width
/// `tol`.  Throws not_absorbed_error when no bracket exists below 2^64.
inline GaugeResult gauge_bisect(const SetRep& s, const ModuleVector& x,
                                double tol = 1e-8) {
  if (auto d = set_required_dim(s); d && *d != x.dim())
    throw dimension_error("set and point dimensions disagree");
  const std::size_t dim = x.dim();
  double alpha[2];
  for (int l : {1, 2}) {
    const CVector xl = x.part(l);
    if (detail::cvec_is_zero(xl)) {
      alpha[l - 1] = 0.0;
      continue;
    }
    double lo = 0.0, hi = 1.0;
    if (detail::section_scaled_member(s, xl, l, hi, dim)) {
      lo = 0.0;
    } else {
      const double cap = std::ldexp(1.0, 64);
      while (!detail::section_scaled_member(s, xl, l, hi, dim)) {
        hi *= 2.0;
        if (hi > cap)
          throw not_absorbed_error("set does not absorb the point's component " +
                                   std::to_string(l));
      }
      lo = hi / 2.0;
    }
    int guard = 0;
    while (hi - lo > tol && ++guard < 200) {
      const double mid = 0.5 * (lo + hi);
      if (detail::section_scaled_member(s, xl, l, mid, dim)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    alpha[l - 1] = 0.5 * (lo + hi);
  }
  return {Hyperbolic(alpha[0], alpha[1]), GaugeMethod::bisection, tol};
}

/// A_B (strict) or C_B (nonstrict): the gauge unit sets, realized over the
/// same component bodies with the openness flag set accordingly.
enum class UnitSetKind { strict, nonstrict };

inline SetRep unit_set(const SetRep& s, UnitSetKind kind) {
  return with_openness(s, kind == UnitSetKind::strict ? Openness::open
                                                      : Openness::closed);
}

/// Verifies the inclusion chain  B^o < A_B < B < C_B < closure(B)  on
/// sampled points, comparing flag-based membership against gauge values with
/// an absolute boundary slack.  For an open set additionally B = A_B, for a
/// closed set B = C_B, skipping points within slack of the unit boundary.
inline SampledOutcome gauge_chain_check(const SetRep& s, long samples,
                                        std::uint64_t seed, std::size_t dim = 0,
                                        double slack = 1e-9) {
  if (!s.is_structural()) throw detail::raw_unsupported("gauge_chain_check");
  if (auto d = set_required_dim(s)) dim = *d;
  if (dim == 0) dim = 1;
  SplitRng rng(seed);
  SampledOutcome out;
  const SetRep inter = interior(s), closed = closure(s);
  const bool is_open = openness_of(s) == Openness::open;

  const auto record_violation = [&](const ModuleVector& x, double amount) {
    out.pass = false;
    out.max_violation = std::max(out.max_violation, amount);
    if (!out.witness)
      out.witness = SetWitness{x, std::nullopt, std::nullopt, std::nullopt, x};
  };

  for (long i = 0; i < samples; ++i) {
    ModuleVector x = ModuleVector::zero(dim);
    switch (i % 3) {
      case 0:
        x = sampling::sample_member(closed, dim, rng);
        break;
      case 1: {
        CVector u1 = sampling::gaussian_cvec(rng, dim, 1.5);
        CVector u2 = sampling::gaussian_cvec(rng, dim, 1.5);
        x = ModuleVector::from_parts(u1, u2);
        break;
      }
      default: {
        // a member pushed toward the unit boundary in each component
        x = sampling::sample_member(closed, dim, rng);
        const Hyperbolic g = gauge(s, x).value;
        const double s1 = g.a1() > 1e-9 ? 1.0 / g.a1() : 1.0;
        const double s2 = g.a2() > 1e-9 ? 1.0 / g.a2() : 1.0;
        x = scalar_mul(Hyperbolic(s1, s2), x);
        break;
      }
    }
    ++out.samples_run;

    const Hyperbolic g = gauge(s, x).value;
    const bool in_interior = contains(inter, x);
    const bool in_set = contains(s, x);
    const bool in_closure = contains(closed, x);
    const bool in_strict = lt_strict(g, Hyperbolic::one());      // A_B
    const bool in_nonstrict = leq(g, Hyperbolic::one());         // C_B
    const double d1 = g.a1() - 1.0, d2 = g.a2() - 1.0;

    // B^o subset A_B: an interior point's gauge must not clearly exceed 1.
    if (in_interior && (d1 > slack || d2 > slack))
      record_violation(x, std::max(d1, d2));
    // A_B subset B.
    if (in_strict && !contains(s, x, slack))
      record_violation(x, membership_margin(s, x));
    // B subset C_B.
    if (in_set && (d1 > slack || d2 > slack)) record_violation(x, std::max(d1, d2));
    // C_B subset closure(B).
    if (in_nonstrict && !contains(closed, x, slack))
      record_violation(x, membership_margin(closed, x));

    // Pointwise equalities away from the boundary band.
    const bool ambiguous = std::fabs(d1) <= slack || std::fabs(d2) <= slack;
    if (!ambiguous) {
      if (is_open && in_set != in_strict) record_violation(x, 1.0);
      if (!is_open && in_set != in_nonstrict) record_violation(x, 1.0);
      if (in_interior && !in_set) record_violation(x, 1.0);
      if (in_set && !in_closure) record_violation(x, 1.0);
    }
  }
  return out;
}

/// Componentwise lower bound on the gauge in terms of the l2 dnorm:
/// gauge(S, x)_l >= c_l * ||x_l||_2 with c_l = 1 / circumradius.  Zero in a
/// component means no structural bound (unbounded body).
inline Hyperbolic separation_constant(const SetRep& s, std::size_t dim) {
  if (!s.is_structural()) throw detail::raw_unsupported("separation_constant");
  double c[2];
  for (int l : {1, 2}) {
    const double r = body_circumradius_l2(component_body(s, l), dim);
    c[l - 1] = std::isfinite(r) && r > 0.0 ? 1.0 / r : 0.0;
  }
  return {c[0], c[1]};
}

}  // namespace bcg
