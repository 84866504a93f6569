#pragma once

#include <optional>
#include <vector>

#include "bcgauge/rng.hpp"
#include "bcgauge/sets.hpp"

namespace bcg {

/// Witness of a failed sampled set property; fields are filled per check.
struct SetWitness {
  std::optional<ModuleVector> x;
  std::optional<ModuleVector> y;
  std::optional<Hyperbolic> lambda_h;
  std::optional<Bicomplex> lambda;
  std::optional<ModuleVector> point;  // the offending combination
};

struct SampledOutcome {
  bool pass = true;
  long samples_run = 0;
  double max_violation = 0.0;
  std::optional<SetWitness> witness;
};

/// Signed margin of x relative to the defining inequalities of S: positive
/// means outside by that amount.  Raw sets only report the sign.
inline double membership_margin(const SetRep& s, const ModuleVector& x) {
  return s.visit([&](const auto& r) -> double {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, SetRep::Raw>) {
      return r.member(x) ? -1.0 : 1.0;
    } else if constexpr (std::is_same_v<T, SetRep::KNormBall>) {
      const Hyperbolic v = dnorm(x, r.n1, r.n2);
      return std::max(v.a1() - r.radius.a1(), v.a2() - r.radius.a2());
    } else {
      struct BodyMargin {
        static double of(const BodyRep& b, std::span<const Complex> u) {
          return b.visit([&](const auto& br) -> double {
            using B = std::decay_t<decltype(br)>;
            if constexpr (std::is_same_v<B, BodyRep::Ball>) {
              return component_norm(br.norm, u) - br.radius;
            } else if constexpr (std::is_same_v<B, BodyRep::ModSlab>) {
              double m = -std::numeric_limits<double>::infinity();
              for (const SlabConstraint& c : br.constraints)
                m = std::max(m, std::abs(linalg::inner(c.functional, u)) - c.bound);
              return m;
            } else {
              double m = -std::numeric_limits<double>::infinity();
              for (const BodyRep& p : br.parts) m = std::max(m, of(p, u));
              return m;
            }
          });
        }
      };
      const CVector x1 = x.part1(), x2 = x.part2();
      return std::max(BodyMargin::of(r.b1, x1), BodyMargin::of(r.b2, x2));
    }
  });
}

namespace sampling {

inline CVector gaussian_cvec(SplitRng& rng, std::size_t n, double sigma) {
  CVector u(n);
  for (Complex& c : u) c = rng.normal_complex(sigma);
  return u;
}

/// Rejection-samples a member of the body (Gaussian per real coordinate,
/// shrinking the scale on rejection streaks; 0 is the final fallback).
inline CVector sample_in_body(const BodyRep& b, Openness o, std::size_t n,
                              SplitRng& rng) {
  double sigma = body_sampling_scale(b);
  for (int attempt = 0; attempt < 200; ++attempt) {
    CVector u = gaussian_cvec(rng, n, sigma);
    if (body_contains(b, u, o)) return u;
    if (attempt % 10 == 9) sigma *= 0.5;
  }
  return CVector(n);
}

inline ModuleVector sample_member(const SetRep& s, std::size_t dim, SplitRng& rng) {
  return s.visit([&](const auto& r) -> ModuleVector {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, SetRep::Raw>) {
      double sigma = 1.0;
      for (int attempt = 0; attempt < 400; ++attempt) {
        CVector u1 = gaussian_cvec(rng, dim, sigma);
        CVector u2 = gaussian_cvec(rng, dim, sigma);
        ModuleVector x = ModuleVector::from_parts(u1, u2);
        if (r.member(x)) return x;
        if (attempt % 10 == 9) sigma *= 0.5;
      }
      return ModuleVector::zero(dim);
    } else {
      const BodyRep b1 = component_body(s, 1), b2 = component_body(s, 2);
      const Openness o = openness_of(s);
      return ModuleVector::from_parts(sample_in_body(b1, o, dim, rng),
                                      sample_in_body(b2, o, dim, rng));
    }
  });
}

/// Points of interest that every sampled check visits first; restricted to
/// members of S.  Raw sets contribute their registry probes.
inline std::vector<ModuleVector> member_probes(const SetRep& s, std::size_t dim) {
  std::vector<ModuleVector> out;
  const auto push_if_member = [&](const ModuleVector& x) {
    if (x.dim() == dim && contains(s, x)) out.push_back(x);
  };
  push_if_member(ModuleVector::zero(dim));
  if (const auto* raw = s.get<SetRep::Raw>()) {
    for (const ModuleVector& p : raw->probes) push_if_member(p);
  } else {
    // a point strictly inside each component section, and a joint one
    for (int l : {1, 2}) {
      const double t = 0.5 * body_sampling_scale(component_body(s, l));
      CVector u(dim), zero(dim);
      u[0] = t;
      push_if_member(l == 1 ? ModuleVector::from_parts(u, zero)
                            : ModuleVector::from_parts(zero, u));
    }
  }
  return out;
}

/// Directions for absorbing checks: registry probes (unfiltered), unit basis
/// vectors in each idempotent section, and 1.
inline std::vector<ModuleVector> direction_probes(const SetRep& s, std::size_t dim) {
  std::vector<ModuleVector> out;
  if (const auto* raw = s.get<SetRep::Raw>()) {
    for (const ModuleVector& p : raw->probes)
      if (p.dim() == dim && !p.is_zero()) out.push_back(p);
  }
  for (std::size_t c = 0; c < dim; ++c) {
    CVector u(dim), zero(dim);
    u[c] = 1.0;
    out.push_back(ModuleVector::from_parts(u, zero));
    out.push_back(ModuleVector::from_parts(zero, u));
    out.push_back(ModuleVector::from_parts(u, u));
  }
  return out;
}

inline const std::vector<Hyperbolic>& convex_corner_weights() {
  static const std::vector<Hyperbolic> corners = {
      Hyperbolic::zero(), Hyperbolic::e1(), Hyperbolic::e2(), Hyperbolic::one()};
  return corners;
}

inline const std::vector<Bicomplex>& balanced_corner_scalars() {
  static const std::vector<Bicomplex> corners = {
      Bicomplex::zero(), Bicomplex::e1(), Bicomplex::e2(), Bicomplex::one(),
      Bicomplex::unit_k()};
  return corners;
}

/// A scalar with |lambda|_k <=' 1; `stratum` cycles through generic,
/// e1-null-cone, e2-null-cone and unit-modulus draws.
inline Bicomplex random_unit_knorm_scalar(SplitRng& rng, long stratum) {
  const double twopi = 6.283185307179586476925287;
  const double t1 = rng.uniform(0.0, twopi), t2 = rng.uniform(0.0, twopi);
  const Complex p1 = std::polar(1.0, t1), p2 = std::polar(1.0, t2);
  switch (stratum % 4) {
    case 1:
      return Bicomplex::from_idempotent(rng.uniform() * p1, 0.0);
    case 2:
      return Bicomplex::from_idempotent(0.0, rng.uniform() * p2);
    case 3:
      return Bicomplex::from_idempotent(p1, p2);
    default:
      return Bicomplex::from_idempotent(rng.uniform() * p1, rng.uniform() * p2);
  }
}

}  // namespace sampling

/// Draws x, y in S and lambda in D+ with 0 <=' lambda <=' 1, and tests the
/// combination lambda*x + (1-lambda)*y for membership.  The corner weights
/// {0, e1, e2, 1} and the probe points are always exercised first.
inline SampledOutcome is_bc_convex_sampled(const SetRep& s, long samples,
                                           std::uint64_t seed, std::size_t dim = 0,
                                           double slack = 1e-9) {
  if (auto d = set_required_dim(s)) dim = *d;
  if (dim == 0) dim = 1;
  SplitRng rng(seed);
  SampledOutcome out;

  const auto test = [&](const ModuleVector& x, const ModuleVector& y,
                        Hyperbolic lam) -> bool {
    ++out.samples_run;
    const ModuleVector combo =
        scalar_mul(lam, x) + scalar_mul(Hyperbolic::one() - lam, y);
    if (contains(s, combo, slack)) return true;
    out.pass = false;
    out.max_violation = std::max(out.max_violation, membership_margin(s, combo));
    out.witness = SetWitness{x, y, lam, std::nullopt, combo};
    return false;
  };

  const auto probes = sampling::member_probes(s, dim);
  for (const ModuleVector& x : probes)
    for (const ModuleVector& y : probes)
      for (Hyperbolic lam : sampling::convex_corner_weights())
        if (!test(x, y, lam)) return out;

  for (long i = out.samples_run; i < samples; ++i) {
    const ModuleVector x = sampling::sample_member(s, dim, rng);
    const ModuleVector y = sampling::sample_member(s, dim, rng);
    const Hyperbolic lam =
        i % 8 == 0 ? sampling::convex_corner_weights()[(i / 8) % 4]
                   : Hyperbolic(rng.uniform(), rng.uniform());
    if (!test(x, y, lam)) return out;
  }
  return out;
}

/// Draws x in S and lambda with |lambda|_k <=' 1 (null-cone scalars
/// included) and tests lambda*x for membership.
inline SampledOutcome is_bc_balanced_sampled(const SetRep& s, long samples,
                                             std::uint64_t seed, std::size_t dim = 0,
                                             double slack = 1e-9) {
  if (auto d = set_required_dim(s)) dim = *d;
  if (dim == 0) dim = 1;
  SplitRng rng(seed);
  SampledOutcome out;

  const auto test = [&](const ModuleVector& x, const Bicomplex& lam) -> bool {
    ++out.samples_run;
    const ModuleVector scaled = scalar_mul(lam, x);
    if (contains(s, scaled, slack)) return true;
    out.pass = false;
    out.max_violation = std::max(out.max_violation, membership_margin(s, scaled));
    out.witness = SetWitness{x, std::nullopt, std::nullopt, lam, scaled};
    return false;
  };

  for (const ModuleVector& x : sampling::member_probes(s, dim))
    for (const Bicomplex& lam : sampling::balanced_corner_scalars())
      if (!test(x, lam)) return out;

  for (long i = out.samples_run; i < samples; ++i) {
    const ModuleVector x = sampling::sample_member(s, dim, rng);
    const Bicomplex lam = i % 16 == 7
                              ? sampling::balanced_corner_scalars()[(i / 16) % 5]
                              : sampling::random_unit_knorm_scalar(rng, i);
    if (!test(x, lam)) return out;
  }
  return out;
}

/// For random directions x, searches epsilon = 2^-m * (1,1) for m up to 40
/// such that every lambda on a D+ grid with 0 <=' lambda <=' epsilon sends
/// lambda*x into S.  A direction that is never absorbed is the witness.
inline SampledOutcome is_bc_absorbing_sampled(const SetRep& s, long directions,
                                              std::uint64_t seed, std::size_t dim = 0,
                                              double slack = 1e-9) {
  if (auto d = set_required_dim(s)) dim = *d;
  if (dim == 0) dim = 1;
  SplitRng rng(seed);
  SampledOutcome out;
  static const double grid[] = {0.0, 0.25, 0.5, 0.75, 1.0};

  const auto absorbed = [&](const ModuleVector& x) -> bool {
    for (int m = 0; m <= 40; ++m) {
      const double eps = std::ldexp(1.0, -m);
      bool all_in = true;
      for (double t1 : grid) {
        for (double t2 : grid) {
          if (!contains(s, scalar_mul(Hyperbolic(t1 * eps, t2 * eps), x), slack)) {
            all_in = false;
            break;
          }
        }
        if (!all_in) break;
      }
      if (all_in) return true;
    }
    return false;
  };

  const auto test = [&](const ModuleVector& x) -> bool {
    ++out.samples_run;
    if (absorbed(x)) return true;
    out.pass = false;
    out.max_violation = 1.0;
    out.witness = SetWitness{x, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    return false;
  };

  for (const ModuleVector& x : sampling::direction_probes(s, dim))
    if (!test(x)) return out;
  for (long i = out.samples_run; i < directions; ++i) {
    CVector u1 = sampling::gaussian_cvec(rng, dim, 1.0);
    CVector u2 = sampling::gaussian_cvec(rng, dim, 1.0);
    if (!test(ModuleVector::from_parts(u1, u2))) return out;
  }
  return out;
}

/// Tests B = e1*B + e2*B by recombining sampled members: for x, y in S the
/// mix e1*x + e2*y must land back in S.
inline SampledOutcome idempotent_sum_check(const SetRep& s, long samples,
                                           std::uint64_t seed, std::size_t dim = 0,
                                           double slack = 1e-9) {
  if (auto d = set_required_dim(s)) dim = *d;
  if (dim == 0) dim = 1;
  SplitRng rng(seed);
  SampledOutcome out;

  const auto test = [&](const ModuleVector& x, const ModuleVector& y) -> bool {
    ++out.samples_run;
    const ModuleVector mix =
        scalar_mul(Bicomplex::e1(), x) + scalar_mul(Bicomplex::e2(), y);
    if (contains(s, mix, slack)) return true;
    out.pass = false;
    out.max_violation = std::max(out.max_violation, membership_margin(s, mix));
    out.witness = SetWitness{x, y, std::nullopt, std::nullopt, mix};
    return false;
  };

  const auto probes = sampling::member_probes(s, dim);
  for (const ModuleVector& x : probes)
    for (const ModuleVector& y : probes)
      if (!test(x, y)) return out;

  for (long i = out.samples_run; i < samples; ++i) {
    const ModuleVector x = sampling::sample_member(s, dim, rng);
    const ModuleVector y = sampling::sample_member(s, dim, rng);
    if (!test(x, y)) return out;
  }
  return out;
}

/// Tests e_l * B within B on sampled members (the inclusion that balanced
/// and convex-with-0 sets satisfy but absorbing sets may not).
inline SampledOutcome component_section_check(const SetRep& s, int l, long samples,
                                              std::uint64_t seed, std::size_t dim = 0,
                                              double slack = 1e-9) {
  if (auto d = set_required_dim(s)) dim = *d;
  if (dim == 0) dim = 1;
  SplitRng rng(seed);
  SampledOutcome out;
  const Bicomplex unit = l == 1 ? Bicomplex::e1() : Bicomplex::e2();

  const auto test = [&](const ModuleVector& x) -> bool {
    ++out.samples_run;
    const ModuleVector section = scalar_mul(unit, x);
    if (contains(s, section, slack)) return true;
    out.pass = false;
    out.max_violation = std::max(out.max_violation, membership_margin(s, section));
    out.witness = SetWitness{x, std::nullopt, std::nullopt, unit, section};
    return false;
  };

  for (const ModuleVector& x : sampling::member_probes(s, dim))
    if (!test(x)) return out;
  for (long i = out.samples_run; i < samples; ++i)
    if (!test(sampling::sample_member(s, dim, rng))) return out;
  return out;
}

}  // namespace bcg
