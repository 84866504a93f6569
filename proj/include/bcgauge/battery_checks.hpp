#pragma once

// Check implementations for the battery registry; included from battery.hpp.

namespace bcg {
namespace battery_detail {

inline double bc_rel_err(const Bicomplex& a, const Bicomplex& b) {
  const double scale = std::max({1.0, euclid_norm(a), euclid_norm(b)});
  return euclid_norm(a - b) / scale;
}

inline Bicomplex random_invertible(SplitRng& rng, double lo = 0.2, double hi = 3.0) {
  const double twopi = 6.283185307179586476925287;
  return Bicomplex::from_idempotent(
      std::polar(rng.uniform(lo, hi), rng.uniform(0.0, twopi)),
      std::polar(rng.uniform(lo, hi), rng.uniform(0.0, twopi)));
}

template <class F>
CheckResult ring_identity_check(const BatteryConfig& cfg, std::uint64_t seed, F&& f) {
  SplitRng rng(seed);
  Acc a;
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const Bicomplex z = random_bicomplex(rng);
    const Bicomplex w = random_bicomplex(rng);
    const Bicomplex v = random_bicomplex(rng);
    const auto [lhs, rhs] = f(z, w, v);
    const double err = bc_rel_err(lhs, rhs);
    a.violation(err);
    if (err > cfg.tol_rel)
      a.fail(json{{"Z", to_json(z)}, {"W", to_json(w)}, {"V", to_json(v)}}, err);
  }
  return a.r;
}

inline SampledOutcome merge(SampledOutcome a, const SampledOutcome& b) {
  a.samples_run += b.samples_run;
  a.max_violation = std::max(a.max_violation, b.max_violation);
  if (a.pass && !b.pass) {
    a.pass = false;
    a.witness = b.witness;
  }
  return a;
}

inline ModuleVector axis_vector(std::size_t dim, int section, std::size_t coord,
                                double value) {
  CVector u(dim), zero(dim);
  u[coord] = value;
  return section == 1 ? ModuleVector::from_parts(u, zero)
                      : ModuleVector::from_parts(zero, u);
}

// The fixed ball pair shared by a few set and gauge checks; its axis points
// (2, 0.75) sit exactly on the unit boundary of the closed set.
inline SetRep fixed_ball_pair(Openness o = Openness::closed) {
  return SetRep::pair(BodyRep::ball(ComponentNorm::l2, 2.0),
                      BodyRep::ball(ComponentNorm::l1, 0.75), o);
}

inline SetRep fixed_knorm_ball(Openness o = Openness::closed) {
  return SetRep::knorm_ball(Hyperbolic(1.0, 1.5), o);
}

// ---------------------------------------------------------------------------
// scalar suite
// ---------------------------------------------------------------------------

inline CheckResult check_idempotent_identities(const BatteryConfig&, std::uint64_t) {
  Acc a;
  const Bicomplex e1 = Bicomplex::e1(), e2 = Bicomplex::e2();
  const auto expect = [&](bool cond, const char* what) {
    a.sample();
    if (!cond) a.fail(json{{"identity", what}});
  };
  expect(e1 * e1 == e1, "e1*e1 = e1");
  expect(e2 * e2 == e2, "e2*e2 = e2");
  expect(e1 + e2 == Bicomplex::one(), "e1+e2 = 1");
  expect(e1 * e2 == Bicomplex::zero(), "e1*e2 = 0");
  expect(conj(e1, Conjugation::dag3) == e1, "e1^dag3 = e1");
  expect(conj(e2, Conjugation::dag3) == e2, "e2^dag3 = e2");
  expect(e1.z1() == Complex(1.0, 0.0) && e1.z2() == Complex(0.0, 0.0),
         "e1 idempotent view (1,0)");
  expect(Bicomplex::unit_k() * Bicomplex::unit_k() == Bicomplex::one(), "k*k = 1");
  return a.r;
}

inline CheckResult check_idempotent_roundtrip(const BatteryConfig& cfg,
                                              std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const Bicomplex z = random_bicomplex(rng, i % 2 ? 1.0 : 100.0);
    const Bicomplex back = Bicomplex::from_idempotent(z.z1(), z.z2());
    const double err = bc_rel_err(back, z);
    a.violation(err);
    if (err > 1e-15) a.fail(json{{"Z", to_json(z)}}, err);
  }
  return a.r;
}

inline CheckResult check_knorm_multiplicative(const BatteryConfig& cfg,
                                              std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const Bicomplex z = random_bicomplex(rng), w = random_bicomplex(rng);
    const Hyperbolic lhs = knorm(z * w);
    const Hyperbolic rhs = knorm(z) * knorm(w);
    const double err = rel_err(lhs, rhs);
    a.violation(err);
    if (err > cfg.tol_rel) a.fail(json{{"Z", to_json(z)}, {"W", to_json(w)}}, err);
  }
  return a.r;
}

inline CheckResult check_euclid_submultiplicative(const BatteryConfig& cfg,
                                                  std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  const double root2 = std::sqrt(2.0);
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const Bicomplex z = random_bicomplex(rng), w = random_bicomplex(rng);
    const double lhs = euclid_norm(z * w);
    const double rhs = root2 * euclid_norm(z) * euclid_norm(w);
    const double excess = lhs - rhs * (1.0 + cfg.tol_rel);
    a.violation(std::max(0.0, excess));
    if (excess > 0.0) a.fail(json{{"Z", to_json(z)}, {"W", to_json(w)}}, excess);
  }
  return a.r;
}

inline CheckResult check_knorm_magnitude_identity(const BatteryConfig& cfg,
                                                  std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const Bicomplex z = random_bicomplex(rng);
    const double lhs = euclid_norm(Bicomplex::from_hyperbolic(knorm(z)));
    const double rhs = euclid_norm(z);
    const double err = std::fabs(lhs - rhs) / std::max(1.0, rhs);
    a.violation(err);
    if (err > cfg.tol_rel) a.fail(json{{"Z", to_json(z)}}, err);
  }
  return a.r;
}

inline CheckResult check_invert_roundtrip(const BatteryConfig& cfg,
                                          std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    if (i % 16 == 5) {
      // zero divisors must be classified and must refuse inversion
      const Complex mu = rng.normal_complex();
      const Bicomplex nc = i % 32 == 5 ? Bicomplex::from_idempotent(mu, 0.0)
                                       : Bicomplex::from_idempotent(0.0, mu);
      if (std::abs(mu) <= kNullConeTol) continue;
      if (!is_null_cone(nc)) {
        a.fail(json{{"Z", to_json(nc)}, {"what", "null cone not detected"}});
        break;
      }
      bool threw = false;
      try {
        (void)invert(nc);
      } catch (const null_cone_error&) {
        threw = true;
      }
      if (!threw) a.fail(json{{"Z", to_json(nc)}, {"what", "inverted a zero divisor"}});
      continue;
    }
    const Bicomplex z = random_bicomplex(rng);
    if (is_null_cone(z) || z.is_zero()) continue;
    const double err = bc_rel_err(z * invert(z), Bicomplex::one());
    a.violation(err);
    if (err > cfg.tol_rel) a.fail(json{{"Z", to_json(z)}}, err);
  }
  return a.r;
}

inline CheckResult check_order_axioms(const BatteryConfig& cfg, std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  a.sample();
  if (hyp_cmp(Hyperbolic::e1(), Hyperbolic::e2()).relation != Order::incomparable)
    a.fail(json{{"what", "e1 vs e2 must be incomparable"}});
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const Hyperbolic x(rng.normal(), rng.normal());
    const OrderResult self = hyp_cmp(x, x);
    if (self.relation != Order::equal || !self.leq || self.lt_strict) {
      a.fail(json{{"what", "reflexivity"}, {"x", to_json(x)}});
      break;
    }
    const Hyperbolic d1 = random_dplus(rng), d2 = random_dplus(rng);
    const Hyperbolic y = x + d1, z = y + d2;
    if (!leq(x, y) || !leq(y, z) || !leq(x, z)) {
      a.fail(json{{"what", "transitivity on a comparable chain"}, {"x", to_json(x)}});
      break;
    }
    if (leq(x, y) && leq(y, x) && !(x == y)) {
      a.fail(json{{"what", "antisymmetry"}, {"x", to_json(x)}, {"y", to_json(y)}});
      break;
    }
    const bool strict_expected = d1.a1() > 0.0 && d1.a2() > 0.0;
    if (lt_strict(x, y) != strict_expected) {
      a.fail(json{{"what", "strict order"}, {"x", to_json(x)}, {"y", to_json(y)}});
      break;
    }
  }
  return a.r;
}

inline CheckResult check_dsup_lub(const BatteryConfig& cfg, std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  a.sample();
  try {
    (void)d_sup(std::span<const Hyperbolic>{});
    a.fail(json{{"what", "d_sup of empty collection did not error"}});
  } catch (const empty_collection_error&) {
  }
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    std::vector<Hyperbolic> values;
    const std::size_t n = 1 + rng.uniform_index(8);
    for (std::size_t c = 0; c < n; ++c)
      values.emplace_back(rng.normal() * 2.0, rng.normal() * 2.0);
    const Hyperbolic s = d_sup(values), t = d_inf(values);
    bool attained1 = false, attained2 = false;
    for (const Hyperbolic& v : values) {
      if (!leq(v, s) || !leq(t, v)) {
        a.fail(json{{"what", "sup/inf not a bound"}, {"value", to_json(v)}});
        break;
      }
      attained1 = attained1 || v.a1() == s.a1();
      attained2 = attained2 || v.a2() == s.a2();
    }
    if (!a.ok()) break;
    if (!attained1 || !attained2) {
      a.fail(json{{"what", "sup components not attained"}, {"sup", to_json(s)}});
      break;
    }
    const Hyperbolic upper = s + random_dplus(rng);
    if (!leq(s, upper)) {
      a.fail(json{{"what", "sup exceeds an upper bound"}, {"bound", to_json(upper)}});
      break;
    }
  }
  return a.r;
}

// ---------------------------------------------------------------------------
// sets suite
// ---------------------------------------------------------------------------

inline CheckResult check_scale_membership_equivalence(const BatteryConfig& cfg,
                                                      std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  const SetRep sets[] = {fixed_ball_pair(), fixed_knorm_ball()};
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const SetRep& s = sets[i % 2];
    const Bicomplex lam = random_invertible(rng);
    const SetRep scaled = scale_set(lam, s);
    const ModuleVector x = sampling::sample_member(s, cfg.dimension, rng);
    if (!contains(scaled, scalar_mul(lam, x), cfg.tol_slack)) {
      a.fail(json{{"what", "lambda*x escaped scale_set"},
                  {"x", to_json(x)},
                  {"lambda", to_json(lam)}},
             membership_margin(scaled, scalar_mul(lam, x)));
      break;
    }
    const ModuleVector y = sampling::sample_member(scaled, cfg.dimension, rng);
    const ModuleVector back = scalar_mul(invert(lam), y);
    if (!contains(s, back, cfg.tol_slack)) {
      a.fail(json{{"what", "inverse image escaped the set"},
                  {"y", to_json(y)},
                  {"lambda", to_json(lam)}},
             membership_margin(s, back));
      break;
    }
  }
  return a.r;
}

inline CheckResult check_interior_closure_chain(const BatteryConfig& cfg,
                                                std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  const SetRep s = fixed_ball_pair();
  const SetRep inter = interior(s), clo = closure(s);

  // exact boundary point: axis values equal to the radii
  a.sample();
  ModuleVector boundary = axis_vector(cfg.dimension, 1, 0, 2.0) +
                          axis_vector(cfg.dimension, 2, 0, 0.75);
  if (!contains(clo, boundary) || contains(inter, boundary))
    a.fail(json{{"what", "boundary point misclassified"}, {"x", to_json(boundary)}});

  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const ModuleVector x = sampling::sample_member(inter, cfg.dimension, rng);
    if (!contains(s, x) || !contains(clo, x)) {
      a.fail(json{{"what", "interior not inside set/closure"}, {"x", to_json(x)}});
      break;
    }
    const ModuleVector y = sampling::sample_member(s, cfg.dimension, rng);
    if (!contains(clo, y)) {
      a.fail(json{{"what", "set not inside closure"}, {"x", to_json(y)}});
      break;
    }
  }
  return a.r;
}

// ---------------------------------------------------------------------------
// gauge suite
// ---------------------------------------------------------------------------

inline CheckResult check_gauge_oracle(const BatteryConfig& cfg, std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  const int nsets = 10;
  const long per = std::max<long>(1, cfg.samples / nsets);
  for (int si = 0; si < nsets && a.ok(); ++si) {
    const SetRep s = random_structural_set(rng, cfg.dimension, si);
    for (long i = 0; i < per && a.ok(); ++i) {
      a.sample();
      const double sigma = i % 3 == 0 ? 0.2 : (i % 3 == 1 ? 1.0 : 4.0);
      const ModuleVector x = random_vector(rng, cfg.dimension, sigma);
      const Hyperbolic closed = gauge(s, x).value;
      const Hyperbolic bisect = gauge_bisect(s, x, cfg.bisect_tol).value;
      const double err = std::max(std::fabs(closed.a1() - bisect.a1()),
                                  std::fabs(closed.a2() - bisect.a2()));
      a.violation(err);
      if (err > cfg.bisect_tol + 1e-12)
        a.fail(json{{"set", to_json(s)},
                    {"x", to_json(x)},
                    {"closed_form", to_json(closed)},
                    {"bisection", to_json(bisect)}},
               err);
    }
  }
  return a.r;
}

inline CheckResult check_gauge_subadditive(const BatteryConfig& cfg,
                                           std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const SetRep s = random_structural_set(rng, cfg.dimension, static_cast<int>(i));
    const ModuleVector x = random_vector(rng, cfg.dimension);
    const ModuleVector y = random_vector(rng, cfg.dimension);
    const Hyperbolic qs = gauge(s, x + y).value;
    const Hyperbolic qx = gauge(s, x).value, qy = gauge(s, y).value;
    const double excess = std::max(qs.a1() - qx.a1() - qy.a1(),
                                   qs.a2() - qx.a2() - qy.a2());
    a.violation(std::max(0.0, excess));
    if (excess > cfg.tol_slack)
      a.fail(json{{"set", to_json(s)}, {"x", to_json(x)}, {"y", to_json(y)}}, excess);
  }
  return a.r;
}

inline CheckResult check_gauge_homogeneous(const BatteryConfig& cfg,
                                           std::uint64_t seed, bool null_cone) {
  SplitRng rng(seed);
  Acc a;
  const double twopi = 6.283185307179586476925287;
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const SetRep s = random_structural_set(rng, cfg.dimension, static_cast<int>(i));
    const ModuleVector x = random_vector(rng, cfg.dimension);
    Bicomplex lam;
    if (null_cone) {
      const Complex mu = std::polar(rng.uniform(0.1, 3.0), rng.uniform(0.0, twopi));
      lam = i % 2 ? Bicomplex::from_idempotent(mu, 0.0)
                  : Bicomplex::from_idempotent(0.0, mu);
    } else {
      lam = random_invertible(rng);
    }
    const Hyperbolic lhs = gauge(s, scalar_mul(lam, x)).value;
    const Hyperbolic rhs = knorm(lam) * gauge(s, x).value;
    const double err = rel_err(lhs, rhs);
    a.violation(err);
    if (err > cfg.tol_rel)
      a.fail(json{{"set", to_json(s)}, {"x", to_json(x)}, {"lambda", to_json(lam)}},
             err);
  }
  return a.r;
}

inline CheckResult check_gauge_chain(const BatteryConfig& cfg, std::uint64_t seed) {
  SplitRng rng(seed);
  SampledOutcome merged;
  const long per = std::max<long>(100, cfg.samples / 8);
  for (int si = 0; si < 4; ++si) {
    const SetRep s = random_structural_set(rng, cfg.dimension, si);
    for (Openness o : {Openness::open, Openness::closed}) {
      merged = merge(merged, gauge_chain_check(with_openness(s, o), per,
                                               rng.next_u64(), cfg.dimension,
                                               cfg.tol_slack));
    }
  }
  return from_outcome(merged);
}

inline CheckResult check_unit_set_identity(const BatteryConfig& cfg,
                                           std::uint64_t seed, Openness which) {
  SplitRng rng(seed);
  Acc a;
  const UnitSetKind kind =
      which == Openness::open ? UnitSetKind::strict : UnitSetKind::nonstrict;
  const SetRep s = with_openness(
      random_structural_set(rng, cfg.dimension, static_cast<int>(seed % 4)), which);
  const SetRep unit = unit_set(s, kind);
  const SetRep other =
      unit_set(s, which == Openness::open ? UnitSetKind::nonstrict : UnitSetKind::strict);

  a.sample();
  if (to_json(unit_set(unit, kind)) != to_json(unit))
    a.fail(json{{"what", "unit_set is not idempotent"}});

  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const ModuleVector x = i % 2 == 0
                               ? sampling::sample_member(closure(s), cfg.dimension, rng)
                               : random_vector(rng, cfg.dimension, 2.0);
    if (contains(s, x) != contains(unit, x)) {
      a.fail(json{{"what", "B and its unit set disagree"}, {"x", to_json(x)}});
      break;
    }
    // A_B lies inside C_B regardless of which one mirrors B
    const SetRep& strict = which == Openness::open ? unit : other;
    const SetRep& nonstrict = which == Openness::open ? other : unit;
    if (contains(strict, x) && !contains(nonstrict, x)) {
      a.fail(json{{"what", "strict unit set escaped nonstrict"}, {"x", to_json(x)}});
      break;
    }
  }

  if (which == Openness::closed && a.ok()) {
    // exact boundary point of the fixed pair: in C_B, not in A_B
    a.sample();
    const SetRep pair = fixed_ball_pair();
    const ModuleVector boundary = axis_vector(cfg.dimension, 1, 0, 2.0) +
                                  axis_vector(cfg.dimension, 2, 0, 0.75);
    const Hyperbolic g = gauge(pair, boundary).value;
    if (!leq(g, Hyperbolic::one()) || lt_strict(g, Hyperbolic::one()))
      a.fail(json{{"what", "boundary gauge not exactly on the unit shell"},
                  {"gauge", to_json(g)}});
  }
  return a.r;
}

inline CheckResult check_gauge_scaling(const BatteryConfig& cfg, std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const SetRep s = random_structural_set(rng, cfg.dimension, static_cast<int>(i));
    const Bicomplex lam = random_invertible(rng);
    const ModuleVector x = random_vector(rng, cfg.dimension);
    const Hyperbolic lhs = gauge(scale_set(lam, s), x).value;
    const Hyperbolic rhs = gauge(s, x).value / knorm(lam);
    const double err = rel_err(lhs, rhs);
    a.violation(err);
    if (err > cfg.tol_rel)
      a.fail(json{{"set", to_json(s)}, {"lambda", to_json(lam)}, {"x", to_json(x)}},
             err);
  }
  return a.r;
}

inline CheckResult check_gauge_monotone(const BatteryConfig& cfg, std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const SetRep s = random_structural_set(rng, cfg.dimension, static_cast<int>(i % 3));
    // intersecting an extra slab shrinks the set and can only raise the gauge
    const SetRep smaller = SetRep::pair(
        BodyRep::intersection({component_body(s, 1), random_slab(rng, cfg.dimension)}),
        BodyRep::intersection({component_body(s, 2), random_slab(rng, cfg.dimension)}),
        openness_of(s));
    const ModuleVector x = random_vector(rng, cfg.dimension);
    const Hyperbolic big = gauge(s, x).value;
    const Hyperbolic small = gauge(smaller, x).value;
    const double excess = std::max(big.a1() - small.a1(), big.a2() - small.a2());
    a.violation(std::max(0.0, excess));
    if (excess > cfg.tol_slack)
      a.fail(json{{"set", to_json(s)}, {"x", to_json(x)}}, excess);
  }
  return a.r;
}

inline CheckResult check_bounded_set_norm(const BatteryConfig& cfg,
                                          std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;

  a.sample();
  try {
    (void)dnorm_from_bounded_set(
        SetRep::pair(BodyRep::whole_space(), BodyRep::ball(ComponentNorm::l2, 1.0),
                     Openness::closed),
        cfg.dimension);
    a.fail(json{{"what", "unbounded set produced a norm"}});
  } catch (const unbounded_error&) {
  }

  const SetRep sets[] = {fixed_ball_pair(),
                         SetRep::pair(random_slab(rng, cfg.dimension),
                                      random_slab(rng, cfg.dimension), Openness::closed)};
  for (const SetRep& s : sets) {
    if (!a.ok()) break;
    const DSeminorm p = dnorm_from_bounded_set(s, cfg.dimension);
    const Hyperbolic c = separation_constant(s, cfg.dimension);
    a.sample();
    if (!(c.a1() > 0.0 && c.a2() > 0.0)) {
      a.fail(json{{"what", "no separation constant for a bounded set"},
                  {"set", to_json(s)}});
      break;
    }
    for (long i = 0; i < cfg.samples / 2 && a.ok(); ++i) {
      a.sample();
      const ModuleVector x = random_vector(rng, cfg.dimension);
      const Hyperbolic v = p.eval(x);
      const Hyperbolic lower = c * dnorm(x);
      if (v.a1() < lower.a1() - cfg.tol_slack || v.a2() < lower.a2() - cfg.tol_slack) {
        a.fail(json{{"what", "gauge under the separation bound"},
                    {"set", to_json(s)},
                    {"x", to_json(x)}},
               std::max(lower.a1() - v.a1(), lower.a2() - v.a2()));
        break;
      }
      const Bicomplex lam = random_invertible(rng);
      const double err = rel_err(p.eval(scalar_mul(lam, x)), knorm(lam) * v);
      a.violation(err);
      if (err > cfg.tol_rel)
        a.fail(json{{"what", "norm homogeneity"},
                    {"set", to_json(s)},
                    {"x", to_json(x)},
                    {"lambda", to_json(lam)}},
               err);
    }
  }
  return a.r;
}

// ---------------------------------------------------------------------------
// seminorm suite
// ---------------------------------------------------------------------------

inline CheckResult check_seminorm_axioms(const BatteryConfig& cfg, std::uint64_t seed,
                                         std::initializer_list<const char*> names) {
  SplitRng rng(seed);
  PropertyOutcome merged;
  const auto variants = seminorm_variants(cfg.dimension);
  for (const char* name : names) {
    for (const auto& [vname, p] : variants) {
      if (vname != name) continue;
      const PropertyOutcome o = seminorm_axiom_check(
          p, std::max<long>(200, cfg.samples / 2), rng.next_u64(), cfg.dimension,
          cfg.tol_rel, cfg.tol_slack);
      merged.samples_run += o.samples_run;
      merged.max_violation = std::max(merged.max_violation, o.max_violation);
      if (merged.pass && !o.pass) {
        merged.pass = false;
        merged.witness = o.witness;
        if (merged.witness) merged.witness->what = vname + (": " + o.witness->what);
      }
    }
  }
  return from_outcome(merged);
}

inline CheckResult check_unit_sets_properties(const BatteryConfig& cfg,
                                              std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  const long per = std::max<long>(200, cfg.samples / 48);
  for (const auto& [name, p] : seminorm_variants(cfg.dimension)) {
    for (UnitSetKind kind : {UnitSetKind::strict, UnitSetKind::nonstrict}) {
      const SetRep u = p.unit_set(kind, cfg.dimension);
      const SampledOutcome outcomes[] = {
          is_bc_convex_sampled(u, per, rng.next_u64(), cfg.dimension, cfg.tol_slack),
          is_bc_balanced_sampled(u, per, rng.next_u64(), cfg.dimension, cfg.tol_slack),
          is_bc_absorbing_sampled(u, per, rng.next_u64(), cfg.dimension,
                                  cfg.tol_slack)};
      const char* what[] = {"bc_convex", "bc_balanced", "bc_absorbing"};
      for (int c = 0; c < 3; ++c) {
        a.r.samples_run += outcomes[c].samples_run;
        a.violation(outcomes[c].max_violation);
        if (!outcomes[c].pass && a.ok()) {
          json w = outcomes[c].witness ? to_json(*outcomes[c].witness) : json::object();
          w["variant"] = name;
          w["unit_set"] = kind == UnitSetKind::strict ? "strict" : "nonstrict";
          w["check"] = what[c];
          a.fail(std::move(w), outcomes[c].max_violation);
        }
      }
      if (!a.ok()) return a.r;
    }
  }
  return a.r;
}

inline CheckResult check_kernel_submodule(const BatteryConfig& cfg,
                                          std::uint64_t seed) {
  SplitRng rng(seed);
  PropertyOutcome merged;
  const DSeminorm ps[] = {
      DSeminorm::component_abs(1, 0), DSeminorm::component_abs(2, cfg.dimension - 1),
      DSeminorm::scaled(DSeminorm::knorm(), Hyperbolic(1.0, 0.0))};
  for (const DSeminorm& p : ps) {
    const PropertyOutcome o = kernel_check(p, std::max<long>(100, cfg.samples / 3),
                                           rng.next_u64(), cfg.dimension, cfg.tol_rel);
    merged.samples_run += o.samples_run;
    merged.max_violation = std::max(merged.max_violation, o.max_violation);
    if (merged.pass && !o.pass) {
      merged.pass = false;
      merged.witness = o.witness;
    }
  }
  return from_outcome(merged);
}

inline CheckResult check_separation(const BatteryConfig& cfg, std::uint64_t seed,
                                    int which) {
  SplitRng rng(seed);
  SeminormFamily family = [&] {
    switch (which) {
      case 0:
        return SeminormFamily({DSeminorm::component_abs(1, 0)});
      case 1:
        return SeminormFamily({DSeminorm::knorm()}, true);
      default:
        return coverage_family(cfg.dimension);
    }
  }();
  const PropertyOutcome o =
      is_separated_sampled(family, cfg.samples, rng.next_u64(), cfg.dimension);
  CheckResult r = from_outcome(o);
  if (which != 0) {
    // these families are structurally separated; the hint must agree
    DSeminorm::Coverage cov;
    for (const DSeminorm& p : family.seminorms) cov.merge(p.coverage());
    ++r.samples_run;
    if (!cov.separating_for_dim(cfg.dimension)) {
      r.pass = false;
      r.witness = json{{"what", "structural separation not detected"}};
    }
  }
  return r;
}

inline CheckResult check_sup_family_monotone(const BatteryConfig& cfg,
                                             std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  const SeminormFamily f({DSeminorm::component_abs(1, 0), DSeminorm::component_abs(2, 0),
                          DSeminorm::knorm()});
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const ModuleVector x = random_vector(rng, cfg.dimension);
    Hyperbolic prev = sup_family(f, 1).eval(x);
    for (std::size_t m = 2; m <= f.size(); ++m) {
      const Hyperbolic cur = sup_family(f, m).eval(x);
      if (!leq(prev, cur)) {
        a.fail(json{{"what", "q_m not monotone"}, {"x", to_json(x)}, {"m", m}});
        break;
      }
      prev = cur;
    }
  }
  return a.r;
}

inline CheckResult check_sup_knorm_identity(const BatteryConfig& cfg,
                                            std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  const SeminormFamily f({DSeminorm::component_abs(1, 0), DSeminorm::component_abs(2, 0)});
  const DSeminorm q2 = sup_family(f, 2);
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const Bicomplex z = random_bicomplex(rng);
    const ModuleVector x = ModuleVector::scalar(z);
    if (!(q2.eval(x) == knorm(z)))
      a.fail(json{{"what", "sup of the two sections is not |.|_k"}, {"Z", to_json(z)}});
  }
  return a.r;
}

inline CheckResult check_neighborhood_consistency(const BatteryConfig& cfg,
                                                  std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  const std::vector<DSeminorm> ps = {DSeminorm::knorm(), DSeminorm::component_abs(1, 0),
                                     DSeminorm::component_abs(2, 0)};
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const ModuleVector center = random_vector(rng, cfg.dimension);
    const Hyperbolic eps(rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0));
    const Neighborhood joint(center, eps, ps);
    const ModuleVector y =
        center + random_vector(rng, cfg.dimension, rng.uniform(0.05, 2.0));
    bool all_single = true;
    for (const DSeminorm& p : ps)
      all_single = all_single && nbhd_contains(Neighborhood(center, eps, {p}), y);
    if (nbhd_contains(joint, y) != all_single) {
      a.fail(json{{"what", "joint neighborhood disagrees with singles"},
                  {"y", to_json(y)}});
      break;
    }
  }
  return a.r;
}

// ---------------------------------------------------------------------------
// metric suite
// ---------------------------------------------------------------------------

inline SeminormFamily metric_family_constant() {
  return SeminormFamily({DSeminorm::knorm()}, true);
}

inline SeminormFamily metric_family_increasing(std::size_t) {
  return increasing_family(SeminormFamily(
      {DSeminorm::component_abs(1, 0), DSeminorm::component_abs(2, 0),
       DSeminorm::knorm()},
      true));
}

inline CheckResult check_metric_translation_invariance(const BatteryConfig& cfg,
                                                       std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  const SeminormFamily families[] = {metric_family_constant(),
                                     metric_family_increasing(cfg.dimension)};
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const SeminormFamily& f = families[i % 2];
    const ModuleVector x = detail::dyadic_vector(rng, cfg.dimension, 4.0);
    const ModuleVector y = detail::dyadic_vector(rng, cfg.dimension, 4.0);
    const ModuleVector z = detail::dyadic_vector(rng, cfg.dimension, 4.0);
    const int n = 1 + static_cast<int>(rng.uniform_index(64));
    const Hyperbolic moved = dmetric(f, translate(z, x), translate(z, y), n);
    const Hyperbolic base = dmetric(f, x, y, n);
    if (!(moved == base)) {
      a.fail(json{{"what", "translation moved the metric"},
                  {"x", to_json(x)},
                  {"y", to_json(y)},
                  {"z", to_json(z)},
                  {"N", n}});
      break;
    }
  }
  return a.r;
}

inline CheckResult check_metric_partial_sums(const BatteryConfig& cfg,
                                             std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  const SeminormFamily f = metric_family_increasing(cfg.dimension);
  static const int cuts[] = {1, 2, 4, 8, 16, 32, 64};
  for (long i = 0; i < cfg.samples / 4 + 1 && a.ok(); ++i) {
    a.sample();
    const ModuleVector x = detail::dyadic_vector(rng, cfg.dimension, 4.0);
    const ModuleVector y = detail::dyadic_vector(rng, cfg.dimension, 4.0);
    Hyperbolic prev = dmetric(f, x, y, cuts[0]);
    const Hyperbolic full = dmetric(f, x, y, 64);
    for (int ci = 1; ci < 7 && a.ok(); ++ci) {
      const Hyperbolic cur = dmetric(f, x, y, cuts[ci]);
      if (!leq(prev, cur)) {
        a.fail(json{{"what", "partial sums not monotone"}, {"N", cuts[ci]}});
        break;
      }
      prev = cur;
    }
    for (int ci = 0; ci < 7 && a.ok(); ++ci) {
      const double tail = std::ldexp(1.0, -cuts[ci]) + 1e-12;
      const Hyperbolic at = dmetric(f, x, y, cuts[ci]);
      const double gap = std::max(full.a1() - at.a1(), full.a2() - at.a2());
      a.violation(std::max(0.0, gap - tail));
      if (gap > tail)
        a.fail(json{{"what", "tail bound exceeded"}, {"N", cuts[ci]}}, gap - tail);
    }
  }
  return a.r;
}

inline CheckResult check_metric_constant_limit(const BatteryConfig& cfg,
                                               std::uint64_t seed) {
  SplitRng rng(seed);
  Acc a;
  const SeminormFamily f = metric_family_constant();
  const double budget = std::ldexp(1.0, -30);
  for (long i = 0; i < cfg.samples && a.ok(); ++i) {
    a.sample();
    const ModuleVector x = detail::dyadic_vector(rng, cfg.dimension, 4.0);
    const ModuleVector y = detail::dyadic_vector(rng, cfg.dimension, 4.0);
    const Hyperbolic v = dnorm(x - y);
    const Hyperbolic limit(v.a1() / (1.0 + v.a1()), v.a2() / (1.0 + v.a2()));
    const Hyperbolic partial = dmetric(f, x, y, 30);
    const double err = std::max(std::fabs(limit.a1() - partial.a1()),
                                std::fabs(limit.a2() - partial.a2()));
    a.violation(err);
    if (err > budget)
      a.fail(json{{"x", to_json(x)}, {"y", to_json(y)}, {"partial", to_json(partial)}},
             err);
  }
  return a.r;
}

inline CheckResult check_metric_topology_compat(const BatteryConfig& cfg,
                                                std::uint64_t seed, int which) {
  SplitRng rng(seed);
  Acc a;
  const SeminormFamily f =
      which == 0 ? increasing_family(SeminormFamily(
                       {DSeminorm::knorm(),
                        DSeminorm::scaled(DSeminorm::knorm(), Hyperbolic(2.0, 2.0))}))
                 : metric_family_increasing(cfg.dimension);
  const std::size_t n = which == 0 ? 1 : 2;
  const Hyperbolic eps = which == 0 ? Hyperbolic::one() : Hyperbolic(1.0, 3.0);

  a.sample();
  const Hyperbolic delta = metric_topology_delta(n, eps);
  const Hyperbolic expected =
      which == 0 ? Hyperbolic(0.25, 0.25) : Hyperbolic(0.125, 0.1875);
  if (!(delta == expected)) {
    a.fail(json{{"what", "delta formula"}, {"delta", to_json(delta)}});
    return a.r;
  }

  const PropertyOutcome o = metric_topology_compat_check(f, n, eps, cfg.samples,
                                                         rng.next_u64(), cfg.dimension);
  a.r.samples_run += o.samples_run;
  a.violation(o.max_violation);
  if (!o.pass && o.witness) a.fail(to_json(*o.witness), o.max_violation);
  return a.r;
}

inline CheckResult check_metric_non_separated(const BatteryConfig& cfg,
                                              std::uint64_t seed) {
  SplitRng rng(seed);
  const SeminormFamily f({DSeminorm::component_abs(1, 0)});
  CheckResult r;
  for (long i = 0; i < std::min<long>(cfg.samples, 64); ++i) {
    ++r.samples_run;
    const ModuleVector x = random_vector(rng, cfg.dimension);
    const ModuleVector shift = axis_vector(cfg.dimension, 2, 0, rng.uniform(0.5, 2.0));
    const ModuleVector y = x - shift;
    const Hyperbolic d = dmetric(f, x, y, 64);
    if (d.is_zero() && !(x == y)) {
      r.pass = false;  // property "d separates points" fails, as expected
      r.witness = json{{"what", "distinct points at metric distance zero"},
                       {"x", to_json(x)},
                       {"y", to_json(y)}};
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

inline std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> defs;
  const auto add = [&](const char* id, const char* suite, bool expect_witness,
                       std::function<CheckResult(const BatteryConfig&, std::uint64_t)>
                           fn) {
    defs.push_back(CheckDef{id, suite, expect_witness, std::move(fn)});
  };

  // scalar
  add("scalar.add_associative", "scalar", false, [](const auto& c, auto s) {
    return ring_identity_check(c, s, [](auto z, auto w, auto v) {
      return std::pair{(z + w) + v, z + (w + v)};
    });
  });
  add("scalar.mul_associative", "scalar", false, [](const auto& c, auto s) {
    return ring_identity_check(c, s, [](auto z, auto w, auto v) {
      return std::pair{(z * w) * v, z * (w * v)};
    });
  });
  add("scalar.mul_commutative", "scalar", false, [](const auto& c, auto s) {
    return ring_identity_check(
        c, s, [](auto z, auto w, auto) { return std::pair{z * w, w * z}; });
  });
  add("scalar.distributive", "scalar", false, [](const auto& c, auto s) {
    return ring_identity_check(c, s, [](auto z, auto w, auto v) {
      return std::pair{z * (w + v), z * w + z * v};
    });
  });
  add("scalar.idempotent_identities", "scalar", false, check_idempotent_identities);
  add("scalar.idempotent_roundtrip", "scalar", false, check_idempotent_roundtrip);
  add("scalar.knorm_multiplicative", "scalar", false, check_knorm_multiplicative);
  add("scalar.euclid_submultiplicative", "scalar", false,
      check_euclid_submultiplicative);
  add("scalar.knorm_magnitude_identity", "scalar", false,
      check_knorm_magnitude_identity);
  add("scalar.invert_roundtrip", "scalar", false, check_invert_roundtrip);
  add("scalar.order_axioms", "scalar", false, check_order_axioms);
  add("scalar.dsup_least_upper_bound", "scalar", false, check_dsup_lub);

  // sets
  add("sets.knorm_ball_bc_convex", "sets", false, [](const auto& c, auto s) {
    return from_outcome(
        is_bc_convex_sampled(fixed_knorm_ball(), c.samples, s, c.dimension, c.tol_slack));
  });
  add("sets.knorm_ball_bc_balanced", "sets", false, [](const auto& c, auto s) {
    return from_outcome(is_bc_balanced_sampled(fixed_knorm_ball(), c.samples, s,
                                               c.dimension, c.tol_slack));
  });
  add("sets.knorm_ball_bc_absorbing", "sets", false, [](const auto& c, auto s) {
    return from_outcome(is_bc_absorbing_sampled(fixed_knorm_ball(), c.samples / 4 + 1, s,
                                                c.dimension, c.tol_slack));
  });
  add("sets.pair_bc_convex", "sets", false, [](const auto& c, auto s) {
    return from_outcome(
        is_bc_convex_sampled(fixed_ball_pair(), c.samples, s, c.dimension, c.tol_slack));
  });
  add("sets.pair_bc_balanced", "sets", false, [](const auto& c, auto s) {
    return from_outcome(is_bc_balanced_sampled(fixed_ball_pair(), c.samples, s,
                                               c.dimension, c.tol_slack));
  });
  add("sets.pair_bc_absorbing", "sets", false, [](const auto& c, auto s) {
    return from_outcome(is_bc_absorbing_sampled(fixed_ball_pair(), c.samples / 4 + 1, s,
                                                c.dimension, c.tol_slack));
  });
  add("sets.intersection_bc_convex", "sets", false, [](const auto& c, auto s) {
    SplitRng rng(s);
    const SetRep set = SetRep::pair(
        BodyRep::intersection(
            {BodyRep::ball(ComponentNorm::l2, 1.5), random_slab(rng, c.dimension)}),
        BodyRep::intersection(
            {random_slab(rng, c.dimension), BodyRep::ball(ComponentNorm::linf, 1.0)}),
        Openness::open);
    return from_outcome(
        is_bc_convex_sampled(set, c.samples, rng.next_u64(), c.dimension, c.tol_slack));
  });
  add("sets.scale_membership_equivalence", "sets", false,
      check_scale_membership_equivalence);
  add("sets.idempotent_sum_structural", "sets", false, [](const auto& c, auto s) {
    SplitRng rng(s);
    SampledOutcome merged = idempotent_sum_check(fixed_ball_pair(), c.samples / 2,
                                                 rng.next_u64(), c.dimension,
                                                 c.tol_slack);
    merged = merge(merged, idempotent_sum_check(fixed_knorm_ball(), c.samples / 2,
                                                rng.next_u64(), c.dimension,
                                                c.tol_slack));
    return from_outcome(merged);
  });
  add("sets.interior_closure_chain", "sets", false, check_interior_closure_chain);
  add("sets.cross_sum_not_bc_convex", "sets", true, [](const auto& c, auto s) {
    return from_outcome(
        is_bc_convex_sampled(SetRep::raw("cross_sum_lt_2"), c.samples, s, 1));
  });
  add("sets.cross_sum_idempotent_sum_fails", "sets", true, [](const auto& c, auto s) {
    return from_outcome(idempotent_sum_check(SetRep::raw("cross_sum_lt_2"), c.samples, s, 1));
  });
  add("sets.union_set_bc_absorbing", "sets", false, [](const auto& c, auto s) {
    return from_outcome(is_bc_absorbing_sampled(SetRep::raw("kball_half_union_one"),
                                                c.samples / 4 + 1, s, 1));
  });
  add("sets.union_set_e1_section_escapes", "sets", true, [](const auto& c, auto s) {
    return from_outcome(
        component_section_check(SetRep::raw("kball_half_union_one"), 1, c.samples, s, 1));
  });

  // gauge
  add("gauge.closed_form_matches_bisection", "gauge", false, check_gauge_oracle);
  add("gauge.seminorm_subadditive", "gauge", false, check_gauge_subadditive);
  add("gauge.seminorm_homogeneous_invertible", "gauge", false,
      [](const auto& c, auto s) { return check_gauge_homogeneous(c, s, false); });
  add("gauge.seminorm_homogeneous_null_cone", "gauge", false,
      [](const auto& c, auto s) { return check_gauge_homogeneous(c, s, true); });
  add("gauge.chain_inclusions", "gauge", false, check_gauge_chain);
  add("gauge.open_set_equals_strict_unit", "gauge", false, [](const auto& c, auto s) {
    return check_unit_set_identity(c, s, Openness::open);
  });
  add("gauge.closed_set_equals_nonstrict_unit", "gauge", false,
      [](const auto& c, auto s) {
        return check_unit_set_identity(c, s, Openness::closed);
      });
  add("gauge.scaling_identity", "gauge", false, check_gauge_scaling);
  add("gauge.monotone_in_set", "gauge", false, check_gauge_monotone);
  add("gauge.bounded_set_norm_separates", "gauge", false, check_bounded_set_norm);

  // seminorm
  add("seminorm.axioms_knorm", "seminorm", false, [](const auto& c, auto s) {
    return check_seminorm_axioms(c, s, {"knorm_l2", "knorm_l1_linf"});
  });
  add("seminorm.axioms_component_abs", "seminorm", false, [](const auto& c, auto s) {
    return check_seminorm_axioms(c, s, {"component_abs_1", "component_abs_2"});
  });
  add("seminorm.axioms_from_gauge", "seminorm", false, [](const auto& c, auto s) {
    return check_seminorm_axioms(c, s, {"from_gauge"});
  });
  add("seminorm.axioms_scaled", "seminorm", false, [](const auto& c, auto s) {
    return check_seminorm_axioms(c, s, {"scaled", "scaled_degenerate"});
  });
  add("seminorm.axioms_sup", "seminorm", false, [](const auto& c, auto s) {
    return check_seminorm_axioms(c, s, {"sup"});
  });
  add("seminorm.unit_sets_bc_properties", "seminorm", false,
      check_unit_sets_properties);
  add("seminorm.kernel_submodule", "seminorm", false, check_kernel_submodule);
  add("seminorm.component_abs_not_separating", "seminorm", true,
      [](const auto& c, auto s) { return check_separation(c, s, 0); });
  add("seminorm.knorm_separates", "seminorm", false,
      [](const auto& c, auto s) { return check_separation(c, s, 1); });
  add("seminorm.coverage_family_separates", "seminorm", false,
      [](const auto& c, auto s) { return check_separation(c, s, 2); });
  add("seminorm.sup_family_monotone", "seminorm", false, check_sup_family_monotone);
  add("seminorm.sup_knorm_identity", "seminorm", false, check_sup_knorm_identity);
  add("seminorm.neighborhood_consistency", "seminorm", false,
      check_neighborhood_consistency);

  // metric
  add("metric.axioms_knorm_family", "metric", false, [](const auto& c, auto s) {
    return from_outcome(metric_axiom_check(metric_family_constant(), c.samples, s,
                                           c.dimension, 64, c.tol_slack));
  });
  add("metric.axioms_increasing_family", "metric", false, [](const auto& c, auto s) {
    return from_outcome(metric_axiom_check(metric_family_increasing(c.dimension),
                                           c.samples, s, c.dimension, 64, c.tol_slack));
  });
  add("metric.translation_invariance_exact", "metric", false,
      check_metric_translation_invariance);
  add("metric.partial_sum_monotone_tail", "metric", false, check_metric_partial_sums);
  add("metric.constant_family_limit", "metric", false, check_metric_constant_limit);
  add("metric.topology_compat_scaled_family", "metric", false,
      [](const auto& c, auto s) { return check_metric_topology_compat(c, s, 0); });
  add("metric.topology_compat_section_family", "metric", false,
      [](const auto& c, auto s) { return check_metric_topology_compat(c, s, 1); });
  add("metric.non_separated_zero_distance", "metric", true,
      check_metric_non_separated);

  return defs;
}

}  // namespace battery_detail

inline const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> registry = battery_detail::build_registry();
  return registry;
}

}  // namespace bcg
