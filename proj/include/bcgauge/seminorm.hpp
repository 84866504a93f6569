#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bcgauge/gauge.hpp"

namespace bcg {

/// An evaluable hyperbolic-valued seminorm on BC^n.
///
/// Variants: the canonical dnorm (knorm), the single-coordinate section
/// seminorm |x_l[c]| e_l, the gauge of a structural set, a D+ multiple of
/// another seminorm, and the pointwise D-sup of finitely many seminorms.
class DSeminorm {
 public:
  struct KNorm {
    ComponentNorm n1, n2;
  };
  struct ComponentAbs {
    int which;  // 1 or 2
    std::size_t coord;
  };
  struct FromGauge {
    SetRep set;
    bool separating;
  };
  struct Scaled {
    std::shared_ptr<const DSeminorm> base;
    Hyperbolic factor;
  };
  struct Sup {
    std::vector<DSeminorm> items;
  };

  static DSeminorm knorm(ComponentNorm n1 = ComponentNorm::l2,
                         ComponentNorm n2 = ComponentNorm::l2) {
    return DSeminorm(KNorm{n1, n2});
  }
  static DSeminorm component_abs(int which, std::size_t coord = 0) {
    if (which != 1 && which != 2)
      throw invalid_value_error("component_abs section must be 1 or 2");
    return DSeminorm(ComponentAbs{which, coord});
  }
  static DSeminorm from_gauge(SetRep set, bool separating = false) {
    if (!set.is_structural())
      throw unsupported_error("from_gauge requires a structural set");
    return DSeminorm(FromGauge{std::move(set), separating});
  }
  static DSeminorm scaled(DSeminorm base, Hyperbolic factor) {
    if (!factor.in_nonneg_cone())
      throw invalid_value_error("scaling factor must lie in D+");
    return DSeminorm(Scaled{std::make_shared<const DSeminorm>(std::move(base)), factor});
  }
  static DSeminorm sup(std::vector<DSeminorm> items) {
    if (items.empty()) throw empty_collection_error("sup of no seminorms");
    return DSeminorm(Sup{std::move(items)});
  }

  Hyperbolic eval(const ModuleVector& x) const {
    return std::visit(
        [&](const auto& r) -> Hyperbolic {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, KNorm>) {
            return dnorm(x, r.n1, r.n2);
          } else if constexpr (std::is_same_v<T, ComponentAbs>) {
            if (r.coord >= x.dim())
              throw dimension_error("component_abs coordinate exceeds dimension");
            const double m = std::abs(x[r.coord].idempotent(r.which));
            return r.which == 1 ? Hyperbolic(m, 0.0) : Hyperbolic(0.0, m);
          } else if constexpr (std::is_same_v<T, FromGauge>) {
            return gauge(r.set, x).value;
          } else if constexpr (std::is_same_v<T, Scaled>) {
            return r.factor * r.base->eval(x);
          } else {
            Hyperbolic v = r.items.front().eval(x);
            for (std::size_t i = 1; i < r.items.size(); ++i) {
              const Hyperbolic w = r.items[i].eval(x);
              v = Hyperbolic(std::max(v.a1(), w.a1()), std::max(v.a2(), w.a2()));
            }
            return v;
          }
        },
        rep_);
  }

  /// The unit set {p <' 1} (strict) or {p <=' 1} (nonstrict) as a structural
  /// SetRep over component bodies.  `dim` sizes the slab functionals.
  SetRep unit_set(UnitSetKind kind, std::size_t dim) const {
    const Openness o = kind == UnitSetKind::strict ? Openness::open : Openness::closed;
    return std::visit(
        [&](const auto& r) -> SetRep {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, KNorm>) {
            return SetRep::knorm_ball(Hyperbolic::one(), o, r.n1, r.n2);
          } else if constexpr (std::is_same_v<T, ComponentAbs>) {
            if (r.coord >= dim)
              throw dimension_error("component_abs coordinate exceeds dimension");
            CVector f(dim);
            f[r.coord] = 1.0;
            BodyRep constrained = BodyRep::slab({SlabConstraint{f, 1.0}});
            return r.which == 1
                       ? SetRep::pair(constrained, BodyRep::whole_space(), o)
                       : SetRep::pair(BodyRep::whole_space(), constrained, o);
          } else if constexpr (std::is_same_v<T, FromGauge>) {
            return bcg::unit_set(r.set, kind);
          } else if constexpr (std::is_same_v<T, Scaled>) {
            const SetRep base = r.base->unit_set(kind, dim);
            const auto scaled_body = [&](int l) {
              const double fl = r.factor.component(l);
              return fl > 0.0 ? body_scaled(component_body(base, l), 1.0 / fl)
                              : BodyRep::whole_space();
            };
            return SetRep::pair(scaled_body(1), scaled_body(2), o);
          } else {
            std::vector<BodyRep> parts1, parts2;
            for (const DSeminorm& p : r.items) {
              const SetRep u = p.unit_set(kind, dim);
              parts1.push_back(component_body(u, 1));
              parts2.push_back(component_body(u, 2));
            }
            return SetRep::pair(BodyRep::intersection(std::move(parts1)),
                                BodyRep::intersection(std::move(parts2)), o);
          }
        },
        rep_);
  }

  /// Which idempotent sections and coordinates the kernel analysis can rule
  /// out structurally.  `all` covers every coordinate of that section.
  struct Coverage {
    bool all1 = false, all2 = false;
    std::set<std::size_t> coords1, coords2;

    void merge(const Coverage& other) {
      all1 = all1 || other.all1;
      all2 = all2 || other.all2;
      coords1.insert(other.coords1.begin(), other.coords1.end());
      coords2.insert(other.coords2.begin(), other.coords2.end());
    }
    bool separating_for_dim(std::size_t dim) const {
      const auto full = [&](bool all, const std::set<std::size_t>& coords) {
        if (all) return true;
        for (std::size_t c = 0; c < dim; ++c)
          if (!coords.count(c)) return false;
        return true;
      };
      return full(all1, coords1) && full(all2, coords2);
    }
  };

  Coverage coverage() const {
    return std::visit(
        [&](const auto& r) -> Coverage {
          using T = std::decay_t<decltype(r)>;
          Coverage cov;
          if constexpr (std::is_same_v<T, KNorm>) {
            cov.all1 = cov.all2 = true;
          } else if constexpr (std::is_same_v<T, ComponentAbs>) {
            (r.which == 1 ? cov.coords1 : cov.coords2).insert(r.coord);
          } else if constexpr (std::is_same_v<T, FromGauge>) {
            cov.all1 = cov.all2 = r.separating;
          } else if constexpr (std::is_same_v<T, Scaled>) {
            cov = r.base->coverage();
            if (!(r.factor.a1() > 0.0)) {
              cov.all1 = false;
              cov.coords1.clear();
            }
            if (!(r.factor.a2() > 0.0)) {
              cov.all2 = false;
              cov.coords2.clear();
            }
          } else {
            for (const DSeminorm& p : r.items) cov.merge(p.coverage());
          }
          return cov;
        },
        rep_);
  }

  template <class T>
  const T* get() const {
    return std::get_if<T>(&rep_);
  }
  template <class Visitor>
  auto visit(Visitor&& v) const {
    return std::visit(std::forward<Visitor>(v), rep_);
  }

 private:
  using Variant = std::variant<KNorm, ComponentAbs, FromGauge, Scaled, Sup>;
  explicit DSeminorm(Variant rep) : rep_(std::move(rep)) {}
  Variant rep_;
};

/// The gauge of a bounded structural set as a separating D-norm.
inline DSeminorm dnorm_from_bounded_set(const SetRep& s, std::size_t dim = 0) {
  if (!s.is_structural())
    throw unsupported_error("dnorm_from_bounded_set requires a structural set");
  if (!is_bounded(s, dim)) throw unbounded_error("set is not bounded");
  return DSeminorm::from_gauge(s, /*separating=*/true);
}

// ---------------------------------------------------------------------------
// Families and their topology
// ---------------------------------------------------------------------------

struct SeminormFamily {
  std::vector<DSeminorm> seminorms;
  bool separated_hint = false;

  explicit SeminormFamily(std::vector<DSeminorm> ps, bool hint = false)
      : seminorms(std::move(ps)), separated_hint(hint) {
    if (seminorms.empty()) throw empty_collection_error("seminorm family is empty");
  }

  std::size_t size() const { return seminorms.size(); }

  /// Constant extension p_n = p_L for n beyond the stored length.
  const DSeminorm& term(std::size_t n) const {  // 1-based
    return seminorms[std::min(n, seminorms.size()) - 1];
  }
};

/// q_m = pointwise D-sup of the first m seminorms.
inline DSeminorm sup_family(const SeminormFamily& f, std::size_t m) {
  if (m == 0 || m > f.size())
    throw std::out_of_range("sup_family index outside the family");
  std::vector<DSeminorm> items(f.seminorms.begin(), f.seminorms.begin() + m);
  return DSeminorm::sup(std::move(items));
}

/// The increasing family {q_1, ..., q_L} of partial sups.
inline SeminormFamily increasing_family(const SeminormFamily& f) {
  std::vector<DSeminorm> qs;
  qs.reserve(f.size());
  for (std::size_t m = 1; m <= f.size(); ++m) qs.push_back(sup_family(f, m));
  return SeminormFamily(std::move(qs), f.separated_hint);
}

/// Basic neighborhood U(x, eps, p_1..p_n) of the generated topology.
class Neighborhood {
 public:
  Neighborhood(ModuleVector center, Hyperbolic epsilon, std::vector<DSeminorm> ps)
      : center_(std::move(center)), epsilon_(epsilon), seminorms_(std::move(ps)) {
    if (!epsilon_.strictly_positive())
      throw invalid_value_error(
          "neighborhood radius must be strictly positive in both components");
    if (seminorms_.empty())
      throw empty_collection_error("neighborhood needs at least one seminorm");
  }

  const ModuleVector& center() const { return center_; }
  Hyperbolic epsilon() const { return epsilon_; }
  const std::vector<DSeminorm>& seminorms() const { return seminorms_; }

 private:
  ModuleVector center_;
  Hyperbolic epsilon_;
  std::vector<DSeminorm> seminorms_;
};

inline bool nbhd_contains(const Neighborhood& u, const ModuleVector& y) {
  const ModuleVector diff = y - u.center();
  for (const DSeminorm& p : u.seminorms())
    if (!lt_strict(p.eval(diff), u.epsilon())) return false;
  return true;
}

// ---------------------------------------------------------------------------
// The translation-invariant D-metric of a countable increasing family
// ---------------------------------------------------------------------------

/// Partial sum through N of  sum_n 2^-n p_n(x-y) / (1 + p_n(x-y)),  with the
/// fraction taken per idempotent component.  The tail is bounded by 2^-N.
inline Hyperbolic dmetric(const SeminormFamily& f, const ModuleVector& x,
                          const ModuleVector& y, int truncation = 64) {
  if (truncation < 1) throw invalid_value_error("metric truncation must be >= 1");
  const ModuleVector diff = x - y;
  double s1 = 0.0, s2 = 0.0;
  for (int n = 1; n <= truncation; ++n) {
    const Hyperbolic v = f.term(static_cast<std::size_t>(n)).eval(diff);
    const double w = std::ldexp(1.0, -n);
    s1 += w * (v.a1() / (1.0 + v.a1()));
    s2 += w * (v.a2() / (1.0 + v.a2()));
  }
  return {s1, s2};
}

/// delta such that d(x, y) <' delta forces p_n(x-y) <' eps, namely
/// 2^-n * eps / (1 + eps) componentwise.
inline Hyperbolic metric_topology_delta(std::size_t n, Hyperbolic eps) {
  if (!eps.strictly_positive())
    throw invalid_value_error("eps must be strictly positive in both components");
  const double w = std::ldexp(1.0, -static_cast<int>(n));
  return {w * eps.a1() / (1.0 + eps.a1()), w * eps.a2() / (1.0 + eps.a2())};
}

// ---------------------------------------------------------------------------
// Property checks
// ---------------------------------------------------------------------------

struct PropertyWitness {
  std::string what;
  std::optional<ModuleVector> x{}, y{}, z{};
  std::optional<Bicomplex> lambda{};
  double violation = 0.0;
};

struct PropertyOutcome {
  bool pass = true;
  long samples_run = 0;
  double max_violation = 0.0;
  std::optional<PropertyWitness> witness;
};

namespace detail {

inline ModuleVector gaussian_vector(SplitRng& rng, std::size_t dim, double sigma) {
  return ModuleVector::from_parts(sampling::gaussian_cvec(rng, dim, sigma),
                                  sampling::gaussian_cvec(rng, dim, sigma));
}

inline ModuleVector dyadic_vector(SplitRng& rng, std::size_t dim, double range) {
  CVector u1(dim), u2(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    u1[c] = Complex(rng.dyadic(range), rng.dyadic(range));
    u2[c] = Complex(rng.dyadic(range), rng.dyadic(range));
  }
  return ModuleVector::from_parts(u1, u2);
}

/// |lambda|_k components up to ~3, stratified over invertible and the two
/// null-cone rays.
inline Bicomplex stratified_scalar(SplitRng& rng, long stratum) {
  const double twopi = 6.283185307179586476925287;
  const Complex p1 = std::polar(rng.uniform(0.0, 3.0), rng.uniform(0.0, twopi));
  const Complex p2 = std::polar(rng.uniform(0.0, 3.0), rng.uniform(0.0, twopi));
  switch (stratum % 3) {
    case 1:
      return Bicomplex::from_idempotent(p1, 0.0);
    case 2:
      return Bicomplex::from_idempotent(0.0, p2);
    default:
      return Bicomplex::from_idempotent(p1, p2);
  }
}

inline bool close_rel(Hyperbolic a, Hyperbolic b, double tol_rel, double* err) {
  const double s1 = std::max({1.0, std::fabs(a.a1()), std::fabs(b.a1())});
  const double s2 = std::max({1.0, std::fabs(a.a2()), std::fabs(b.a2())});
  const double e = std::max(std::fabs(a.a1() - b.a1()) / s1,
                            std::fabs(a.a2() - b.a2()) / s2);
  if (err) *err = e;
  return e <= tol_rel;
}

}  // namespace detail

/// Verifies p(0) = 0, nonnegativity, |lambda|_k-homogeneity, subadditivity
/// and the reverse triangle inequality on random draws.
inline PropertyOutcome seminorm_axiom_check(const DSeminorm& p, long samples,
                                            std::uint64_t seed, std::size_t dim,
                                            double tol_rel = 1e-12,
                                            double slack = 1e-9) {
  SplitRng rng(seed);
  PropertyOutcome out;

  const Hyperbolic at_zero = p.eval(ModuleVector::zero(dim));
  ++out.samples_run;
  if (!(at_zero.a1() == 0.0 && at_zero.a2() == 0.0)) {
    out.pass = false;
    out.witness = PropertyWitness{"p(0) != 0", ModuleVector::zero(dim)};
    return out;
  }

  const auto fail = [&](PropertyWitness w) {
    out.pass = false;
    out.max_violation = std::max(out.max_violation, w.violation);
    out.witness = std::move(w);
  };

  for (long i = 0; i < samples; ++i) {
    ++out.samples_run;
    const double sigma = i % 3 == 0 ? 0.3 : (i % 3 == 1 ? 1.0 : 3.0);
    const ModuleVector x = detail::gaussian_vector(rng, dim, sigma);
    const ModuleVector y = detail::gaussian_vector(rng, dim, sigma);
    const Bicomplex lam = detail::stratified_scalar(rng, i);

    const Hyperbolic px = p.eval(x), py = p.eval(y);
    if (!px.in_nonneg_cone()) {
      fail({"p(x) outside D+", x, {}, {}, {}, -std::min(px.a1(), px.a2())});
      return out;
    }
    double err = 0.0;
    if (!detail::close_rel(p.eval(scalar_mul(lam, x)), knorm(lam) * px, tol_rel,
                           &err)) {
      fail({"homogeneity", x, {}, {}, lam, err});
      return out;
    }
    const Hyperbolic psum = p.eval(x + y);
    if (psum.a1() > px.a1() + py.a1() + slack ||
        psum.a2() > px.a2() + py.a2() + slack) {
      fail({"subadditivity", x, y, {}, {},
            std::max(psum.a1() - px.a1() - py.a1(), psum.a2() - px.a2() - py.a2())});
      return out;
    }
    const Hyperbolic rev = (px - py).abs_k();
    const Hyperbolic pdiff = p.eval(x - y);
    if (rev.a1() > pdiff.a1() + slack || rev.a2() > pdiff.a2() + slack) {
      fail({"reverse triangle", x, y, {}, {},
            std::max(rev.a1() - pdiff.a1(), rev.a2() - pdiff.a2())});
      return out;
    }
  }
  return out;
}

namespace detail {

/// Structural projection of x onto the kernel of p, where the kernel has a
/// coordinate description; nullopt when the kernel is only {0}.
inline std::optional<ModuleVector> kernel_project(const DSeminorm& p,
                                                  const ModuleVector& x) {
  if (const auto* ca = p.get<DSeminorm::ComponentAbs>()) {
    CVector x1 = x.part1(), x2 = x.part2();
    if (ca->coord >= x.dim()) return std::nullopt;
    (ca->which == 1 ? x1 : x2)[ca->coord] = 0.0;
    return ModuleVector::from_parts(x1, x2);
  }
  if (const auto* sc = p.get<DSeminorm::Scaled>()) {
    if (sc->base->get<DSeminorm::KNorm>()) {
      CVector x1 = x.part1(), x2 = x.part2();
      if (sc->factor.a1() > 0.0) x1.assign(x.dim(), Complex{});
      if (sc->factor.a2() > 0.0) x2.assign(x.dim(), Complex{});
      return ModuleVector::from_parts(x1, x2);
    }
    return kernel_project(*sc->base, x);
  }
  return std::nullopt;
}

}  // namespace detail

/// Generates kernel elements structurally and verifies that random
/// BC-linear combinations stay in the kernel (p evaluates to ~0).
inline PropertyOutcome kernel_check(const DSeminorm& p, long samples,
                                    std::uint64_t seed, std::size_t dim,
                                    double tol = 1e-12) {
  SplitRng rng(seed);
  PropertyOutcome out;
  for (long i = 0; i < samples; ++i) {
    ++out.samples_run;
    const auto kx = detail::kernel_project(p, detail::gaussian_vector(rng, dim, 1.0));
    const auto ky = detail::kernel_project(p, detail::gaussian_vector(rng, dim, 1.0));
    const ModuleVector x = kx ? *kx : ModuleVector::zero(dim);
    const ModuleVector y = ky ? *ky : ModuleVector::zero(dim);
    const Bicomplex lam = detail::stratified_scalar(rng, i);
    const Bicomplex gam = detail::stratified_scalar(rng, i + 1);
    const Hyperbolic v = p.eval(scalar_mul(lam, x) + scalar_mul(gam, y));
    out.max_violation = std::max({out.max_violation, v.a1(), v.a2()});
    if (v.a1() > tol || v.a2() > tol) {
      out.pass = false;
      out.witness = PropertyWitness{"kernel combination escapes", x, y, {}, lam,
                                    std::max(v.a1(), v.a2())};
      return out;
    }
  }
  return out;
}

/// Searches for nonzero x annihilated by every member of the family.  The
/// e_l-supported basis vectors are always tried first, followed by
/// structural kernel candidates and random draws.
inline PropertyOutcome is_separated_sampled(const SeminormFamily& f, long samples,
                                            std::uint64_t seed, std::size_t dim,
                                            double tol = 1e-12) {
  SplitRng rng(seed);
  PropertyOutcome out;

  const auto annihilated = [&](const ModuleVector& x) -> bool {
    if (x.is_zero()) return false;
    for (const DSeminorm& p : f.seminorms) {
      const Hyperbolic v = p.eval(x);
      if (v.a1() > tol || v.a2() > tol) return false;
    }
    return true;
  };

  std::vector<ModuleVector> candidates;
  for (std::size_t c = 0; c < dim; ++c) {
    CVector u(dim), zero(dim);
    u[c] = 1.0;
    candidates.push_back(ModuleVector::from_parts(u, zero));
    candidates.push_back(ModuleVector::from_parts(zero, u));
  }
  for (const DSeminorm& p : f.seminorms) {
    SplitRng sub = rng.split(1);
    if (auto k = detail::kernel_project(p, detail::gaussian_vector(sub, dim, 1.0)))
      candidates.push_back(*k);
  }

  for (const ModuleVector& x : candidates) {
    ++out.samples_run;
    if (annihilated(x)) {
      out.pass = false;
      out.witness = PropertyWitness{"nonzero point with all seminorms zero", x};
      return out;
    }
  }
  for (long i = out.samples_run; i < samples; ++i) {
    ++out.samples_run;
    const ModuleVector x = detail::gaussian_vector(rng, dim, 1.0);
    if (annihilated(x)) {
      out.pass = false;
      out.witness = PropertyWitness{"nonzero point with all seminorms zero", x};
      return out;
    }
  }
  return out;
}

/// Symmetry (bit-exact), d(x,x) = 0, the <=' triangle inequality with
/// truncation-aware slack, and separation of distinguishable points for
/// separated families.  Draws live on a dyadic grid so the exactness claims
/// are exact in binary64.
inline PropertyOutcome metric_axiom_check(const SeminormFamily& f, long samples,
                                          std::uint64_t seed, std::size_t dim,
                                          int truncation = 64, double slack = 1e-9) {
  SplitRng rng(seed);
  PropertyOutcome out;
  const double tri_slack = slack + std::ldexp(1.0, -truncation + 1);
  const bool separated = [&] {
    DSeminorm::Coverage cov;
    for (const DSeminorm& p : f.seminorms) cov.merge(p.coverage());
    return cov.separating_for_dim(dim);
  }();

  for (long i = 0; i < samples; ++i) {
    ++out.samples_run;
    const ModuleVector x = detail::dyadic_vector(rng, dim, 4.0);
    const ModuleVector y = detail::dyadic_vector(rng, dim, 4.0);
    const ModuleVector z = detail::dyadic_vector(rng, dim, 4.0);

    const Hyperbolic dxy = dmetric(f, x, y, truncation);
    const Hyperbolic dyx = dmetric(f, y, x, truncation);
    if (!(dxy == dyx)) {
      out.pass = false;
      out.witness = PropertyWitness{"symmetry", x, y};
      return out;
    }
    const Hyperbolic dxx = dmetric(f, x, x, truncation);
    if (!dxx.is_zero()) {
      out.pass = false;
      out.witness = PropertyWitness{"d(x,x) != 0", x};
      return out;
    }
    const Hyperbolic dxz = dmetric(f, x, z, truncation);
    const Hyperbolic dyz = dmetric(f, y, z, truncation);
    const double v = std::max(dxz.a1() - dxy.a1() - dyz.a1(),
                              dxz.a2() - dxy.a2() - dyz.a2());
    out.max_violation = std::max(out.max_violation, v);
    if (v > tri_slack) {
      out.pass = false;
      out.witness = PropertyWitness{"triangle inequality", x, y, z, {}, v};
      return out;
    }
    if (separated && dnorm(x - y).a1() + dnorm(x - y).a2() > 1e-6 &&
        !(dxy.a1() > 0.0 || dxy.a2() > 0.0)) {
      out.pass = false;
      out.witness = PropertyWitness{"distinct points at distance 0", x, y};
      return out;
    }
  }
  return out;
}

/// Samples the implication  d(x,y) <' delta  =>  p_n(x-y) <' eps  for the
/// n-th member of an increasing family.
inline PropertyOutcome metric_topology_compat_check(const SeminormFamily& increasing,
                                                    std::size_t n, Hyperbolic eps,
                                                    long samples, std::uint64_t seed,
                                                    std::size_t dim,
                                                    int truncation = 64) {
  if (n == 0 || static_cast<int>(n) > truncation)
    throw std::out_of_range("seminorm index outside the truncated series");
  SplitRng rng(seed);
  PropertyOutcome out;
  const Hyperbolic delta = metric_topology_delta(n, eps);
  const DSeminorm& pn = increasing.term(n);

  for (long i = 0; i < samples; ++i) {
    ++out.samples_run;
    // log-uniform magnitudes so both sides of the threshold are visited
    const double target = std::pow(10.0, rng.uniform(-6.0, 1.0));
    ModuleVector diff = detail::gaussian_vector(rng, dim, 1.0);
    const Hyperbolic nn = dnorm(diff);
    const double big = std::max(nn.a1(), nn.a2());
    if (big > 0.0) diff = scalar_mul(Hyperbolic(target / big), diff);
    const ModuleVector x = detail::gaussian_vector(rng, dim, 1.0);
    const ModuleVector y = x - diff;

    const Hyperbolic d = dmetric(increasing, x, y, truncation);
    if (lt_strict(d, delta) && !lt_strict(pn.eval(x - y), eps)) {
      out.pass = false;
      const Hyperbolic pv = pn.eval(x - y);
      out.max_violation = std::max(pv.a1() - eps.a1(), pv.a2() - eps.a2());
      out.witness = PropertyWitness{"neighborhood implication", x, y};
      return out;
    }
  }
  return out;
}

}  // namespace bcg
