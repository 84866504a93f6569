#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bcgauge/linalg.hpp"
#include "bcgauge/module.hpp"

namespace bcg {

enum class Openness { open, closed };

// ---------------------------------------------------------------------------
// Component bodies: convex balanced sets in C(i)^n containing 0
// ---------------------------------------------------------------------------

/// One linear constraint |<f, u>| <= c of a modulus slab.
struct SlabConstraint {
  CVector functional;
  double bound;
};

class BodyRep {
 public:
  struct Ball {
    ComponentNorm norm;
    double radius;
  };
  struct ModSlab {
    std::vector<SlabConstraint> constraints;  // empty means the whole space
  };
  struct Intersection {
    std::vector<BodyRep> parts;
  };

  static BodyRep ball(ComponentNorm norm, double radius) {
    if (!(radius >= 0.0) || !std::isfinite(radius))
      throw invalid_value_error("ball radius must be nonnegative and finite");
    return BodyRep(Ball{norm, radius});
  }
  static BodyRep slab(std::vector<SlabConstraint> constraints) {
    std::size_t dim = 0;
    for (const SlabConstraint& c : constraints) {
      if (c.functional.empty())
        throw invalid_value_error("slab functional must be nonempty");
      if (dim == 0) dim = c.functional.size();
      if (c.functional.size() != dim)
        throw dimension_error("slab functionals must share a dimension");
      if (!(c.bound >= 0.0) || !std::isfinite(c.bound))
        throw invalid_value_error("slab bound must be nonnegative and finite");
    }
    return BodyRep(ModSlab{std::move(constraints)});
  }
  static BodyRep whole_space() { return BodyRep(ModSlab{}); }
  static BodyRep intersection(std::vector<BodyRep> parts) {
    if (parts.empty()) throw invalid_value_error("intersection needs at least one part");
    return BodyRep(Intersection{std::move(parts)});
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
  using Variant = std::variant<Ball, ModSlab, Intersection>;
  explicit BodyRep(Variant rep) : rep_(std::move(rep)) {}
  Variant rep_;
};

/// Dimension the body pins down, if any (balls fit every dimension).
inline std::optional<std::size_t> body_required_dim(const BodyRep& b) {
  return b.visit([](const auto& r) -> std::optional<std::size_t> {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, BodyRep::Ball>) {
      return std::nullopt;
    } else if constexpr (std::is_same_v<T, BodyRep::ModSlab>) {
      if (r.constraints.empty()) return std::nullopt;
      return r.constraints.front().functional.size();
    } else {
      for (const BodyRep& p : r.parts)
        if (auto d = body_required_dim(p)) return d;
      return std::nullopt;
    }
  });
}

namespace detail {
inline bool openness_cmp(double lhs, double rhs, Openness o, double slack) {
  return o == Openness::closed ? lhs <= rhs + slack : lhs < rhs + slack;
}
}  // namespace detail

/// Membership of u in the body, with boundary decided by the openness flag.
/// `slack` loosens every defining inequality by an absolute amount; sampled
/// checks use 1e-9, exact queries use 0.
inline bool body_contains(const BodyRep& b, std::span<const Complex> u, Openness o,
                          double slack = 0.0) {
  return b.visit([&](const auto& r) -> bool {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, BodyRep::Ball>) {
      return detail::openness_cmp(component_norm(r.norm, u), r.radius, o, slack);
    } else if constexpr (std::is_same_v<T, BodyRep::ModSlab>) {
      for (const SlabConstraint& c : r.constraints) {
        if (c.functional.size() != u.size())
          throw dimension_error("slab constraint dimension disagrees with point");
        if (!detail::openness_cmp(std::abs(linalg::inner(c.functional, u)), c.bound, o,
                                  slack))
          return false;
      }
      return true;
    } else {
      for (const BodyRep& p : r.parts)
        if (!body_contains(p, u, o, slack)) return false;
      return true;
    }
  });
}

/// The body scaled by a nonnegative real factor (radii and bounds scale).
inline BodyRep body_scaled(const BodyRep& b, double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw invalid_value_error("body scale factor must be nonnegative and finite");
  return b.visit([&](const auto& r) -> BodyRep {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, BodyRep::Ball>) {
      return BodyRep::ball(r.norm, r.radius * t);
    } else if constexpr (std::is_same_v<T, BodyRep::ModSlab>) {
      std::vector<SlabConstraint> cs = r.constraints;
      for (SlabConstraint& c : cs) c.bound *= t;
      return BodyRep::slab(std::move(cs));
    } else {
      std::vector<BodyRep> parts;
      parts.reserve(r.parts.size());
      for (const BodyRep& p : r.parts) parts.push_back(body_scaled(p, t));
      return BodyRep::intersection(std::move(parts));
    }
  });
}

/// Structural boundedness: balls always, slabs iff the constraint functionals
/// span C(i)^n, intersections iff some part is bounded.
inline bool body_bounded(const BodyRep& b, std::size_t dim) {
  return b.visit([&](const auto& r) -> bool {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, BodyRep::Ball>) {
      return true;
    } else if constexpr (std::is_same_v<T, BodyRep::ModSlab>) {
      if (r.constraints.empty()) return false;
      linalg::CMatrix m(r.constraints.size(), dim);
      for (std::size_t j = 0; j < r.constraints.size(); ++j) {
        if (r.constraints[j].functional.size() != dim)
          throw dimension_error("slab constraint dimension disagrees with query");
        for (std::size_t c = 0; c < dim; ++c)
          m.at(j, c) = r.constraints[j].functional[c];
      }
      return linalg::rank(std::move(m)) == dim;
    } else {
      for (const BodyRep& p : r.parts)
        if (body_bounded(p, dim)) return true;
      return false;
    }
  });
}

/// An l2 circumradius bound: every u in the body satisfies ||u||_2 <= R.
/// Infinity when the body is unbounded.
inline double body_circumradius_l2(const BodyRep& b, std::size_t dim) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return b.visit([&](const auto& r) -> double {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, BodyRep::Ball>) {
      switch (r.norm) {
        case ComponentNorm::l2:
        case ComponentNorm::l1:
          return r.radius;
        case ComponentNorm::linf:
          return r.radius * std::sqrt(static_cast<double>(dim));
      }
      return inf;
    } else if constexpr (std::is_same_v<T, BodyRep::ModSlab>) {
      if (r.constraints.empty()) return inf;
      linalg::CMatrix m(r.constraints.size(), dim);
      for (std::size_t j = 0; j < r.constraints.size(); ++j)
        for (std::size_t c = 0; c < dim; ++c)
          m.at(j, c) = std::conj(r.constraints[j].functional[c]);
      std::vector<std::size_t> pivots;
      if (linalg::rank(m, 1e-9, &pivots) != dim) return inf;
      // ||u||_2 <= ||G^-1||_F * sqrt(sum of selected bounds^2) for the square
      // subsystem G of independent constraint rows.
      linalg::CMatrix g(dim, dim);
      double bound_sq = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        const SlabConstraint& c = r.constraints[pivots[j]];
        for (std::size_t k = 0; k < dim; ++k) g.at(j, k) = std::conj(c.functional[k]);
        bound_sq += c.bound * c.bound;
      }
      linalg::CMatrix ginv(dim, dim);
      if (!linalg::invert(std::move(g), ginv)) return inf;
      return linalg::frobenius_norm(ginv) * std::sqrt(bound_sq);
    } else {
      double best = inf;
      for (const BodyRep& p : r.parts)
        best = std::min(best, body_circumradius_l2(p, dim));
      return best;
    }
  });
}

/// A rough inradius-like scale used to size sampling distributions.
inline double body_sampling_scale(const BodyRep& b) {
  return b.visit([&](const auto& r) -> double {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, BodyRep::Ball>) {
      return r.radius > 0.0 ? r.radius : 1.0;
    } else if constexpr (std::is_same_v<T, BodyRep::ModSlab>) {
      double scale = 1.0;
      for (const SlabConstraint& c : r.constraints) {
        const double fn = component_norm(ComponentNorm::l2, c.functional);
        if (fn > 0.0 && c.bound > 0.0) scale = std::min(scale, c.bound / fn);
      }
      return scale;
    } else {
      double scale = 1.0;
      for (const BodyRep& p : r.parts) scale = std::min(scale, body_sampling_scale(p));
      return scale;
    }
  });
}

// ---------------------------------------------------------------------------
// Subsets of BC^n
// ---------------------------------------------------------------------------

class SetRep {
 public:
  struct IdempotentPair {
    BodyRep b1, b2;
    Openness openness;
  };
  struct KNormBall {
    Hyperbolic radius;
    Openness openness;
    ComponentNorm n1, n2;
  };
  /// Membership-only set given by a named oracle from the registry, with
  /// probe points the sampled checks always visit.
  struct Raw {
    std::string name;
    std::function<bool(const ModuleVector&)> member;
    std::size_t dim;
    std::vector<ModuleVector> probes;
  };

  static SetRep pair(BodyRep b1, BodyRep b2, Openness o) {
    return SetRep(IdempotentPair{std::move(b1), std::move(b2), o});
  }
  static SetRep knorm_ball(Hyperbolic radius, Openness o,
                           ComponentNorm n1 = ComponentNorm::l2,
                           ComponentNorm n2 = ComponentNorm::l2) {
    if (!(radius.a1() > 0.0 && radius.a2() > 0.0))
      throw invalid_value_error("knorm ball radius must be strictly positive");
    return SetRep(KNormBall{radius, o, n1, n2});
  }
  static SetRep raw(const std::string& name);  // defined after the registry

  bool is_structural() const { return !std::holds_alternative<Raw>(rep_); }

  template <class T>
  const T* get() const {
    return std::get_if<T>(&rep_);
  }
  template <class Visitor>
  auto visit(Visitor&& v) const {
    return std::visit(std::forward<Visitor>(v), rep_);
  }

 private:
  using Variant = std::variant<IdempotentPair, KNormBall, Raw>;
  explicit SetRep(Variant rep) : rep_(std::move(rep)) {}
  Variant rep_;
};

/// Registry of named membership oracles: the two counterexample sets and a
/// non-absorbing fixture.
inline const std::vector<SetRep::Raw>& raw_set_registry() {
  static const std::vector<SetRep::Raw> registry = [] {
    std::vector<SetRep::Raw> r;
    const auto sc = [](const Bicomplex& z) { return ModuleVector::scalar(z); };

    // { z : |z1| + |z2| < 2 } -- convex components, not BC-convex.
    r.push_back(SetRep::Raw{
        "cross_sum_lt_2",
        [](const ModuleVector& x) {
          return std::abs(x[0].z1()) + std::abs(x[0].z2()) < 2.0;
        },
        1,
        {sc(Bicomplex::zero()), sc(Bicomplex::from_idempotent(1.5, 0.0)),
         sc(Bicomplex::from_idempotent(0.0, 1.5)), sc(Bicomplex(0.5)),
         sc(Bicomplex::e1()), sc(Bicomplex::e2()), sc(Bicomplex(1.5))}});

    // { z : |z|_k <' 1/2 } union {1} -- BC-absorbing, but e1*B escapes B.
    r.push_back(SetRep::Raw{
        "kball_half_union_one",
        [](const ModuleVector& x) {
          const Bicomplex& z = x[0];
          if (z == Bicomplex::one()) return true;
          return std::abs(z.z1()) < 0.5 && std::abs(z.z2()) < 0.5;
        },
        1,
        {sc(Bicomplex::zero()), sc(Bicomplex::one()), sc(Bicomplex(0.25)),
         sc(Bicomplex::from_idempotent(0.4, 0.0)),
         sc(Bicomplex::from_idempotent(0.0, 0.4))}});

    // { z : |z1| < 1, z2 = 0 } -- not BC-absorbing along z2 directions.
    r.push_back(SetRep::Raw{
        "e1_disk_slice",
        [](const ModuleVector& x) {
          return std::abs(x[0].z1()) < 1.0 && x[0].z2() == Complex{};
        },
        1,
        {sc(Bicomplex::zero()), sc(Bicomplex::from_idempotent(0.5, 0.0))}});
    return r;
  }();
  return registry;
}

inline SetRep SetRep::raw(const std::string& name) {
  for (const Raw& entry : raw_set_registry())
    if (entry.name == name) return SetRep(Variant(entry));
  throw invalid_value_error("unknown raw set: " + name);
}

inline std::optional<std::size_t> set_required_dim(const SetRep& s) {
  return s.visit([](const auto& r) -> std::optional<std::size_t> {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, SetRep::IdempotentPair>) {
      if (auto d = body_required_dim(r.b1)) return d;
      return body_required_dim(r.b2);
    } else if constexpr (std::is_same_v<T, SetRep::KNormBall>) {
      return std::nullopt;
    } else {
      return r.dim;
    }
  });
}

/// Exact membership (slack 0) or slack-loosened membership for sampled
/// checks.  Raw oracles ignore the slack.
inline bool contains(const SetRep& s, const ModuleVector& x, double slack = 0.0) {
  if (auto d = set_required_dim(s); d && *d != x.dim())
    throw dimension_error("set and point dimensions disagree");
  return s.visit([&](const auto& r) -> bool {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, SetRep::IdempotentPair>) {
      const CVector x1 = x.part1(), x2 = x.part2();
      return body_contains(r.b1, x1, r.openness, slack) &&
             body_contains(r.b2, x2, r.openness, slack);
    } else if constexpr (std::is_same_v<T, SetRep::KNormBall>) {
      const Hyperbolic v = dnorm(x, r.n1, r.n2);
      return detail::openness_cmp(v.a1(), r.radius.a1(), r.openness, slack) &&
             detail::openness_cmp(v.a2(), r.radius.a2(), r.openness, slack);
    } else {
      return r.member(x);
    }
  });
}

namespace detail {
inline unsupported_error raw_unsupported(const char* op) {
  return unsupported_error(std::string(op) + " is not defined for raw predicate sets");
}
}  // namespace detail

/// The l-th component body (l in {1,2}).
inline BodyRep component_body(const SetRep& s, int l) {
  return s.visit([&](const auto& r) -> BodyRep {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, SetRep::IdempotentPair>) {
      return l == 1 ? r.b1 : r.b2;
    } else if constexpr (std::is_same_v<T, SetRep::KNormBall>) {
      return BodyRep::ball(l == 1 ? r.n1 : r.n2, r.radius.component(l));
    } else {
      throw detail::raw_unsupported("component_body");
    }
  });
}

inline Openness openness_of(const SetRep& s) {
  return s.visit([](const auto& r) -> Openness {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, SetRep::Raw>) {
      throw detail::raw_unsupported("openness");
    } else {
      return r.openness;
    }
  });
}

/// lambda * S for structural S: component radii and bounds multiply by the
/// idempotent components of |lambda|_k.
inline SetRep scale_set(const Bicomplex& lambda, const SetRep& s) {
  const Hyperbolic f = knorm(lambda);
  return s.visit([&](const auto& r) -> SetRep {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, SetRep::IdempotentPair>) {
      return SetRep::pair(body_scaled(r.b1, f.a1()), body_scaled(r.b2, f.a2()),
                          r.openness);
    } else if constexpr (std::is_same_v<T, SetRep::KNormBall>) {
      return SetRep::knorm_ball(r.radius * f, r.openness, r.n1, r.n2);
    } else {
      throw detail::raw_unsupported("scale_set");
    }
  });
}

inline SetRep with_openness(const SetRep& s, Openness o) {
  return s.visit([&](const auto& r) -> SetRep {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, SetRep::IdempotentPair>) {
      return SetRep::pair(r.b1, r.b2, o);
    } else if constexpr (std::is_same_v<T, SetRep::KNormBall>) {
      return SetRep::knorm_ball(r.radius, o, r.n1, r.n2);
    } else {
      throw detail::raw_unsupported("interior/closure");
    }
  });
}

/// Interior and closure act on the representation by setting the openness
/// flag componentwise; the component decomposition is preserved.
inline SetRep interior(const SetRep& s) { return with_openness(s, Openness::open); }
inline SetRep closure(const SetRep& s) { return with_openness(s, Openness::closed); }

/// Structural boundedness of both component bodies.  `dim` resolves bodies
/// (balls) that fit every dimension.
inline bool is_bounded(const SetRep& s, std::size_t dim = 0) {
  if (auto d = set_required_dim(s)) dim = *d;
  if (dim == 0) dim = 1;
  return s.visit([&](const auto& r) -> bool {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, SetRep::IdempotentPair>) {
      return body_bounded(r.b1, dim) && body_bounded(r.b2, dim);
    } else if constexpr (std::is_same_v<T, SetRep::KNormBall>) {
      return true;
    } else {
      throw detail::raw_unsupported("is_bounded");
    }
  });
}

}  // namespace bcg
