#pragma once

#include <string>

#include <json.hpp>

#include "bcgauge/seminorm.hpp"

namespace bcg {

using json = nlohmann::json;

// --------------------------- scalars ---------------------------

inline json to_json(Complex w) { return json::array({w.real(), w.imag()}); }

inline Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw parse_error("complex value must be [re, im]", 0);
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json to_json(const Bicomplex& z) {
  return json{{"w1", to_json(z.w1())}, {"w2", to_json(z.w2())}};
}

inline Bicomplex bicomplex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("w1") || !j.contains("w2"))
    throw parse_error("bicomplex value must be {\"w1\":[re,im],\"w2\":[re,im]}", 0);
  return {complex_from_json(j.at("w1")), complex_from_json(j.at("w2"))};
}

inline json to_json(Hyperbolic a) { return json{{"e1", a.a1()}, {"e2", a.a2()}}; }

inline Hyperbolic hyperbolic_from_json(const json& j) {
  if (!j.is_object() || !j.contains("e1") || !j.contains("e2"))
    throw parse_error("hyperbolic value must be {\"e1\":a1,\"e2\":a2}", 0);
  return {j.at("e1").get<double>(), j.at("e2").get<double>()};
}

// --------------------------- vectors ---------------------------

inline json to_json(const ModuleVector& x) {
  json entries = json::array();
  for (const Bicomplex& e : x.entries()) entries.push_back(to_json(e));
  return json{{"dim", x.dim()}, {"entries", entries}};
}

inline ModuleVector vector_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw parse_error("vector must be {\"dim\":n,\"entries\":[...]}", 0);
  const auto n = j.at("dim").get<std::size_t>();
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != n)
    throw parse_error("vector entry count disagrees with dim", 0);
  std::vector<Bicomplex> es;
  es.reserve(n);
  for (const json& e : entries) es.push_back(bicomplex_from_json(e));
  return ModuleVector(std::move(es));
}

// --------------------------- norms and bodies ---------------------------

inline ComponentNorm norm_from_string(const std::string& s) {
  if (s == "l2") return ComponentNorm::l2;
  if (s == "l1") return ComponentNorm::l1;
  if (s == "linf") return ComponentNorm::linf;
  throw parse_error("unknown norm kind: " + s, 0);
}

inline json to_json(const BodyRep& b) {
  return b.visit([](const auto& r) -> json {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, BodyRep::Ball>) {
      return json{{"kind", "ball"}, {"norm", to_string(r.norm)}, {"radius", r.radius}};
    } else if constexpr (std::is_same_v<T, BodyRep::ModSlab>) {
      json cs = json::array();
      for (const SlabConstraint& c : r.constraints) {
        json f = json::array();
        for (Complex v : c.functional) f.push_back(to_json(v));
        cs.push_back(json{{"f", f}, {"c", c.bound}});
      }
      return json{{"kind", "modslab"}, {"constraints", cs}};
    } else {
      json parts = json::array();
      for (const BodyRep& p : r.parts) parts.push_back(to_json(p));
      return json{{"kind", "intersection"}, {"parts", parts}};
    }
  });
}

inline BodyRep body_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw parse_error("body needs a \"kind\"", 0);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "ball") {
    const double r = j.at("radius").get<double>();
    if (!(r > 0.0)) throw parse_error("ball radius must be positive", 0);
    return BodyRep::ball(norm_from_string(j.at("norm").get<std::string>()), r);
  }
  if (kind == "modslab") {
    std::vector<SlabConstraint> cs;
    for (const json& cj : j.at("constraints")) {
      CVector f;
      for (const json& fj : cj.at("f")) f.push_back(complex_from_json(fj));
      const double c = cj.at("c").get<double>();
      if (!(c > 0.0)) throw parse_error("slab bound must be positive", 0);
      cs.push_back(SlabConstraint{std::move(f), c});
    }
    return BodyRep::slab(std::move(cs));
  }
  if (kind == "intersection") {
    std::vector<BodyRep> parts;
    for (const json& pj : j.at("parts")) parts.push_back(body_from_json(pj));
    return BodyRep::intersection(std::move(parts));
  }
  throw parse_error("unknown body kind: " + kind, 0);
}

// --------------------------- sets ---------------------------

inline const char* to_string(Openness o) {
  return o == Openness::open ? "open" : "closed";
}

inline Openness openness_from_string(const std::string& s) {
  if (s == "open") return Openness::open;
  if (s == "closed") return Openness::closed;
  throw parse_error("openness must be \"open\" or \"closed\"", 0);
}

inline json to_json(const SetRep& s) {
  return s.visit([](const auto& r) -> json {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, SetRep::IdempotentPair>) {
      return json{{"kind", "idempotent_pair"},
                  {"b1", to_json(r.b1)},
                  {"b2", to_json(r.b2)},
                  {"openness", to_string(r.openness)}};
    } else if constexpr (std::is_same_v<T, SetRep::KNormBall>) {
      return json{{"kind", "knorm_ball"},
                  {"radius", json{{"e1", r.radius.a1()}, {"e2", r.radius.a2()}}},
                  {"openness", to_string(r.openness)},
                  {"n1", to_string(r.n1)},
                  {"n2", to_string(r.n2)}};
    } else {
      return json{{"kind", "raw"}, {"name", r.name}};
    }
  });
}

inline SetRep set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw parse_error("set needs a \"kind\"", 0);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "idempotent_pair") {
    return SetRep::pair(body_from_json(j.at("b1")), body_from_json(j.at("b2")),
                        openness_from_string(j.at("openness").get<std::string>()));
  }
  if (kind == "knorm_ball") {
    const Hyperbolic radius = hyperbolic_from_json(j.at("radius"));
    const ComponentNorm n1 =
        j.contains("n1") ? norm_from_string(j.at("n1").get<std::string>())
                         : ComponentNorm::l2;
    const ComponentNorm n2 =
        j.contains("n2") ? norm_from_string(j.at("n2").get<std::string>())
                         : ComponentNorm::l2;
    return SetRep::knorm_ball(radius,
                              openness_from_string(j.at("openness").get<std::string>()),
                              n1, n2);
  }
  if (kind == "raw") return SetRep::raw(j.at("name").get<std::string>());
  throw parse_error("unknown set kind: " + kind, 0);
}

// --------------------------- seminorms ---------------------------

inline json to_json(const DSeminorm& p) {
  return p.visit([](const auto& r) -> json {
    using T = std::decay_t<decltype(r)>;
    if constexpr (std::is_same_v<T, DSeminorm::KNorm>) {
      return json{{"kind", "knorm"}, {"n1", to_string(r.n1)}, {"n2", to_string(r.n2)}};
    } else if constexpr (std::is_same_v<T, DSeminorm::ComponentAbs>) {
      return json{{"kind", "component_abs"}, {"which", r.which}, {"coord", r.coord}};
    } else if constexpr (std::is_same_v<T, DSeminorm::FromGauge>) {
      return json{{"kind", "from_gauge"},
                  {"set", to_json(r.set)},
                  {"separating", r.separating}};
    } else if constexpr (std::is_same_v<T, DSeminorm::Scaled>) {
      return json{{"kind", "scaled"},
                  {"base", to_json(*r.base)},
                  {"factor", json{{"e1", r.factor.a1()}, {"e2", r.factor.a2()}}}};
    } else {
      json items = json::array();
      for (const DSeminorm& q : r.items) items.push_back(to_json(q));
      return json{{"kind", "sup"}, {"items", items}};
    }
  });
}

inline DSeminorm seminorm_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw parse_error("seminorm needs a \"kind\"", 0);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "knorm") {
    const ComponentNorm n1 =
        j.contains("n1") ? norm_from_string(j.at("n1").get<std::string>())
                         : ComponentNorm::l2;
    const ComponentNorm n2 =
        j.contains("n2") ? norm_from_string(j.at("n2").get<std::string>())
                         : ComponentNorm::l2;
    return DSeminorm::knorm(n1, n2);
  }
  if (kind == "component_abs")
    return DSeminorm::component_abs(j.at("which").get<int>(),
                                    j.value("coord", std::size_t{0}));
  if (kind == "from_gauge")
    return DSeminorm::from_gauge(set_from_json(j.at("set")),
                                 j.value("separating", false));
  if (kind == "scaled")
    return DSeminorm::scaled(seminorm_from_json(j.at("base")),
                             hyperbolic_from_json(j.at("factor")));
  throw parse_error("unknown seminorm kind: " + kind, 0);
}

inline json to_json(const SeminormFamily& f) {
  json ps = json::array();
  for (const DSeminorm& p : f.seminorms) ps.push_back(to_json(p));
  return json{{"seminorms", ps}, {"separated_hint", f.separated_hint}};
}

inline SeminormFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("seminorms"))
    throw parse_error("family must be {\"seminorms\":[...]}", 0);
  std::vector<DSeminorm> ps;
  for (const json& pj : j.at("seminorms")) ps.push_back(seminorm_from_json(pj));
  return SeminormFamily(std::move(ps), j.value("separated_hint", false));
}

// --------------------------- gauge results ---------------------------

inline json to_json(const GaugeResult& g) {
  json out{{"e1", g.value.a1()},
           {"e2", g.value.a2()},
           {"method", g.method == GaugeMethod::closed_form ? "closed_form" : "bisection"}};
  if (g.method == GaugeMethod::bisection) out["tol"] = g.tol;
  return out;
}

}  // namespace bcg
