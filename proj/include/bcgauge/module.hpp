#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "bcgauge/scalar.hpp"

namespace bcg {

using CVector = std::vector<Complex>;

enum class ComponentNorm { l2, l1, linf };

inline double component_norm(ComponentNorm kind, std::span<const Complex> u) {
  switch (kind) {
    case ComponentNorm::l2: {
      double s = 0.0;
      for (Complex c : u) s += std::norm(c);
      return std::sqrt(s);
    }
    case ComponentNorm::l1: {
      double s = 0.0;
      for (Complex c : u) s += std::abs(c);
      return s;
    }
    case ComponentNorm::linf: {
      double m = 0.0;
      for (Complex c : u) m = std::max(m, std::abs(c));
      return m;
    }
  }
  throw invalid_value_error("unknown component norm");
}

inline const char* to_string(ComponentNorm kind) {
  switch (kind) {
    case ComponentNorm::l2: return "l2";
    case ComponentNorm::l1: return "l1";
    case ComponentNorm::linf: return "linf";
  }
  return "?";
}

/// An element of BC^n.  The idempotent split gives two complex n-vectors
/// (part 1 and part 2) with x = e1*x1 + e2*x2, reassembled entrywise.
class ModuleVector {
 public:
  explicit ModuleVector(std::size_t dim) : entries_(dim) {
    if (dim == 0) throw invalid_value_error("module vector dimension must be positive");
  }
  explicit ModuleVector(std::vector<Bicomplex> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
      throw invalid_value_error("module vector dimension must be positive");
  }

  static ModuleVector from_parts(const CVector& x1, const CVector& x2) {
    if (x1.size() != x2.size() || x1.empty())
      throw dimension_error("idempotent parts must share a positive dimension");
    std::vector<Bicomplex> e;
    e.reserve(x1.size());
    for (std::size_t c = 0; c < x1.size(); ++c)
      e.push_back(Bicomplex::from_idempotent(x1[c], x2[c]));
    return ModuleVector(std::move(e));
  }

  static ModuleVector zero(std::size_t dim) { return ModuleVector(dim); }

  /// Embeds a scalar as a 1-dimensional vector.
  static ModuleVector scalar(const Bicomplex& z) {
    return ModuleVector(std::vector<Bicomplex>{z});
  }

  std::size_t dim() const { return entries_.size(); }
  const Bicomplex& operator[](std::size_t c) const { return entries_[c]; }
  Bicomplex& operator[](std::size_t c) { return entries_[c]; }
  const std::vector<Bicomplex>& entries() const { return entries_; }

  CVector part(int l) const {
    CVector out(entries_.size());
    for (std::size_t c = 0; c < entries_.size(); ++c) out[c] = entries_[c].idempotent(l);
    return out;
  }
  CVector part1() const { return part(1); }
  CVector part2() const { return part(2); }

  bool is_zero() const {
    for (const Bicomplex& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
    check_dims(a, b);
    ModuleVector out(a.dim());
    for (std::size_t c = 0; c < a.dim(); ++c) out[c] = a[c] + b[c];
    return out;
  }
  friend ModuleVector operator-(const ModuleVector& a, const ModuleVector& b) {
    check_dims(a, b);
    ModuleVector out(a.dim());
    for (std::size_t c = 0; c < a.dim(); ++c) out[c] = a[c] - b[c];
    return out;
  }
  friend ModuleVector operator-(const ModuleVector& a) {
    ModuleVector out(a.dim());
    for (std::size_t c = 0; c < a.dim(); ++c) out[c] = -a[c];
    return out;
  }
  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  static void check_dims(const ModuleVector& a, const ModuleVector& b) {
    if (a.dim() != b.dim()) throw dimension_error("module vector dimensions disagree");
  }
  std::vector<Bicomplex> entries_;
};

inline ModuleVector scalar_mul(const Bicomplex& lambda, const ModuleVector& x) {
  ModuleVector out(x.dim());
  for (std::size_t c = 0; c < x.dim(); ++c) out[c] = lambda * x[c];
  return out;
}

inline ModuleVector scalar_mul(Hyperbolic lambda, const ModuleVector& x) {
  return scalar_mul(Bicomplex::from_hyperbolic(lambda), x);
}

inline ModuleVector translate(const ModuleVector& y, const ModuleVector& x) {
  return x + y;
}

/// ||x||_D = n1(x1) e1 + n2(x2) e2, the canonical hyperbolic-valued norm.
inline Hyperbolic dnorm(const ModuleVector& x, ComponentNorm n1 = ComponentNorm::l2,
                        ComponentNorm n2 = ComponentNorm::l2) {
  const CVector x1 = x.part1(), x2 = x.part2();
  return {component_norm(n1, x1), component_norm(n2, x2)};
}

/// ||x|| = sqrt((n1(x1)^2 + n2(x2)^2) / 2), the Euclidean-type real norm.
inline double euclid_type_norm(const ModuleVector& x,
                               ComponentNorm n1 = ComponentNorm::l2,
                               ComponentNorm n2 = ComponentNorm::l2) {
  const CVector x1 = x.part1(), x2 = x.part2();
  const double m1 = component_norm(n1, x1), m2 = component_norm(n2, x2);
  return std::sqrt((m1 * m1 + m2 * m2) / 2.0);
}

inline std::string to_string(const ModuleVector& x) {
  std::string out = "(";
  for (std::size_t c = 0; c < x.dim(); ++c) {
    if (c) out += ", ";
    out += to_string(x[c]);
  }
  return out + ")";
}

}  // namespace bcg
