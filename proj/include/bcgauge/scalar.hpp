#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "bcgauge/errors.hpp"

namespace bcg {

using Complex = std::complex<double>;

/// Absolute magnitude below which an idempotent component counts as zero
/// when classifying zero divisors.
inline constexpr double kNullConeTol = 1e-12;

inline bool is_finite(Complex w) {
  return std::isfinite(w.real()) && std::isfinite(w.imag());
}

// ---------------------------------------------------------------------------
// Hyperbolic scalars
// ---------------------------------------------------------------------------

/// A hyperbolic number stored by its idempotent components (a1, a2),
/// i.e. a1*e1 + a2*e2.  The cartesian view is beta1 + k*beta2 with
/// beta1 = (a1+a2)/2 and beta2 = (a1-a2)/2.
class Hyperbolic {
 public:
  constexpr Hyperbolic() = default;
  /// Real numbers embed diagonally: v -> v*e1 + v*e2.
  constexpr Hyperbolic(double v) : a1_(v), a2_(v) {}
  constexpr Hyperbolic(double a1, double a2) : a1_(a1), a2_(a2) {}

  static Hyperbolic from_cartesian(double beta1, double beta2) {
    return {beta1 + beta2, beta1 - beta2};
  }
  static constexpr Hyperbolic zero() { return {0.0, 0.0}; }
  static constexpr Hyperbolic one() { return {1.0, 1.0}; }
  static constexpr Hyperbolic e1() { return {1.0, 0.0}; }
  static constexpr Hyperbolic e2() { return {0.0, 1.0}; }

  constexpr double a1() const { return a1_; }
  constexpr double a2() const { return a2_; }
  constexpr double component(int l) const { return l == 1 ? a1_ : a2_; }
  constexpr double beta1() const { return (a1_ + a2_) / 2.0; }
  constexpr double beta2() const { return (a1_ - a2_) / 2.0; }

  /// Membership of D+: both idempotent components nonnegative.
  constexpr bool in_nonneg_cone() const { return a1_ >= 0.0 && a2_ >= 0.0; }
  constexpr bool strictly_positive() const { return a1_ > 0.0 && a2_ > 0.0; }
  constexpr bool is_zero() const { return a1_ == 0.0 && a2_ == 0.0; }

  /// Componentwise absolute value (the k-modulus of a hyperbolic number).
  Hyperbolic abs_k() const { return {std::fabs(a1_), std::fabs(a2_)}; }

  friend constexpr Hyperbolic operator+(Hyperbolic a, Hyperbolic b) {
    return {a.a1_ + b.a1_, a.a2_ + b.a2_};
  }
  friend constexpr Hyperbolic operator-(Hyperbolic a, Hyperbolic b) {
    return {a.a1_ - b.a1_, a.a2_ - b.a2_};
  }
  friend constexpr Hyperbolic operator-(Hyperbolic a) { return {-a.a1_, -a.a2_}; }
  friend constexpr Hyperbolic operator*(Hyperbolic a, Hyperbolic b) {
    return {a.a1_ * b.a1_, a.a2_ * b.a2_};
  }
  /// Componentwise division; both components of b must be nonzero.
  friend constexpr Hyperbolic operator/(Hyperbolic a, Hyperbolic b) {
    return {a.a1_ / b.a1_, a.a2_ / b.a2_};
  }
  friend constexpr bool operator==(Hyperbolic a, Hyperbolic b) {
    return a.a1_ == b.a1_ && a.a2_ == b.a2_;
  }
  friend constexpr bool operator!=(Hyperbolic a, Hyperbolic b) { return !(a == b); }

 private:
  double a1_ = 0.0;
  double a2_ = 0.0;
};

enum class Order { less, equal, greater, incomparable };

/// Outcome of comparing two hyperbolic numbers under the partial order <=',
/// where a <=' b iff b - a lies in D+.  `lt_strict` is the artifact's strict
/// order: the difference is positive in both idempotent components.
struct OrderResult {
  Order relation;
  bool leq;
  bool lt_strict;
};

inline OrderResult hyp_cmp(Hyperbolic a, Hyperbolic b) {
  const double d1 = b.a1() - a.a1();
  const double d2 = b.a2() - a.a2();
  const bool le = d1 >= 0.0 && d2 >= 0.0;
  const bool ge = d1 <= 0.0 && d2 <= 0.0;
  Order rel;
  if (le && ge) {
    rel = Order::equal;
  } else if (le) {
    rel = Order::less;
  } else if (ge) {
    rel = Order::greater;
  } else {
    rel = Order::incomparable;
  }
  return {rel, le, d1 > 0.0 && d2 > 0.0};
}

inline bool leq(Hyperbolic a, Hyperbolic b) { return hyp_cmp(a, b).leq; }
inline bool lt_strict(Hyperbolic a, Hyperbolic b) { return hyp_cmp(a, b).lt_strict; }

inline Hyperbolic d_sup(std::span<const Hyperbolic> values) {
  if (values.empty()) throw empty_collection_error("d_sup of empty collection");
  double s1 = values[0].a1(), s2 = values[0].a2();
  for (const Hyperbolic& v : values.subspan(1)) {
    s1 = std::max(s1, v.a1());
    s2 = std::max(s2, v.a2());
  }
  return {s1, s2};
}

inline Hyperbolic d_inf(std::span<const Hyperbolic> values) {
  if (values.empty()) throw empty_collection_error("d_inf of empty collection");
  double s1 = values[0].a1(), s2 = values[0].a2();
  for (const Hyperbolic& v : values.subspan(1)) {
    s1 = std::min(s1, v.a1());
    s2 = std::min(s2, v.a2());
  }
  return {s1, s2};
}

inline Hyperbolic d_sup(std::initializer_list<Hyperbolic> values) {
  return d_sup(std::span<const Hyperbolic>(values.begin(), values.size()));
}
inline Hyperbolic d_inf(std::initializer_list<Hyperbolic> values) {
  return d_inf(std::span<const Hyperbolic>(values.begin(), values.size()));
}

// ---------------------------------------------------------------------------
// Bicomplex scalars
// ---------------------------------------------------------------------------

/// A bicomplex number Z = w1 + j*w2 with complex w1, w2.  The cartesian pair
/// is the stored representation; the idempotent view (z1, z2) with
/// z1 = w1 - i*w2 and z2 = w1 + i*w2 is computed on demand.
class Bicomplex {
 public:
  constexpr Bicomplex() = default;
  Bicomplex(double real) : w1_(real, 0.0), w2_(0.0, 0.0) {}
  Bicomplex(Complex w1, Complex w2 = Complex{}) : w1_(w1), w2_(w2) {
    if (!is_finite(w1_) || !is_finite(w2_))
      throw invalid_value_error("bicomplex components must be finite");
  }

  static Bicomplex from_idempotent(Complex z1, Complex z2) {
    // Z = e1*z1 + e2*z2, with e1 = (1+k)/2 and e2 = (1-k)/2.
    const Complex w1 = (z1 + z2) / 2.0;
    const Complex w2 = Complex(0.0, 1.0) * (z1 - z2) / 2.0;
    return {w1, w2};
  }
  static Bicomplex from_hyperbolic(Hyperbolic a) {
    return from_idempotent(Complex(a.a1(), 0.0), Complex(a.a2(), 0.0));
  }

  static Bicomplex zero() { return {}; }
  static Bicomplex one() { return {1.0}; }
  static Bicomplex unit_i() { return {Complex(0.0, 1.0), Complex(0.0, 0.0)}; }
  static Bicomplex unit_j() { return {Complex(0.0, 0.0), Complex(1.0, 0.0)}; }
  static Bicomplex unit_k() { return {Complex(0.0, 0.0), Complex(0.0, 1.0)}; }
  static Bicomplex e1() { return from_idempotent(1.0, 0.0); }
  static Bicomplex e2() { return from_idempotent(0.0, 1.0); }

  constexpr Complex w1() const { return w1_; }
  constexpr Complex w2() const { return w2_; }
  Complex z1() const { return w1_ - Complex(0.0, 1.0) * w2_; }
  Complex z2() const { return w1_ + Complex(0.0, 1.0) * w2_; }
  Complex idempotent(int l) const { return l == 1 ? z1() : z2(); }

  bool is_zero() const { return w1_ == Complex{} && w2_ == Complex{}; }

  friend Bicomplex operator+(const Bicomplex& a, const Bicomplex& b) {
    return {a.w1_ + b.w1_, a.w2_ + b.w2_};
  }
  friend Bicomplex operator-(const Bicomplex& a, const Bicomplex& b) {
    return {a.w1_ - b.w1_, a.w2_ - b.w2_};
  }
  friend Bicomplex operator-(const Bicomplex& a) { return {-a.w1_, -a.w2_}; }
  friend Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
    // (w1 + j w2)(w3 + j w4) = (w1 w3 - w2 w4) + j (w2 w3 + w1 w4)
    return {a.w1_ * b.w1_ - a.w2_ * b.w2_, a.w2_ * b.w1_ + a.w1_ * b.w2_};
  }
  friend bool operator==(const Bicomplex& a, const Bicomplex& b) {
    return a.w1_ == b.w1_ && a.w2_ == b.w2_;
  }
  friend bool operator!=(const Bicomplex& a, const Bicomplex& b) { return !(a == b); }

 private:
  Complex w1_;
  Complex w2_;
};

enum class Conjugation { dag1, dag2, dag3 };
enum class ModulusKind { i_sq, j_sq, k_sq };

inline Bicomplex conj(const Bicomplex& z, Conjugation kind) {
  switch (kind) {
    case Conjugation::dag1:
      return {std::conj(z.w1()), std::conj(z.w2())};
    case Conjugation::dag2:
      return {z.w1(), -z.w2()};
    case Conjugation::dag3:
      return {std::conj(z.w1()), -std::conj(z.w2())};
  }
  throw invalid_value_error("unknown conjugation");
}

/// The squared modulus paired with each conjugation:
///   i_sq = Z * Z^dag2  (complex valued, zero j-part)
///   j_sq = Z * Z^dag1  (C(j) valued, real parts)
///   k_sq = Z * Z^dag3  (hyperbolic valued)
inline Bicomplex modulus_squared(const Bicomplex& z, ModulusKind kind) {
  switch (kind) {
    case ModulusKind::i_sq:
      return z * conj(z, Conjugation::dag2);
    case ModulusKind::j_sq:
      return z * conj(z, Conjugation::dag1);
    case ModulusKind::k_sq:
      return z * conj(z, Conjugation::dag3);
  }
  throw invalid_value_error("unknown modulus kind");
}

/// True iff Z is a zero divisor: nonzero with w1^2 + w2^2 = 0, equivalently
/// exactly one idempotent component of magnitude <= kNullConeTol.
inline bool is_null_cone(const Bicomplex& z) {
  const bool z1_zero = std::abs(z.z1()) <= kNullConeTol;
  const bool z2_zero = std::abs(z.z2()) <= kNullConeTol;
  return z1_zero != z2_zero;
}

/// Z^{-1} = Z^dag2 / |Z|_i^2, computed componentwise in the idempotent view.
/// Throws null_cone_error for zero and for zero divisors.
inline Bicomplex invert(const Bicomplex& z) {
  const Complex c1 = z.z1(), c2 = z.z2();
  if (std::abs(c1) <= kNullConeTol || std::abs(c2) <= kNullConeTol)
    throw null_cone_error("bicomplex number is zero or a zero divisor");
  return Bicomplex::from_idempotent(1.0 / c1, 1.0 / c2);
}

inline Bicomplex operator/(const Bicomplex& a, const Bicomplex& b) {
  return a * invert(b);
}

/// |Z| = sqrt((|z1|^2 + |z2|^2) / 2).
inline double euclid_norm(const Bicomplex& z) {
  const double m1 = std::abs(z.z1()), m2 = std::abs(z.z2());
  return std::sqrt((m1 * m1 + m2 * m2) / 2.0);
}

/// |Z|_k = |z1| e1 + |z2| e2, the multiplicative hyperbolic-valued norm.
inline Hyperbolic knorm(const Bicomplex& z) {
  return {std::abs(z.z1()), std::abs(z.z2())};
}

inline Hyperbolic knorm(Hyperbolic a) { return a.abs_k(); }

/// Reinterpret a bicomplex number with (numerically) real idempotent
/// components as a hyperbolic number.  `tol` is the admissible imaginary
/// leak relative to the component magnitude.
inline Hyperbolic as_hyperbolic(const Bicomplex& z, double tol = 1e-9) {
  const Complex c1 = z.z1(), c2 = z.z2();
  const double scale = std::max({1.0, std::abs(c1), std::abs(c2)});
  if (std::fabs(c1.imag()) > tol * scale || std::fabs(c2.imag()) > tol * scale)
    throw invalid_value_error("bicomplex value is not hyperbolic");
  return {c1.real(), c2.real()};
}

inline bool is_hyperbolic(const Bicomplex& z, double tol = 1e-9) {
  const Complex c1 = z.z1(), c2 = z.z2();
  const double scale = std::max({1.0, std::abs(c1), std::abs(c2)});
  return std::fabs(c1.imag()) <= tol * scale && std::fabs(c2.imag()) <= tol * scale;
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

inline std::string fmt_real(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace detail {
inline void append_term(std::string& out, double coef, const char* unit) {
  if (coef == 0.0) return;
  if (out.empty()) {
    if (coef < 0.0) out += '-';
  } else {
    out += coef < 0.0 ? '-' : '+';
  }
  const double mag = std::fabs(coef);
  if (mag != 1.0 || unit[0] == '\0') out += fmt_real(mag);
  out += unit;
}
}  // namespace detail

/// Renders in the cartesian basis, e.g. "1+2i+3j+4k".
inline std::string to_string(const Bicomplex& z) {
  std::string out;
  detail::append_term(out, z.w1().real(), "");
  detail::append_term(out, z.w1().imag(), "i");
  detail::append_term(out, z.w2().real(), "j");
  detail::append_term(out, z.w2().imag(), "k");
  return out.empty() ? "0" : out;
}

inline std::string to_string(Complex w) {
  std::string out;
  detail::append_term(out, w.real(), "");
  detail::append_term(out, w.imag(), "i");
  return out.empty() ? "0" : out;
}

/// Renders the idempotent view, e.g. "[3|4]" or "[1+2i|3]".
inline std::string to_idempotent_string(const Bicomplex& z) {
  return "[" + to_string(z.z1()) + "|" + to_string(z.z2()) + "]";
}

inline std::string to_string(Hyperbolic a) {
  return fmt_real(a.a1()) + "*e1 + " + fmt_real(a.a2()) + "*e2";
}

}  // namespace bcg
