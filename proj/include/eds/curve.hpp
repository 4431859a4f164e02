#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "eds/errors.hpp"
#include "eds/field.hpp"
#include "eds/rational_function.hpp"

namespace eds {

/// Coefficient domains for curves: FieldElement (constant curves) and
/// RationalFunction (curves over F_p(t)).
template <class K>
concept CurveScalar = requires(const K a, const K b, long long n) {
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.pow(n) } -> std::same_as<K>;
  { a.from_int(n) } -> std::same_as<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <CurveScalar K>
class Point {
 public:
  static Point infinity() { return Point(); }
  Point(K x, K y) : xy_(std::make_pair(std::move(x), std::move(y))) {}

  bool is_infinity() const { return !xy_.has_value(); }
  const K& x() const {
    if (!xy_) throw DomainError("the point at infinity has no coordinates");
    return xy_->first;
  }
  const K& y() const {
    if (!xy_) throw DomainError("the point at infinity has no coordinates");
    return xy_->second;
  }

  bool operator==(const Point& o) const { return xy_ == o.xy_; }

  std::string to_string() const { return xy_ ? "(" + x().to_string() + ", " + y().to_string() + ")" : "O"; }

 private:
  Point() = default;
  std::optional<std::pair<K, K>> xy_;
};

template <CurveScalar K>
struct Invariants {
  K b2, b4, b6, b8, c4, c6, disc;
};

template <CurveScalar K>
Invariants<K> compute_invariants(const std::array<K, 5>& a) {
  const K &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
  auto n = [&](long long v) { return a1.from_int(v); };
  K b2 = a1 * a1 + n(4) * a2;
  K b4 = n(2) * a4 + a1 * a3;
  K b6 = a3 * a3 + n(4) * a6;
  K b8 = a1 * a1 * a6 + n(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  K c4 = b2 * b2 - n(24) * b4;
  K c6 = -(b2 * b2 * b2) + n(36) * b2 * b4 - n(216) * b6;
  K disc = -(b2 * b2 * b8) - n(8) * b4 * b4 * b4 - n(27) * b6 * b6 + n(9) * b2 * b4 * b6;
  return {b2, b4, b6, b8, c4, c6, disc};
}

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with nonzero discriminant.
template <CurveScalar K>
class WeierstrassModel {
 public:
  WeierstrassModel(K a1, K a2, K a3, K a4, K a6) : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
    if (compute_invariants(a_).disc.is_zero()) throw DomainError("singular Weierstrass equation: discriminant is zero");
  }
  explicit WeierstrassModel(const std::array<K, 5>& a) : WeierstrassModel(a[0], a[1], a[2], a[3], a[4]) {}

  const std::array<K, 5>& coefficients() const { return a_; }
  const K& a1() const { return a_[0]; }
  const K& a2() const { return a_[1]; }
  const K& a3() const { return a_[2]; }
  const K& a4() const { return a_[3]; }
  const K& a6() const { return a_[4]; }
  K zero() const { return a_[0].from_int(0); }
  K scalar(long long n) const { return a_[0].from_int(n); }

  Invariants<K> invariants() const { return compute_invariants(a_); }
  K discriminant() const { return invariants().disc; }
  K j_invariant() const {
    auto inv = invariants();
    return inv.c4 * inv.c4 * inv.c4 / inv.disc;
  }

  /// Left side minus right side of the equation at (x, y).
  K equation_at(const K& x, const K& y) const {
    return y * y + a1() * x * y + a3() * y - (x * x * x + a2() * x * x + a4() * x + a6());
  }
  bool contains(const Point<K>& P) const { return P.is_infinity() || equation_at(P.x(), P.y()).is_zero(); }

  Point<K> negate(const Point<K>& P) const {
    if (P.is_infinity()) return P;
    return Point<K>(P.x(), -P.y() - a1() * P.x() - a3());
  }

  Point<K> add(const Point<K>& P, const Point<K>& Q) const {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    const K &x1 = P.x(), &y1 = P.y(), &x2 = Q.x(), &y2 = Q.y();
    K lambda = zero(), nu = zero();
    if (x1 == x2) {
      K denom = y1 + y2 + a1() * x2 + a3();
      if (denom.is_zero()) return Point<K>::infinity();
      // doubling; here y2 = y1
      K d = scalar(2) * y1 + a1() * x1 + a3();
      lambda = (scalar(3) * x1 * x1 + scalar(2) * a2() * x1 + a4() - a1() * y1) / d;
      nu = (-(x1 * x1 * x1) + a4() * x1 + scalar(2) * a6() - a3() * y1) / d;
    } else {
      K dx = x2 - x1;
      lambda = (y2 - y1) / dx;
      nu = (y1 * x2 - y2 * x1) / dx;
    }
    K x3 = lambda * lambda + a1() * lambda - a2() - x1 - x2;
    K y3 = -(lambda + a1()) * x3 - nu - a3();
    return Point<K>(std::move(x3), std::move(y3));
  }

  Point<K> scalar_mul(const Point<K>& P, long long n) const {
    if (n < 0) return scalar_mul(negate(P), -n);
    Point<K> result = Point<K>::infinity();
    Point<K> base = P;
    while (n) {
      if (n & 1) result = add(result, base);
      n >>= 1;
      if (n) base = add(base, base);
    }
    return result;
  }

  bool operator==(const WeierstrassModel& o) const { return a_ == o.a_; }

  std::string to_string() const {
    auto term = [](const K& c, const std::string& mono) -> std::string {
      std::string s = c.to_string();
      if (c == c.from_int(1)) return mono;
      bool compound = s.find(' ') != std::string::npos || s.find('/') != std::string::npos;
      if (compound) s = "(" + s + ")";
      return s + "*" + mono;
    };
    std::string lhs = "y^2";
    if (!a1().is_zero()) lhs += " + " + term(a1(), "x*y");
    if (!a3().is_zero()) lhs += " + " + term(a3(), "y");
    std::string rhs = "x^3";
    if (!a2().is_zero()) rhs += " + " + term(a2(), "x^2");
    if (!a4().is_zero()) rhs += " + " + term(a4(), "x");
    if (!a6().is_zero()) rhs += " + " + a6().to_string();
    return lhs + " = " + rhs;
  }

 private:
  std::array<K, 5> a_;
};

/// x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.
template <CurveScalar K>
struct Transform {
  K u, r, s, t;

  static Transform identity(const K& like) { return {like.from_int(1), like.from_int(0), like.from_int(0), like.from_int(0)}; }
  static Transform scaling(const K& u) { return {u, u.from_int(0), u.from_int(0), u.from_int(0)}; }

  bool is_identity() const { return u == u.from_int(1) && r.is_zero() && s.is_zero() && t.is_zero(); }

  /// First this, then `next` on the resulting model.
  Transform then(const Transform& next) const {
    K u2 = u * u;
    return {u * next.u, r + u2 * next.r, s + u * next.s, t + u2 * s * next.r + u2 * u * next.t};
  }

  Transform inverse() const {
    if (u.is_zero()) throw DomainError("transform with u = 0");
    K ui = u.from_int(1) / u;
    K ui2 = ui * ui;
    K ui3 = ui2 * ui;
    return {ui, -r * ui2, -s * ui, (s * r - t) * ui3};
  }

  WeierstrassModel<K> apply(const WeierstrassModel<K>& E) const {
    if (u.is_zero()) throw DomainError("transform with u = 0");
    const K &a1 = E.a1(), &a2 = E.a2(), &a3 = E.a3(), &a4 = E.a4(), &a6 = E.a6();
    auto n = [&](long long v) { return u.from_int(v); };
    K u2 = u * u;
    K u3 = u2 * u;
    K u4 = u2 * u2;
    K u6 = u3 * u3;
    K na1 = (a1 + n(2) * s) / u;
    K na2 = (a2 - s * a1 + n(3) * r - s * s) / u2;
    K na3 = (a3 + r * a1 + n(2) * t) / u3;
    K na4 = (a4 - s * a3 + n(2) * r * a2 - (t + r * s) * a1 + n(3) * r * r - n(2) * s * t) / u4;
    K na6 = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6;
    return WeierstrassModel<K>(na1, na2, na3, na4, na6);
  }

  /// Old coordinates to new coordinates.
  Point<K> forward(const Point<K>& P) const {
    if (P.is_infinity()) return P;
    K dx = P.x() - r;
    K u2 = u * u;
    return Point<K>(dx / u2, (P.y() - s * dx - t) / (u2 * u));
  }
  /// New coordinates to old coordinates.
  Point<K> backward(const Point<K>& P) const {
    if (P.is_infinity()) return P;
    K u2 = u * u;
    return Point<K>(u2 * P.x() + r, u2 * u * P.y() + u2 * s * P.x() + t);
  }

  bool operator==(const Transform& o) const { return u == o.u && r == o.r && s == o.s && t == o.t; }
};

template <CurveScalar K>
struct TransformedModel {
  WeierstrassModel<K> model;
  Transform<K> map;  // forward: input coordinates -> model coordinates
};

template <CurveScalar K>
TransformedModel<K> apply_transform(const WeierstrassModel<K>& E, const Transform<K>& tau) {
  return {tau.apply(E), tau};
}

using Curve = WeierstrassModel<RationalFunction>;
using FfPoint = Point<RationalFunction>;
using FfTransform = Transform<RationalFunction>;
using ConstCurve = WeierstrassModel<FieldElement>;
using ConstPoint = Point<FieldElement>;

}  // namespace eds
