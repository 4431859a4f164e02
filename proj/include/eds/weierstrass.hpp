#pragma once

#include <optional>
#include <string>

#include "eds/curve.hpp"
#include "eds/divisor.hpp"
#include "eds/division_poly.hpp"

namespace eds {

struct IntegralizeResult {
  Curve model;
  FfPoint point;
  FfTransform map;  // r = s = t = 0
};

/// Smallest rescaling u = 1/g, g a monic polynomial, making every a_i a polynomial.
IntegralizeResult integralize(const Curve& E, const FfPoint& P);

struct TateNormalForm {
  RationalFunction b;
  RationalFunction c;
  FfTransform map;  // input model -> normal form, P -> (0, 0)
};

/// y^2 + (1 - c)xy - by = x^3 - bx^2 with P at the origin. Throws DomainError
/// when P has order at most 3.
TateNormalForm tate_normal_form(const Curve& E, const FfPoint& P);
bool is_constant_pair(const Curve& E, const FfPoint& P);

bool is_supersingular_j(const FieldElement& j, std::uint32_t p);
/// Constant curves are supersingular iff their j-invariant is.
bool is_supersingular(const ConstCurve& E);
/// j(E) constant and supersingular.
bool is_supersingular(const Curve& E);

struct ReducedPoint {
  enum class Kind { ReducesToO, NonsingularAffine, SingularPoint } kind;
  std::optional<FieldElement> x;
  std::optional<FieldElement> y;
};

/// Reduction of Q modulo v on a model integral at v.
ReducedPoint reduce_point(const Curve& E, const FfPoint& Q, const Place& v);

/// The model's coefficients reduced modulo v (requires integrality at v).
std::array<FieldElement, 5> reduce_coefficients(const Curve& E, const Place& v);

/// Reduction of E at a place of good reduction.
ConstCurve reduce_curve(const Curve& E, const Place& v);

}  // namespace eds
