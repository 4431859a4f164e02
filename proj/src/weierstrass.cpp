#include "eds/weierstrass.hpp"

#include <map>

namespace eds {

IntegralizeResult integralize(const Curve& E, const FfPoint& P) {
  const FieldSpec& f = E.a1().field();
  // k_pi = max_i ceil(mult_pi(den a_i) / i)
  static constexpr int kWeights[5] = {1, 2, 3, 4, 6};
  Polynomial all_dens = Polynomial::constant(f.one());
  for (const auto& a : E.coefficients()) all_dens = lcm(all_dens, a.den());
  Polynomial g = Polynomial::constant(f.one());
  if (all_dens.degree() >= 1) {
    for (const auto& [pi, e] : poly_factor(all_dens).factors) {
      int k = 0;
      for (int i = 0; i < 5; ++i) {
        int m = multiplicity(E.coefficients()[i].den(), pi);
        k = std::max(k, (m + kWeights[i] - 1) / kWeights[i]);
      }
      g = g * pi.pow(static_cast<unsigned>(k));
    }
  }
  FfTransform tau = FfTransform::scaling(RationalFunction(Polynomial::constant(f.one()), g));
  return {tau.apply(E), tau.forward(P), tau};
}

TateNormalForm tate_normal_form(const Curve& E, const FfPoint& P) {
  if (!E.contains(P)) throw DomainError("point is not on the curve");
  if (P.is_infinity()) throw DomainError("Tate normal form needs a point of order >= 4; got O");
  if (E.add(P, P).is_infinity()) throw DomainError("Tate normal form needs a point of order >= 4; got 2-torsion");
  if (E.scalar_mul(P, 3).is_infinity()) throw DomainError("Tate normal form needs a point of order >= 4; got 3-torsion");
  const RationalFunction zero = E.zero();
  const RationalFunction one = E.scalar(1);
  FfTransform move{one, P.x(), zero, P.y()};
  Curve E1 = move.apply(E);
  if (E1.a3().is_zero()) throw DomainError("Tate normal form: a3 vanished after translation (order <= 2)");
  FfTransform shear{one, zero, E1.a4() / E1.a3(), zero};
  Curve E2 = shear.apply(E1);
  if (E2.a2().is_zero()) throw DomainError("Tate normal form: a2 vanished after shear (order <= 3)");
  FfTransform scale = FfTransform::scaling(E2.a3() / E2.a2());
  Curve E3 = scale.apply(E2);
  if (!E3.a4().is_zero() || !E3.a6().is_zero() || !(E3.a2() == E3.a3()))
    throw ConsistencyError("Tate normal form: normalization did not reach the expected shape");
  return {-E3.a2(), one - E3.a1(), move.then(shear).then(scale)};
}

bool is_constant_pair(const Curve& E, const FfPoint& P) {
  TateNormalForm nf = tate_normal_form(E, P);
  return nf.b.is_constant() && nf.c.is_constant();
}

bool is_supersingular_j(const FieldElement& j, std::uint32_t p) {
  const FieldSpec& F = j.field();
  if (F.characteristic() != p) throw DomainError("j-invariant lives in characteristic " + std::to_string(F.characteristic()) + ", not " + std::to_string(p));
  if (p == 2 || p == 3) return j.is_zero();
  FieldElement a = F.zero(), b = F.zero();
  if (j.is_zero()) {
    b = F.one();
  } else if (j == F.from_int(1728)) {
    a = F.one();
  } else {
    FieldElement k = F.from_int(1728) - j;
    a = F.from_int(3) * j * k;
    b = F.from_int(2) * j * k * k;
  }
  Polynomial cubic(F, {b, a, F.zero(), F.one()});
  Polynomial h = cubic.pow((p - 1) / 2);
  return h.coeff(static_cast<int>(p) - 1).is_zero();
}

bool is_supersingular(const ConstCurve& E) {
  FieldElement j = E.j_invariant();
  return is_supersingular_j(j, j.field().characteristic());
}

bool is_supersingular(const Curve& E) {
  RationalFunction j = E.j_invariant();
  if (!j.is_constant()) return false;
  return is_supersingular_j(j.constant_value(), j.field().characteristic());
}

std::array<FieldElement, 5> reduce_coefficients(const Curve& E, const Place& v) {
  std::array<FieldElement, 5> out;
  for (int i = 0; i < 5; ++i) {
    const RationalFunction& a = E.coefficients()[i];
    if (!a.is_zero() && valuation(a, v) < 0)
      throw DomainError("model is not integral at " + v.to_string());
    out[i] = residue_reduce(a, v);
  }
  return out;
}

ConstCurve reduce_curve(const Curve& E, const Place& v) {
  auto a = reduce_coefficients(E, v);
  return ConstCurve(a[0], a[1], a[2], a[3], a[4]);
}

ReducedPoint reduce_point(const Curve& E, const FfPoint& Q, const Place& v) {
  auto a = reduce_coefficients(E, v);
  if (Q.is_infinity()) return {ReducedPoint::Kind::ReducesToO, std::nullopt, std::nullopt};
  if (!Q.x().is_zero() && valuation(Q.x(), v) < 0) return {ReducedPoint::Kind::ReducesToO, std::nullopt, std::nullopt};
  FieldElement x = residue_reduce(Q.x(), v);
  FieldElement y = residue_reduce(Q.y(), v);
  const FieldSpec& k = x.field();
  FieldElement fy = k.from_int(2) * y + a[0] * x + a[2];
  FieldElement fx = a[0] * y - k.from_int(3) * x * x - k.from_int(2) * a[1] * x - a[3];
  auto kind = (fx.is_zero() && fy.is_zero()) ? ReducedPoint::Kind::SingularPoint : ReducedPoint::Kind::NonsingularAffine;
  return {kind, x, y};
}

}  // namespace eds
