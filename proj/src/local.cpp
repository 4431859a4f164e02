#include "eds/local.hpp"

#include <algorithm>
#include <set>

namespace eds {

KodairaType KodairaType::parse(const std::string& s) {
  using K = Kind;
  if (s == "I0") return {K::I0, 0};
  if (s == "II") return {K::II, 0};
  if (s == "III") return {K::III, 0};
  if (s == "IV") return {K::IV, 0};
  if (s == "I0*") return {K::I0Star, 0};
  if (s == "IV*") return {K::IVStar, 0};
  if (s == "III*") return {K::IIIStar, 0};
  if (s == "II*") return {K::IIStar, 0};
  if (s.size() >= 2 && s[0] == 'I') {
    bool star = s.back() == '*';
    std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      int n = std::stoi(digits);
      if (n >= 1) return {star ? K::InStar : K::In, n};
    }
  }
  throw DomainError("unknown Kodaira symbol '" + s + "'");
}

std::string KodairaType::to_string() const {
  switch (kind) {
    case Kind::I0: return "I0";
    case Kind::In: return "I" + std::to_string(n);
    case Kind::II: return "II";
    case Kind::III: return "III";
    case Kind::IV: return "IV";
    case Kind::I0Star: return "I0*";
    case Kind::InStar: return "I" + std::to_string(n) + "*";
    case Kind::IVStar: return "IV*";
    case Kind::IIIStar: return "III*";
    case Kind::IIStar: return "II*";
  }
  return "?";
}

std::string ComponentGroup::to_string() const {
  if (shape == Shape::Klein) return "Z/2xZ/2";
  return order == 1 ? "0" : "Z/" + std::to_string(order);
}

std::string LocalData::to_string() const {
  return "v=" + place.to_string() + ": type " + kodaira.to_string() + ", c=" + std::to_string(tamagawa) +
         ", vΔ=" + std::to_string(disc_valuation);
}

namespace {

ComponentGroup geometric_group(const KodairaType& k) {
  using K = KodairaType::Kind;
  using S = ComponentGroup::Shape;
  switch (k.kind) {
    case K::I0:
    case K::II:
    case K::IIStar: return {S::Cyclic, 1};
    case K::In: return {S::Cyclic, k.n};
    case K::III:
    case K::IIIStar: return {S::Cyclic, 2};
    case K::IV:
    case K::IVStar: return {S::Cyclic, 3};
    case K::I0Star: return {S::Klein, 4};
    case K::InStar: return k.n % 2 == 1 ? ComponentGroup{S::Cyclic, 4} : ComponentGroup{S::Klein, 4};
  }
  return {S::Cyclic, 1};
}

class TateRun {
 public:
  TateRun(const Curve& E, const Place& v)
      : v_(v), k_(v.residue_field()), p_(k_.characteristic()), pi_(v.uniformizer()), C_(E),
        total_(FfTransform::identity(E.a1())) {}

  LocalData run() {
    static constexpr int kWeights[5] = {1, 2, 3, 4, 6};
    int e = 0;
    for (int i = 0; i < 5; ++i) {
      const auto& a = C_.coefficients()[i];
      if (a.is_zero()) continue;
      int va = val(a);
      if (va < 0) e = std::max(e, (-va + kWeights[i] - 1) / kWeights[i]);
    }
    if (e > 0) apply(FfTransform::scaling(pi_.pow(-e)));

    using K = KodairaType::Kind;
    const RationalFunction pi2 = pi_ * pi_;
    const RationalFunction pi3 = pi2 * pi_;
    const RationalFunction pi4 = pi2 * pi2;
    while (true) {
      auto inv = C_.invariants();
      const int vD = val(inv.disc);
      if (vD == 0) return finish({K::I0, 0}, 1, ReductionClass::Good, vD);

      // move the singular point of the reduction to (0, 0)
      FieldElement r = k_.zero(), t = k_.zero();
      if (p_ == 2) {
        if (val(inv.b2) > 0) {
          r = red(a4()).pth_root();
          t = (((r + red(a2())) * r + red(a4())) * r + red(a6())).pth_root();
        } else {
          FieldElement temp = red(a1()).inverse();
          r = temp * red(a3());
          t = temp * (red(a4()) + r * r);
        }
      } else if (p_ == 3) {
        if (val(inv.b2) > 0)
          r = (-red(inv.b6)).pth_root();
        else
          r = -red(inv.b4) / red(inv.b2);
        t = red(a1()) * r + red(a3());
      } else {
        if (val(inv.c4) > 0)
          r = -red(inv.b2) / k_.from_int(12);
        else
          r = -(red(inv.c6) + red(inv.b2) * red(inv.c4)) / (k_.from_int(12) * red(inv.c4));
        t = -(red(a1()) * r + red(a3())) / k_.from_int(2);
      }
      apply(rst(lift(r), zero(), lift(t)));
      inv = C_.invariants();
      if (val(a3()) <= 0 || val(a4()) <= 0 || val(a6()) <= 0)
        throw ConsistencyError("Tate: singular point not moved to the origin at " + v_.to_string());

      if (val(inv.c4) == 0) {
        bool split = has_root(k_.one(), red(a1()), -red(a2()));
        int c = split ? vD : (vD % 2 == 0 ? 2 : 1);
        return finish({K::In, vD}, c, ReductionClass::Multiplicative, vD);
      }
      if (val(a6()) < 2) return finish({K::II, 0}, 1, ReductionClass::Additive, vD);
      if (val(inv.b8) < 3) return finish({K::III, 0}, 2, ReductionClass::Additive, vD);
      if (val(inv.b6) < 3) {
        FieldElement a3t = red(a3() / pi_), a6t = red(a6() / pi2);
        return finish({K::IV, 0}, has_root(k_.one(), a3t, -a6t) ? 3 : 1, ReductionClass::Additive, vD);
      }

      // star types: arrange p | a1, p^2 | a2, p^2 | a3, p^3 | a4, p^4 | a6
      if (p_ == 2) {
        RationalFunction s = lift(red(a2()).pth_root());
        RationalFunction tt = pi_ * lift(red(a6() / pi2).pth_root());
        apply(rst(zero(), s, tt));
      } else if (p_ == 3) {
        apply(rst(zero(), a1(), a3()));
      } else {
        RationalFunction half = one() / C_.scalar(2);
        apply(rst(zero(), -a1() * half, -a3() * half));
      }

      FieldElement b = red(a2() / pi_), c = red(a4() / pi2), d = red(a6() / pi3);
      FieldElement w = n(27) * d * d - b * b * c * c + n(4) * b * b * b * d - n(18) * b * c * d + n(4) * c * c * c;
      FieldElement x = n(3) * c - b * b;
      if (!w.is_zero()) {
        Polynomial cubic(k_, {d, c, b, k_.one()});
        int nroots = static_cast<int>(roots(cubic).size());
        return finish({K::I0Star, 0}, 1 + nroots, ReductionClass::Additive, vD);
      }
      if (!x.is_zero()) {
        FieldElement rr = k_.zero();
        if (p_ == 2)
          rr = c.pth_root();
        else if (p_ == 3)
          rr = c / b;
        else
          rr = (b * c - n(9) * d) / (n(2) * x);
        apply(rst(pi_ * lift(rr), zero(), zero()));
        int ix = 3, iy = 3;
        RationalFunction mx = pi2, my = pi2;
        int cp = 0;
        while (true) {
          FieldElement a2t = red(a2() / pi_), a3t = red(a3() / my), a4t = red(a4() / (pi_ * mx)),
                       a6t = red(a6() / (mx * my));
          if (!(a3t * a3t + n(4) * a6t).is_zero()) {
            cp = has_root(k_.one(), a3t, -a6t) ? 4 : 2;
            break;
          }
          RationalFunction tt = my * lift(p_ == 2 ? a6t.pth_root() : -a3t / n(2));
          apply(rst(zero(), zero(), tt));
          my = my * pi_;
          ++iy;
          a2t = red(a2() / pi_);
          a3t = red(a3() / my);
          a4t = red(a4() / (pi_ * mx));
          a6t = red(a6() / (mx * my));
          if (!(a4t * a4t - n(4) * a6t * a2t).is_zero()) {
            cp = has_root(a2t, a4t, a6t) ? 4 : 2;
            break;
          }
          RationalFunction rr2 = mx * lift(p_ == 2 ? (a6t / a2t).pth_root() : -a4t / (n(2) * a2t));
          apply(rst(rr2, zero(), zero()));
          mx = mx * pi_;
          ++ix;
        }
        return finish({K::InStar, ix + iy - 5}, cp, ReductionClass::Additive, vD);
      }
      // triple root
      FieldElement rr = k_.zero();
      if (p_ == 2)
        rr = b;
      else if (p_ == 3)
        rr = (-d).pth_root();
      else
        rr = -b / n(3);
      apply(rst(pi_ * lift(rr), zero(), zero()));
      FieldElement x3t = red(a3() / pi2), x6t = red(a6() / pi4);
      if (!(x3t * x3t + n(4) * x6t).is_zero())
        return finish({K::IVStar, 0}, has_root(k_.one(), x3t, -x6t) ? 3 : 1, ReductionClass::Additive, vD);
      RationalFunction tt = p_ == 2 ? -pi2 * lift(x6t.pth_root()) : pi2 * lift(-x3t / n(2));
      apply(rst(zero(), zero(), tt));
      if (val(a4()) < 4) return finish({K::IIIStar, 0}, 2, ReductionClass::Additive, vD);
      if (val(a6()) < 6) return finish({K::IIStar, 0}, 1, ReductionClass::Additive, vD);
      // not minimal
      apply(FfTransform::scaling(pi_));
    }
  }

 private:
  const RationalFunction& a1() const { return C_.a1(); }
  const RationalFunction& a2() const { return C_.a2(); }
  const RationalFunction& a3() const { return C_.a3(); }
  const RationalFunction& a4() const { return C_.a4(); }
  const RationalFunction& a6() const { return C_.a6(); }
  RationalFunction zero() const { return C_.zero(); }
  RationalFunction one() const { return C_.scalar(1); }
  FieldElement n(long long v) const { return k_.from_int(v); }

  int val(const RationalFunction& a) const { return valuation_or_inf(a, v_); }
  FieldElement red(const RationalFunction& a) const { return residue_reduce(a, v_); }
  RationalFunction lift(const FieldElement& a) const { return residue_lift(a, v_); }
  FfTransform rst(RationalFunction r, RationalFunction s, RationalFunction t) const {
    return {one(), std::move(r), std::move(s), std::move(t)};
  }

  void apply(const FfTransform& tau) {
    C_ = tau.apply(C_);
    total_ = total_.then(tau);
  }

  // a x^2 + b x + c has a root in the residue field
  bool has_root(const FieldElement& a, const FieldElement& b, const FieldElement& c) const {
    if (a.is_zero()) return !b.is_zero() || c.is_zero();
    return !roots(Polynomial(k_, {c, b, a})).empty();
  }

  LocalData finish(KodairaType kt, int c, ReductionClass rc, int vD) {
    return LocalData{v_, C_, total_, kt, vD, c, geometric_group(kt), rc};
  }

  Place v_;
  const FieldSpec& k_;
  std::uint32_t p_;
  RationalFunction pi_;
  Curve C_;
  FfTransform total_;
};

}  // namespace

LocalData tate_algorithm(const Curve& E, const Place& v) {
  if (&v.constant_field() != &E.a1().field()) throw FieldMismatch();
  return TateRun(E, v).run();
}

MinimalModel minimal_model_at(const Curve& E, const Place& v) {
  LocalData ld = tate_algorithm(E, v);
  return {ld.minimal_model, ld.transform};
}

std::vector<Place> candidate_bad_places(const Curve& E) {
  const FieldSpec& f = E.a1().field();
  Polynomial acc = Polynomial::constant(f.one());
  RationalFunction disc = E.discriminant();
  acc = acc * disc.num() * disc.den();
  for (const auto& a : E.coefficients()) acc = lcm(acc, a.den());
  std::vector<Place> places;
  if (acc.degree() >= 1) {
    Polynomial rad = Polynomial::constant(f.one());
    for (const auto& [g, e] : squarefree_decomposition(acc)) rad = rad * g;
    for (const auto& [g, e] : poly_factor(rad).factors) places.push_back(Place::from_factor(g));
  }
  std::sort(places.begin(), places.end());
  places.push_back(Place::infinity(f));
  return places;
}

std::vector<LocalData> local_data_report(const Curve& E) {
  std::vector<LocalData> out;
  for (const auto& v : candidate_bad_places(E)) {
    LocalData ld = tate_algorithm(E, v);
    if (ld.reduction != ReductionClass::Good || v.is_infinity()) out.push_back(std::move(ld));
  }
  return out;
}

ComponentOrderRecord component_order(const LocalData& local, const FfPoint& P) {
  const Curve& M = local.minimal_model;
  FfPoint Q = local.transform.forward(P);
  if (!M.contains(Q)) throw DomainError("point is not on the curve");
  ComponentOrderRecord rec{local.place, 0, local.tamagawa, {}};
  FfPoint kQ = Q;
  for (int k = 1; k <= local.tamagawa; ++k) {
    if (k > 1) kQ = M.add(kQ, Q);
    ReducedPoint rp = reduce_point(M, kQ, local.place);
    rec.chain.emplace_back(k, rp.kind);
    if (rp.kind != ReducedPoint::Kind::SingularPoint) {
      if (local.tamagawa % k != 0)
        throw ConsistencyError("component order " + std::to_string(k) + " does not divide c=" +
                               std::to_string(local.tamagawa) + " at " + local.place.to_string());
      rec.d = k;
      return rec;
    }
  }
  throw ConsistencyError("component order exceeds c=" + std::to_string(local.tamagawa) + " at " +
                         local.place.to_string());
}

ComponentOrderRecord component_order(const Curve& E, const FfPoint& P, const Place& v) {
  return component_order(tate_algorithm(E, v), P);
}

std::vector<ExclusionEvidence> component_group_exclusions(const Curve& E, const std::optional<FfPoint>& P) {
  RationalFunction j = E.j_invariant();
  if (!j.is_constant() || j.is_zero()) throw DomainError("component_group_exclusions needs a constant nonzero j-invariant");
  const std::uint32_t p = j.field().characteristic();
  std::vector<ExclusionEvidence> out;
  for (const auto& v : candidate_bad_places(E)) {
    LocalData ld = tate_algorithm(E, v);
    if (ld.reduction == ReductionClass::Good) continue;
    ExclusionEvidence ev{v, ld.kodaira, ld.tamagawa, std::nullopt};
    const bool cyclic = ld.group.shape == ComponentGroup::Shape::Cyclic;
    if (p == 2 && cyclic && ld.tamagawa % 4 == 0)
      throw ConsistencyError("order-4 element in the component group at " + v.to_string() + " (" + ld.kodaira.to_string() + ")");
    if (p == 3 && ld.tamagawa % 3 == 0)
      throw ConsistencyError("order-3 element in the component group at " + v.to_string() + " (" + ld.kodaira.to_string() + ")");
    if (P) {
      ev.d = component_order(ld, *P).d;
      if (p >= 5 && *ev.d > 2)
        throw ConsistencyError("d_v = " + std::to_string(*ev.d) + " > 2 at " + v.to_string());
    }
    out.push_back(ev);
  }
  return out;
}

}  // namespace eds
