#include "eds/divisor.hpp"

#include <sstream>

namespace eds {

Place Place::finite(const Polynomial& pi) {
  if (pi.degree() < 1 || !pi.is_monic()) throw DomainError("place polynomial must be monic of positive degree");
  if (!is_irreducible(pi)) throw DomainError("place polynomial " + pi.to_string() + " is reducible");
  return Place(&pi.field(), pi);
}

Place Place::infinity(const FieldSpec& f) { return Place(&f, std::nullopt); }

const Polynomial& Place::polynomial() const {
  if (!pi_) throw DomainError("the place at infinity has no polynomial");
  return *pi_;
}

const FieldSpec& Place::residue_field() const {
  if (!pi_ || pi_->degree() == 1) return *field_;
  if (!field_->is_prime())
    throw DomainError("residue fields of higher-degree places need a prime constant field");
  if (pi_->degree() > kMaxExtensionDegree)
    throw DomainError("residue field of " + to_string() + " exceeds the supported extension degree");
  std::vector<std::uint32_t> mod;
  for (const auto& c : pi_->coeffs()) mod.push_back(c.value());
  return FieldSpec::extension(field_->characteristic(), mod);
}

RationalFunction Place::uniformizer() const {
  if (pi_) return RationalFunction(*pi_);
  return RationalFunction(Polynomial::constant(field_->one()), Polynomial::variable(*field_));
}

std::string Place::to_string() const { return pi_ ? "(" + pi_->to_string() + ")" : "inf"; }

std::strong_ordering Place::operator<=>(const Place& o) const {
  if (is_infinity() || o.is_infinity()) return is_infinity() <=> o.is_infinity();
  return *pi_ <=> *o.pi_;
}

int valuation(const RationalFunction& r, const Place& v) {
  if (r.is_zero()) throw DomainError("valuation of zero");
  return valuation_or_inf(r, v);
}

int valuation_or_inf(const RationalFunction& r, const Place& v) {
  if (&r.field() != &v.constant_field()) throw FieldMismatch();
  if (r.is_zero()) return kInfiniteValuation;
  if (v.is_infinity()) return r.den().degree() - r.num().degree();
  const Polynomial& pi = v.polynomial();
  return multiplicity(r.num(), pi) - multiplicity(r.den(), pi);
}

FieldElement residue_reduce(const RationalFunction& r, const Place& v) {
  const FieldSpec& k = v.residue_field();
  if (r.is_zero()) return k.zero();
  if (valuation(r, v) < 0) throw DomainError("residue of " + r.to_string() + " at " + v.to_string() + ": pole");
  if (v.is_infinity()) {
    if (r.num().degree() < r.den().degree()) return k.zero();
    return r.num().leading() / r.den().leading();
  }
  const Polynomial& pi = v.polynomial();
  if (pi.degree() == 1) {
    FieldElement a = -pi.coeff(0);
    return r.num()(a) / r.den()(a);
  }
  auto to_residue = [&](const Polynomial& f) {
    Polynomial rem = f % pi;
    std::vector<std::uint32_t> coords;
    for (const auto& c : rem.coeffs()) coords.push_back(c.value());
    return k.element(coords);
  };
  return to_residue(r.num()) / to_residue(r.den());
}

RationalFunction residue_lift(const FieldElement& x, const Place& v) {
  const FieldSpec& f = v.constant_field();
  if (v.is_infinity() || v.degree() == 1) {
    if (&x.field() != &f) throw FieldMismatch();
    return RationalFunction::constant(x);
  }
  if (&x.field() != &v.residue_field()) throw FieldMismatch();
  std::vector<FieldElement> c;
  for (int i = 0; i < v.degree(); ++i) c.push_back(f.from_int(x.coord(i)));
  return RationalFunction(Polynomial(f, std::move(c)));
}

// ---------------------------------------------------------------------------

Divisor Divisor::single(const Place& v, int mult) {
  Divisor d;
  d.set(v, mult);
  return d;
}

int Divisor::operator[](const Place& v) const {
  auto it = m_.find(v);
  return it == m_.end() ? 0 : it->second;
}

void Divisor::set(const Place& v, int mult) {
  if (mult == 0)
    m_.erase(v);
  else
    m_.insert_or_assign(v, mult);
}

bool Divisor::is_effective() const {
  for (const auto& [v, m] : m_)
    if (m < 0) return false;
  return true;
}

int Divisor::degree() const {
  int d = 0;
  for (const auto& [v, m] : m_) d += m * v.degree();
  return d;
}

std::vector<Place> Divisor::support() const {
  std::vector<Place> s;
  for (const auto& [v, m] : m_) s.push_back(v);
  return s;
}

std::string Divisor::to_string() const {
  if (m_.empty()) return "1";
  std::ostringstream out;
  const bool lone = m_.size() == 1;
  bool first = true;
  for (const auto& [v, m] : m_) {
    if (!first) out << " * ";
    first = false;
    std::string base;
    if (v.is_infinity()) {
      base = "inf";
    } else {
      base = v.polynomial().to_string();
      if (v.polynomial().term_count() > 1 && !(lone && m == 1)) base = "(" + base + ")";
    }
    out << base;
    if (m != 1) out << "^" << m;
  }
  return out.str();
}

Divisor divisor_combine(const Divisor& a, const Divisor& b, DivisorOp op) {
  Divisor r;
  switch (op) {
    case DivisorOp::Add:
      r = a;
      for (const auto& [v, m] : b.entries()) r.add(v, m);
      break;
    case DivisorOp::Sub:
      r = a;
      for (const auto& [v, m] : b.entries()) r.add(v, -m);
      break;
    case DivisorOp::Min:
      for (const auto& [v, m] : a.entries()) r.set(v, std::min(m, b[v]));
      for (const auto& [v, m] : b.entries())
        if (a[v] == 0) r.set(v, std::min(m, 0));
      break;
  }
  return r;
}

Divisor principal_divisor(const RationalFunction& r, std::uint64_t seed) {
  if (r.is_zero()) throw DomainError("principal divisor of zero");
  Divisor d;
  for (const auto& [g, e] : poly_factor(r.num(), seed).factors) d.add(Place::from_factor(g), e);
  if (!r.den().is_one())
    for (const auto& [g, e] : poly_factor(r.den(), seed).factors) d.add(Place::from_factor(g), -e);
  d.add(Place::infinity(r.field()), r.den().degree() - r.num().degree());
  return d;
}

}  // namespace eds
