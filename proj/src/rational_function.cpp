#include "eds/rational_function.hpp"

namespace eds {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(num_.field().one())) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (&num_.field() != &den_.field()) throw FieldMismatch();
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.field().one());
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  if (!den_.is_monic()) {
    FieldElement inv = den_.leading().inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, bool) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) den_ = Polynomial::constant(num_.field().one());
}

RationalFunction RationalFunction::variable(const FieldSpec& f) { return RationalFunction(Polynomial::variable(f)); }

RationalFunction RationalFunction::constant(const FieldElement& c) { return RationalFunction(Polynomial::constant(c)); }

FieldElement RationalFunction::constant_value() const {
  if (!is_constant()) throw DomainError("rational function " + to_string() + " is not constant");
  return num_.coeff(0);
}

RationalFunction RationalFunction::from_int(long long n) const { return constant(field().from_int(n)); }

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_.is_one() && o.den_.is_one()) return RationalFunction(num_ + o.num_, den_, true);
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  Polynomial g = gcd(den_, o.den_);
  if (g.is_one()) return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_, true);
  Polynomial b1 = den_ / g;
  Polynomial d1 = o.den_ / g;
  Polynomial num = num_ * d1 + o.num_ * b1;
  Polynomial den = b1 * o.den_;
  Polynomial h = gcd(num, g);
  if (!h.is_one() && !num.is_zero()) {
    num = num / h;
    den = den / h;
  }
  return RationalFunction(std::move(num), std::move(den), true);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, true); }

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction(field());
  if (den_.is_one() && o.den_.is_one()) return RationalFunction(num_ * o.num_, den_, true);
  Polynomial a = num_, b = den_, c = o.num_, d = o.den_;
  Polynomial g1 = gcd(a, d);
  if (!g1.is_one()) {
    a = a / g1;
    d = d / g1;
  }
  Polynomial g2 = gcd(c, b);
  if (!g2.is_one()) {
    c = c / g2;
    b = b / g2;
  }
  return RationalFunction(a * c, b * d, true);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational function");
  FieldElement inv = num_.leading().inverse();
  return RationalFunction(den_ * inv, num_ * inv, true);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  return RationalFunction(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)), true);
}

bool RationalFunction::is_atomic() const { return den_.is_one() && num_.term_count() <= 1; }

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.term_count() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
  std::string d = den_.to_string();
  bool bare = den_.term_count() == 1 && d.find('*') == std::string::npos;
  return n + "/" + (bare ? d : "(" + d + ")");
}

}  // namespace eds
