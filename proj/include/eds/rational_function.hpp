#pragma once

#include <string>

#include "eds/polynomial.hpp"

namespace eds {

/// Element of F_p(t): num/den with den monic and gcd(num, den) = 1.
class RationalFunction {
 public:
  explicit RationalFunction(const FieldSpec& f) : num_(f), den_(Polynomial::constant(f.one())) {}
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable(const FieldSpec& f);
  static RationalFunction constant(const FieldElement& c);

  const FieldSpec& field() const { return num_.field(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  /// Value of a constant rational function.
  FieldElement constant_value() const;

  RationalFunction from_int(long long n) const;

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const;
  RationalFunction pow(long long k) const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// "t^2 + 1" or "(t^2 + 1)/(t + 2)"; the input parser reads this back.
  std::string to_string() const;
  /// Number of monomials, used to decide on parentheses when embedding.
  bool is_atomic() const;

 private:
  RationalFunction(Polynomial num, Polynomial den, bool already_reduced);

  Polynomial num_;
  Polynomial den_;
};

}  // namespace eds
