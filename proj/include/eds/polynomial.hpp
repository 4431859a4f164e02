#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "eds/field.hpp"

namespace eds {

/// Dense univariate polynomial over a FieldSpec, coefficients low-to-high.
/// No trailing zeros are stored; the zero polynomial has no coefficients.
class Polynomial {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit Polynomial(const FieldSpec& f) : field_(&f) {}
  Polynomial(const FieldSpec& f, std::vector<FieldElement> coeffs);

  static Polynomial from_ints(const FieldSpec& f, std::initializer_list<long long> low_to_high);
  static Polynomial from_ints(const FieldSpec& f, const std::vector<long long>& low_to_high);
  static Polynomial constant(const FieldElement& c);
  static Polynomial monomial(const FieldElement& c, int k);
  static Polynomial variable(const FieldSpec& f);

  const FieldSpec& field() const { return *field_; }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  FieldElement coeff(int i) const;
  FieldElement leading() const;
  const std::vector<FieldElement>& coeffs() const { return c_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const FieldElement& c) const;
  Polynomial operator-() const;
  /// Exact division; throws DomainError when the remainder is nonzero.
  Polynomial operator/(const Polynomial& o) const;
  Polynomial operator%(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial monic() const;
  Polynomial derivative() const;
  Polynomial pow(unsigned k) const;
  /// Shift by t^k (k >= 0).
  Polynomial shift(int k) const;
  FieldElement operator()(const FieldElement& x) const;
  /// Evaluate a prime-field polynomial at an element of any field of the same characteristic.
  FieldElement eval_embedded(const FieldElement& x) const;

  bool operator==(const Polynomial& o) const { return field_ == o.field_ && c_ == o.c_; }
  /// Canonical order: degree, then coefficients from the top down.
  std::strong_ordering operator<=>(const Polynomial& o) const;

  std::string to_string(char var = 't') const;
  /// Number of nonzero terms.
  int term_count() const;

 private:
  void check_same(const Polynomial& o) const;
  void normalize();

  const FieldSpec* field_;
  std::vector<FieldElement> c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
  Polynomial g;  // monic
  Polynomial s;
  Polynomial t;  // s*a + t*b = g
};
ExtendedGcd xgcd(const Polynomial& a, const Polynomial& b);

Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m);
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& m);
/// base^(q^k) mod m, q the size of the coefficient field.
Polynomial frobenius_powmod(const Polynomial& base, int k, const Polynomial& m);

/// Number of times pi divides f. f must be nonzero, pi nonconstant.
int multiplicity(const Polynomial& f, const Polynomial& pi);

struct Factorization {
  FieldElement unit;
  std::vector<std::pair<Polynomial, int>> factors;  // monic irreducible, canonical order

  Polynomial expand() const;
};

/// Squarefree decomposition of a monic polynomial: pairs (g_i, i), g_i squarefree, pairwise coprime.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);
bool is_irreducible(const Polynomial& f);
/// Complete factorization; the seed drives equal-degree splitting only.
Factorization poly_factor(const Polynomial& f, std::uint64_t seed = 0);
/// Distinct roots of f in its coefficient field, in canonical element order.
std::vector<FieldElement> roots(const Polynomial& f, std::uint64_t seed = 0);

}  // namespace eds
