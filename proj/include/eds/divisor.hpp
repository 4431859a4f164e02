#pragma once

#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eds/rational_function.hpp"

namespace eds {

/// A closed point of the projective t-line: a monic irreducible pi, or infinity.
class Place {
 public:
  static Place finite(const Polynomial& pi);
  static Place infinity(const FieldSpec& f);
  /// Skips the irreducibility test; for factors coming out of poly_factor.
  static Place from_factor(const Polynomial& pi) { return Place(&pi.field(), pi); }

  bool is_infinity() const { return !pi_.has_value(); }
  /// The monic irreducible of a finite place.
  const Polynomial& polynomial() const;
  int degree() const { return pi_ ? pi_->degree() : 1; }
  const FieldSpec& constant_field() const { return *field_; }
  /// F_p for infinity and degree-one places, F_p[z]/(pi) otherwise.
  const FieldSpec& residue_field() const;
  /// pi or 1/t.
  RationalFunction uniformizer() const;

  std::string to_string() const;

  bool operator==(const Place& o) const { return field_ == o.field_ && pi_ == o.pi_; }
  /// Finite places in canonical polynomial order, infinity last.
  std::strong_ordering operator<=>(const Place& o) const;

 private:
  Place(const FieldSpec* f, std::optional<Polynomial> pi) : field_(f), pi_(std::move(pi)) {}
  const FieldSpec* field_;
  std::optional<Polynomial> pi_;
};

inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// v(r); throws DomainError on r = 0.
int valuation(const RationalFunction& r, const Place& v);
/// v(r) with kInfiniteValuation for r = 0.
int valuation_or_inf(const RationalFunction& r, const Place& v);
/// Image of r in the residue field; requires v(r) >= 0.
FieldElement residue_reduce(const RationalFunction& r, const Place& v);
/// Canonical lift of a residue class (degree < deg pi, or a constant at infinity).
RationalFunction residue_lift(const FieldElement& x, const Place& v);

/// Finite formal Z-combination of places; zero multiplicities are never stored.
class Divisor {
 public:
  Divisor() = default;
  static Divisor single(const Place& v, int mult);

  int operator[](const Place& v) const;
  void set(const Place& v, int mult);
  void add(const Place& v, int mult) { set(v, (*this)[v] + mult); }

  bool is_zero() const { return m_.empty(); }
  bool is_effective() const;
  int degree() const;
  std::vector<Place> support() const;
  const std::map<Place, int>& entries() const { return m_; }

  bool operator==(const Divisor& o) const { return m_ == o.m_; }

  /// "(t + 2)^3 * t^2 * inf^3" style; "1" for the zero divisor.
  std::string to_string() const;

 private:
  std::map<Place, int> m_;
};

enum class DivisorOp { Add, Sub, Min };
Divisor divisor_combine(const Divisor& a, const Divisor& b, DivisorOp op);

/// Divisor of zeros and poles of r over all places, infinity included.
Divisor principal_divisor(const RationalFunction& r, std::uint64_t seed = 0);

}  // namespace eds
