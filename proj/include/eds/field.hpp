#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eds/errors.hpp"

namespace eds {

inline constexpr int kMaxExtensionDegree = 12;
inline constexpr std::uint32_t kMaxCharacteristic = 65536;

class FieldElement;

/// F_p, or F_p[z]/(m(z)) for a monic irreducible m of degree d <= 12.
///
/// Specs are interned: the same (p, m) always yields the same object, and the
/// object lives until program exit. Pointer equality is field equality.
class FieldSpec {
 public:
  static const FieldSpec& prime(std::uint32_t p);
  /// `modulus` is low-to-high and must be monic irreducible over F_p.
  static const FieldSpec& extension(std::uint32_t p, const std::vector<std::uint32_t>& modulus);
  /// F_{p^d} built on the first monic irreducible of degree d in canonical order.
  static const FieldSpec& of_degree(std::uint32_t p, int d);

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return d_; }
  bool is_prime() const { return d_ == 1; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// p^d if it fits in 64 bits.
  std::optional<std::uint64_t> order() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long n) const;
  /// Element with the given coordinates (low-to-high in the basis 1, z, z^2, ...).
  FieldElement element(const std::vector<std::uint32_t>& coords) const;
  /// The class of z (equals from_int(0)... for prime fields it is 0).
  FieldElement generator() const;
  /// Bijection {0..q-1} -> F_q, base-p digits as coordinates.
  FieldElement from_index(std::uint64_t index) const;
  FieldElement random(std::mt19937_64& rng) const;

  std::string name() const;

 private:
  FieldSpec(std::uint32_t p, std::vector<std::uint32_t> modulus);
  friend class FieldRegistry;
  friend class FieldElement;

  std::uint32_t p_;
  int d_;
  std::vector<std::uint32_t> modulus_;  // empty for prime fields
};

/// Element of a FieldSpec. Default-constructed elements are unbound and only
/// useful as placeholders.
class FieldElement {
 public:
  using Limbs = std::array<std::uint16_t, kMaxExtensionDegree>;

  FieldElement() = default;

  const FieldSpec& field() const;
  bool bound() const { return field_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;
  std::uint32_t coord(int i) const { return c_[i]; }
  /// Value of a prime-field element (coordinate 0).
  std::uint32_t value() const { return c_[0]; }
  std::uint64_t index() const;

  FieldElement from_int(long long n) const { return field().from_int(n); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  FieldElement inverse() const;
  FieldElement pow(long long k) const;
  /// x -> x^p
  FieldElement frobenius() const;
  /// Inverse of frobenius: x^(q/p).
  FieldElement pth_root() const;

  bool operator==(const FieldElement& o) const { return field_ == o.field_ && c_ == o.c_; }
  /// Degree of the coordinate vector first, then coordinates high-to-low.
  std::strong_ordering operator<=>(const FieldElement& o) const;

  std::string to_string(char var = 'z') const;

 private:
  friend class FieldSpec;
  void check_same(const FieldElement& o) const;

  const FieldSpec* field_ = nullptr;
  Limbs c_{};
};

/// Smallest power of the characteristic... helpers used across modules.
int ord_p(long long n, long long p);
bool is_prime_number(std::uint64_t n);

}  // namespace eds
