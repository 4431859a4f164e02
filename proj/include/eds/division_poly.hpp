#pragma once

#include <map>
#include <vector>

#include "eds/curve.hpp"
#include "eds/polynomial.hpp"

namespace eds {

/// Minimal dense polynomial in x over a curve scalar K.
template <CurveScalar K>
class DensePoly {
 public:
  explicit DensePoly(K zero) : zero_(std::move(zero)) {}
  DensePoly(K zero, std::vector<K> c) : zero_(std::move(zero)), c_(std::move(c)) { trim(); }

  static DensePoly constant(const K& c) { return DensePoly(c.from_int(0), {c}); }
  static DensePoly x(const K& like) { return DensePoly(like.from_int(0), {like.from_int(0), like.from_int(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const K& coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : zero_; }
  const std::vector<K>& coeffs() const { return c_; }

  DensePoly operator+(const DensePoly& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), zero_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return DensePoly(zero_, std::move(r));
  }
  DensePoly operator-(const DensePoly& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), zero_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return DensePoly(zero_, std::move(r));
  }
  DensePoly operator*(const DensePoly& o) const {
    if (c_.empty() || o.c_.empty()) return DensePoly(zero_);
    std::vector<K> r(c_.size() + o.c_.size() - 1, zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return DensePoly(zero_, std::move(r));
  }
  DensePoly operator*(const K& k) const {
    std::vector<K> r = c_;
    for (auto& c : r) c = c * k;
    return DensePoly(zero_, std::move(r));
  }

  K operator()(const K& x) const {
    K acc = zero_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  bool operator==(const DensePoly& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  K zero_;
  std::vector<K> c_;
};

/// psi_n^2 and phi_n as polynomials in x, plus the y-free factor f_n with
/// psi_n = f_n (n odd) or psi_2 * f_n (n even).
template <CurveScalar K>
struct DivisionPolyPair {
  int n;
  DensePoly<K> psi_sq;
  DensePoly<K> phi;
  DensePoly<K> f;
  bool has_psi2_factor;  // n even
};

/// Memoized division polynomials of one curve.
template <CurveScalar K>
class DivisionPolynomials {
 public:
  explicit DivisionPolynomials(const WeierstrassModel<K>& E) : E_(E), inv_(E.invariants()) {
    const K& b2 = inv_.b2;
    const K& b4 = inv_.b4;
    const K& b6 = inv_.b6;
    const K& b8 = inv_.b8;
    auto n = [&](long long v) { return b2.from_int(v); };
    K zero = n(0);
    F_ = DensePoly<K>(zero, {b6, n(2) * b4, b2, n(4)});
    f_.emplace(0, DensePoly<K>(zero));
    f_.emplace(1, DensePoly<K>::constant(n(1)));
    f_.emplace(2, DensePoly<K>::constant(n(1)));
    f_.emplace(3, DensePoly<K>(zero, {b8, n(3) * b6, n(3) * b4, b2, n(3)}));
    f_.emplace(4, DensePoly<K>(zero, {b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, n(10) * b8, n(10) * b6, n(5) * b4, b2, n(2)}));
  }

  /// psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
  const DensePoly<K>& psi2_sq() const { return F_; }

  const DensePoly<K>& f(int k) {
    if (k < 0) throw DomainError("division polynomial of negative index");
    auto it = f_.find(k);
    if (it != f_.end()) return it->second;
    DensePoly<K> value(E_.zero());
    const int m = k / 2;
    if (k % 2 == 1) {
      DensePoly<K> fm = f(m), fm1 = f(m + 1), fm2 = f(m + 2), fmm = f(m - 1);
      DensePoly<K> F2 = F_ * F_;
      if (m % 2 == 0)
        value = F2 * fm2 * fm * fm * fm - fmm * fm1 * fm1 * fm1;
      else
        value = fm2 * fm * fm * fm - F2 * fmm * fm1 * fm1 * fm1;
    } else {
      DensePoly<K> fm = f(m), fm1 = f(m + 1), fm2 = f(m + 2), fmm = f(m - 1), fmm2 = f(m - 2);
      value = fm * (fm2 * fmm * fmm - fmm2 * fm1 * fm1);
    }
    return f_.emplace(k, std::move(value)).first->second;
  }

  DivisionPolyPair<K> pair(int n) {
    if (n < 1) throw DomainError("division polynomial index must be >= 1");
    const bool even = n % 2 == 0;
    DensePoly<K> fn = f(n);
    DensePoly<K> psi_sq = even ? F_ * fn * fn : fn * fn;
    DensePoly<K> cross = even ? f(n + 1) * f(n - 1) : F_ * f(n + 1) * f(n - 1);
    DensePoly<K> phi = DensePoly<K>::x(E_.zero()) * psi_sq - cross;
    return {n, psi_sq, phi, fn, even};
  }

 private:
  WeierstrassModel<K> E_;
  Invariants<K> inv_;
  DensePoly<K> F_{E_.zero()};
  std::map<int, DensePoly<K>> f_;
};

template <CurveScalar K>
DivisionPolyPair<K> division_poly(const WeierstrassModel<K>& E, int n) {
  DivisionPolynomials<K> table(E);
  return table.pair(n);
}

/// DensePoly over a constant field as a Polynomial (variable printed as x by callers).
inline Polynomial to_polynomial(const DensePoly<FieldElement>& p, const FieldSpec& f) {
  return Polynomial(f, p.coeffs());
}

}  // namespace eds
