#pragma once

#include <string>
#include <vector>

#include "eds/weierstrass.hpp"

namespace eds {

/// D_n on a constant curve: a(n)(O) + b(n) div_0(T2) + div_0(p(n)), polynomials in x.
struct ConstantProfile {
  int n;
  long long a;
  long long b;
  Polynomial two_torsion;  // T2, monic squarefree (1 if no affine 2-torsion)
  Polynomial p;            // monic
  std::vector<std::pair<Polynomial, int>> p_factors;

  int n2() const { return two_torsion.degree(); }
  /// "n=4: a=1, b=1, p(4) = (x + 1) * (x + 2) * ..."
  std::string to_string() const;
};

/// deg_i of multiplication by n.
long long inseparable_degree(const ConstCurve& E, int n);

ConstantProfile constant_eds_profile(const ConstCurve& E, int n, std::uint64_t seed = 0);

/// Checks a(n) = p^2 a(n/p), b(n) = p^2 b(n/p), p(n) = p(n/p)^(p^2).
/// Requires E supersingular and p | n.
bool theorem_c_check(const ConstCurve& E, std::uint32_t p, int n, std::uint64_t seed = 0);

/// Monic squarefree polynomial whose roots are the x(Q) of points of exact order d (d >= 3).
Polynomial exact_order_polynomial(const ConstCurve& E, int d);

/// Factor list rendering: "(x + 1)^9 * x", "1" when empty.
std::string render_factors(const std::vector<std::pair<Polynomial, int>>& factors, char var);

}  // namespace eds
