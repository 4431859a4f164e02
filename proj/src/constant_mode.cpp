#include "eds/constant_mode.hpp"

#include <map>

namespace eds {

namespace {

Polynomial radical(const Polynomial& f) {
  Polynomial out = Polynomial::constant(f.field().one());
  if (f.degree() < 1) return out;
  for (const auto& [g, e] : squarefree_decomposition(f.monic())) out = out * g;
  return out;
}

Polynomial psi_sq(const ConstCurve& E, int n) {
  DivisionPolynomials<FieldElement> table(E);
  return to_polynomial(table.pair(n).psi_sq, E.a1().field());
}

Polynomial two_torsion_poly(const ConstCurve& E) {
  DivisionPolynomials<FieldElement> table(E);
  return radical(to_polynomial(table.psi2_sq(), E.a1().field()));
}

}  // namespace

std::string render_factors(const std::vector<std::pair<Polynomial, int>>& factors, char var) {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [g, e] : factors) {
    if (!out.empty()) out += " * ";
    std::string s = g.to_string(var);
    bool bare = g.term_count() == 1 && s.find('*') == std::string::npos && s.find('^') == std::string::npos;
    if (!bare && (factors.size() > 1 || e != 1)) s = "(" + s + ")";
    out += s;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string ConstantProfile::to_string() const {
  return "n=" + std::to_string(n) + ": a=" + std::to_string(a) + ", b=" + std::to_string(b) + ", T2 = " +
         two_torsion.to_string('x') + ", p(" + std::to_string(n) + ") = " + render_factors(p_factors, 'x');
}

long long inseparable_degree(const ConstCurve& E, int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  const std::uint32_t p = E.a1().field().characteristic();
  const int k = ord_p(static_cast<std::uint64_t>(n), p);
  long long d = 1;
  const int e = is_supersingular(E) ? 2 * k : k;
  for (int i = 0; i < e; ++i) d *= p;
  return d;
}

ConstantProfile constant_eds_profile(const ConstCurve& E, int n, std::uint64_t seed) {
  if (n < 1) throw DomainError("n must be >= 1");
  const FieldSpec& f = E.a1().field();
  const long long deg_i = inseparable_degree(E, n);
  ConstantProfile out{n, deg_i, n % 2 == 0 ? deg_i : 0, two_torsion_poly(E), Polynomial::constant(f.one()), {}};

  Polynomial Q = psi_sq(E, n);
  const long long nn = static_cast<long long>(n) * n;
  if (Q.is_zero() || nn - Q.degree() != deg_i)
    throw ConsistencyError("constant profile n=" + std::to_string(n) + ": deg psi_n^2 = " + std::to_string(Q.degree()) +
                           " but deg_i = " + std::to_string(deg_i));
  Q = Q.monic();
  if (out.b > 0) Q = Q / out.two_torsion.pow(static_cast<unsigned>(out.b));
  if (Q.degree() >= 1) {
    for (const auto& [g, e] : poly_factor(Q, seed).factors) {
      if (e % 2 != 0)
        throw ConsistencyError("constant profile n=" + std::to_string(n) + ": odd multiplicity at " + g.to_string('x'));
      out.p_factors.emplace_back(g, e / 2);
      out.p = out.p * g.pow(static_cast<unsigned>(e / 2));
    }
  }
  if (out.a + out.b * out.n2() + 2LL * out.p.degree() != nn)
    throw ConsistencyError("constant profile n=" + std::to_string(n) + ": degree bookkeeping fails");
  return out;
}

bool theorem_c_check(const ConstCurve& E, std::uint32_t p, int n, std::uint64_t seed) {
  if (E.a1().field().characteristic() != p) throw DomainError("curve is not in characteristic " + std::to_string(p));
  if (!is_supersingular(E)) throw DomainError("curve is not supersingular");
  if (n < 1 || n % static_cast<int>(p) != 0) throw DomainError("p must divide n");
  const long long p2 = static_cast<long long>(p) * p;
  ConstantProfile hi = constant_eds_profile(E, n, seed);
  ConstantProfile lo = constant_eds_profile(E, n / static_cast<int>(p), seed);
  if (hi.a != p2 * lo.a) return false;
  // b multiplies div_0(T2), which is empty when T2 = 1
  if (hi.n2() > 0 && hi.b != p2 * lo.b) return false;
  if (hi.p_factors.size() != lo.p_factors.size()) return false;
  for (std::size_t i = 0; i < hi.p_factors.size(); ++i)
    if (!(hi.p_factors[i].first == lo.p_factors[i].first) || hi.p_factors[i].second != p2 * lo.p_factors[i].second)
      return false;
  return true;
}

Polynomial exact_order_polynomial(const ConstCurve& E, int d) {
  if (d < 3) throw DomainError("exact-order polynomial needs d >= 3");
  auto lambda = [&](int k) { return k <= 2 ? Polynomial::constant(E.a1().field().one()) : radical(psi_sq(E, k)); };
  Polynomial top = lambda(d);
  Polynomial below = Polynomial::constant(E.a1().field().one());
  for (int e = 3; e < d; ++e)
    if (d % e == 0) below = lcm(below, lambda(e));
  // 2-torsion x-values sit in Lambda_d for even d; they have exact order 2.
  if (d % 2 == 0) below = lcm(below, two_torsion_poly(E));
  return top / gcd(top, below);
}

}  // namespace eds
