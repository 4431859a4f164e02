#include <doctest.h>

#include <set>

#include "eds/classifier.hpp"

using namespace eds;

namespace {

ConstCurve curve(std::uint32_t p, std::vector<long long> a) {
  const FieldSpec& f = FieldSpec::prime(p);
  return ConstCurve(f.from_int(a[0]), f.from_int(a[1]), f.from_int(a[2]), f.from_int(a[3]), f.from_int(a[4]));
}

long long degree_sum(const std::vector<std::pair<Polynomial, int>>& fs) {
  long long s = 0;
  for (const auto& [g, e] : fs) s += static_cast<long long>(g.degree()) * e;
  return s;
}

}  // namespace

TEST_CASE("inseparable degree") {
  ConstCurve ss = ex_2_3();
  ConstCurve ord = curve(3, {0, 1, 0, 0, 1});  // y^2 = x^3 + x^2 + 1
  REQUIRE(is_supersingular(ss));
  REQUIRE_FALSE(is_supersingular(ord));
  CHECK(inseparable_degree(ss, 1) == 1);
  CHECK(inseparable_degree(ss, 6) == 9);
  CHECK(inseparable_degree(ss, 18) == 81);
  CHECK(inseparable_degree(ord, 6) == 3);
  CHECK(inseparable_degree(ord, 9) == 9);
}

TEST_CASE("profile degrees add up to n^2") {
  std::vector<ConstCurve> curves = {ex_2_3(), curve(3, {0, 1, 0, 0, 1}), curve(2, {1, 0, 0, 0, 1}),
                                    curve(2, {0, 0, 1, 0, 0}), curve(5, {0, 0, 0, 1, 1}), curve(5, {0, 0, 0, 0, 1})};
  for (const auto& E : curves) {
    for (int n = 1; n <= 12; ++n) {
      ConstantProfile pr = constant_eds_profile(E, n);
      CHECK_MESSAGE(pr.a + pr.b * pr.n2() + 2 * pr.p.degree() == static_cast<long long>(n) * n,
                    E.to_string() << " n=" << n);
      CHECK(pr.a == inseparable_degree(E, n));
      CHECK(degree_sum(pr.p_factors) == pr.p.degree());
      CHECK(pr.b == (n % 2 ? 0 : pr.a));
    }
  }
}

TEST_CASE("p(n) vanishes exactly on the non-2-torsion x-coordinates of E[n]") {
  struct Case {
    ConstCurve E;
    int n;
    int k_max;
  };
  std::vector<Case> cases = {{ex_2_3(), 4, 2}, {ex_2_3(), 5, 8}, {curve(3, {0, 1, 0, 0, 1}), 4, 4},
                             {curve(5, {0, 0, 0, 1, 1}), 3, 4}};
  for (const auto& c : cases) {
    OracleResult o = torsion_enum_oracle(c.E, c.n, c.k_max);
    CHECK(o.found == o.expected);
    ConstantProfile pr = constant_eds_profile(c.E, c.n);
    std::set<std::pair<int, std::uint64_t>> seen;
    int count = 0;
    for (const auto& pt : o.points) {
      if (pr.two_torsion.eval_embedded(pt.x).is_zero()) continue;
      CHECK(pr.p.eval_embedded(pt.x).is_zero());
      if (seen.insert({pt.level, pt.x.index()}).second) ++count;
    }
    // p(n) is squarefree here (n prime to p) and every root was seen
    Polynomial rad = Polynomial::constant(pr.p.field().one());
    for (const auto& [g, e] : pr.p_factors) rad *= g;
    CHECK(count == rad.degree());
  }
}

TEST_CASE("the supersingular relation at multiples of p") {
  ConstCurve E = ex_2_3();
  for (int n : {3, 6, 9, 12}) CHECK(theorem_c_check(E, 3, n));
  ConstCurve E2 = curve(2, {0, 0, 1, 0, 0});  // y^2 + y = x^3, supersingular
  for (int n : {2, 4, 6, 8}) CHECK(theorem_c_check(E2, 2, n));
  CHECK_THROWS_AS(theorem_c_check(curve(3, {0, 1, 0, 0, 1}), 3, 3), DomainError);
  CHECK_THROWS_AS(theorem_c_check(E, 3, 4), DomainError);
}

TEST_CASE("exact order polynomials against the torsion oracle") {
  ConstCurve E = ex_2_3();
  for (int d = 3; d <= 5; ++d) {
    Polynomial fd = exact_order_polynomial(E, d);
    OracleResult o = torsion_enum_oracle(E, d, d == 5 ? 8 : 4);
    int exact = 0;
    for (const auto& pt : o.points)
      if (pt.order == d) {
        ++exact;
        CHECK(fd.eval_embedded(pt.x).is_zero());
      }
    CHECK(exact == std::max(0, fd.degree()));
  }
  CHECK_THROWS_AS(exact_order_polynomial(E, 2), DomainError);
}

TEST_CASE("the oracle refuses when the search field is too small") {
  CHECK_THROWS_AS(torsion_enum_oracle(ex_2_3(), 5, 2), DomainError);
}

TEST_CASE("factor rendering") {
  const FieldSpec& f = FieldSpec::prime(3);
  Polynomial x = Polynomial::variable(f);
  Polynomial x1 = Polynomial::from_ints(f, {1, 1});
  CHECK(render_factors({}, 'x') == "1");
  CHECK(render_factors({{x1, 1}}, 'x') == "x + 1");
  CHECK(render_factors({{x, 2}, {x1, 9}}, 'x') == "x^2 * (x + 1)^9");
  CHECK(constant_eds_profile(ex_2_3(), 12).to_string() ==
        "n=12: a=9, b=9, T2 = x^3 + x, p(12) = (x + 1)^9 * (x + 2)^9 * (x^2 + x + 2)^9 * (x^2 + 2*x + 2)^9");
}
