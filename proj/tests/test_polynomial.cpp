#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "eds/polynomial.hpp"

using namespace eds;

namespace {

Polynomial random_poly(const FieldSpec& f, int deg, std::mt19937_64& rng) {
  std::vector<FieldElement> c;
  for (int i = 0; i <= deg; ++i) c.push_back(f.random(rng));
  c.back() = f.one();
  return Polynomial(f, c);
}

// Number of monic irreducibles of degree n over F_q, via Moebius inversion.
long long necklace(long long q, int n) {
  auto mu = [](int k) {
    int r = 1;
    for (int d = 2; d * d <= k; ++d)
      if (k % d == 0) {
        k /= d;
        if (k % d == 0) return 0;
        r = -r;
      }
    return k > 1 ? -r : r;
  };
  long long s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      long long pw = 1;
      for (int i = 0; i < n / d; ++i) pw *= q;
      s += mu(d) * pw;
    }
  return s / n;
}

// Trial division by every monic polynomial of degree <= deg/2.
bool irreducible_by_trial(const Polynomial& f) {
  const FieldSpec& F = f.field();
  const std::uint64_t q = *F.order();
  for (int k = 1; 2 * k <= f.degree(); ++k) {
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<FieldElement> c;
      std::uint64_t r = idx;
      for (int i = 0; i < k; ++i, r /= q) c.push_back(F.from_index(r % q));
      c.push_back(F.one());
      if ((f % Polynomial(F, c)).is_zero()) return false;
    }
  }
  return f.degree() >= 1;
}

}  // namespace

TEST_CASE("division with remainder") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    const FieldSpec& f = FieldSpec::prime(p);
    for (int it = 0; it < 50; ++it) {
      Polynomial a = random_poly(f, 1 + it % 9, rng), b = random_poly(f, 1 + it % 4, rng);
      DivMod qr = divmod(a, b);
      CHECK(qr.quotient * b + qr.remainder == a);
      CHECK(qr.remainder.degree() < b.degree());
    }
  }
  const FieldSpec& f = FieldSpec::prime(5);
  CHECK_THROWS_AS(divmod(Polynomial::variable(f), Polynomial(f)), DomainError);
  CHECK_THROWS_AS(Polynomial::variable(f) / Polynomial::from_ints(f, {1, 1}), DomainError);
}

TEST_CASE("gcd and Bezout") {
  std::mt19937_64 rng(2);
  const FieldSpec& f = FieldSpec::of_degree(3, 2);
  for (int it = 0; it < 40; ++it) {
    Polynomial c = random_poly(f, it % 3, rng);
    Polynomial a = random_poly(f, 3, rng) * c, b = random_poly(f, 4, rng) * c;
    ExtendedGcd e = xgcd(a, b);
    CHECK(e.s * a + e.t * b == e.g);
    CHECK(e.g.is_monic());
    CHECK((a % e.g).is_zero());
    CHECK((b % e.g).is_zero());
    CHECK((e.g % c.monic()).is_zero());
    CHECK(lcm(a, b) * e.g == (a * b).monic());
  }
}

TEST_CASE("irreducible counts match the necklace formula") {
  struct Case {
    std::uint32_t p;
    int d;
    int maxdeg;
  };
  for (auto [p, d, maxdeg] : std::vector<Case>{{2, 1, 8}, {3, 1, 5}, {5, 1, 3}, {2, 2, 4}}) {
    const FieldSpec& f = FieldSpec::of_degree(p, d);
    const std::uint64_t q = *f.order();
    for (int n = 1; n <= maxdeg; ++n) {
      std::uint64_t total = 1;
      for (int i = 0; i < n; ++i) total *= q;
      long long count = 0;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<FieldElement> c;
        std::uint64_t r = idx;
        for (int i = 0; i < n; ++i, r /= q) c.push_back(f.from_index(r % q));
        c.push_back(f.one());
        count += is_irreducible(Polynomial(f, c));
      }
      CHECK_MESSAGE(count == necklace(static_cast<long long>(q), n), "q=" << q << " n=" << n);
    }
  }
}

TEST_CASE("factorization is complete and canonical") {
  std::mt19937_64 rng(3);
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 3}, {3, 2}}) {
    const FieldSpec& f = FieldSpec::of_degree(p, d);
    for (int it = 0; it < 25; ++it) {
      Polynomial a = random_poly(f, 2 + it % 5, rng);
      Polynomial g = a * a * random_poly(f, 1 + it % 3, rng) * f.from_index(1 + it % (*f.order() - 1));
      for (std::uint64_t seed : {0ull, 99ull}) {
        Factorization fac = poly_factor(g, seed);
        CHECK(fac.expand() == g);
        for (std::size_t i = 0; i < fac.factors.size(); ++i) {
          CHECK(fac.factors[i].first.is_monic());
          CHECK(irreducible_by_trial(fac.factors[i].first));
          if (i) CHECK(fac.factors[i - 1].first < fac.factors[i].first);
        }
        CHECK(fac.factors == poly_factor(g, 0).factors);
      }
    }
  }
}

TEST_CASE("squarefree decomposition handles p-th powers") {
  const FieldSpec& f = FieldSpec::prime(3);
  Polynomial t = Polynomial::variable(f);
  Polynomial one = Polynomial::constant(f.one());
  Polynomial g = (t.pow(3) + one).pow(2) * (t * t + one);  // (t+1)^6 (t^2+1)
  auto sq = squarefree_decomposition(g);
  Polynomial prod = Polynomial::constant(f.one());
  for (auto& [h, e] : sq) prod *= h.pow(e);
  CHECK(prod == g);
  Factorization fac = poly_factor(g);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].first == t + one);
  CHECK(fac.factors[0].second == 6);
  CHECK(multiplicity(g, t + one) == 6);
}

TEST_CASE("roots agree with exhaustive evaluation") {
  std::mt19937_64 rng(4);
  const FieldSpec& f = FieldSpec::of_degree(5, 2);
  for (int it = 0; it < 20; ++it) {
    Polynomial g = random_poly(f, 1 + it % 6, rng);
    std::vector<FieldElement> brute;
    for (std::uint64_t i = 0; i < *f.order(); ++i)
      if (g(f.from_index(i)).is_zero()) brute.push_back(f.from_index(i));
    std::sort(brute.begin(), brute.end());
    CHECK(roots(g, it) == brute);
  }
}

TEST_CASE("canonical order and rendering") {
  const FieldSpec& f = FieldSpec::prime(3);
  Polynomial a = Polynomial::from_ints(f, {2, 0, 1});  // t^2 + 2
  Polynomial b = Polynomial::from_ints(f, {0, 1, 1});  // t^2 + t
  Polynomial c = Polynomial::from_ints(f, {1, 2});     // 2*t + 1
  CHECK(c < a);
  CHECK(a < b);
  CHECK(a.to_string() == "t^2 + 2");
  CHECK(c.to_string() == "2*t + 1");
  CHECK(Polynomial(f).to_string() == "0");
  CHECK(powmod(Polynomial::variable(f), 27, a) == Polynomial::variable(f).pow(27) % a);
}
