#include <doctest.h>

#include <map>

#include "eds/classifier.hpp"

using namespace eds;

namespace {

// Rows of the supersingular table, read off column by column.
std::map<int, std::string> row(std::uint32_t p, int upto) {
  std::map<int, std::string> r;
  for (int n = 1; n <= upto; ++n) {
    std::string v;
    if (p == 2) {
      if (n == 1 || n == 2 || n == 3 || n == 4 || n == 6 || n == 8) v = "*";
      else v = n % 2 ? "yes" : "no";
    } else if (p == 3) {
      if (n == 1 || n == 2 || n == 3 || n == 6 || n == 9) v = "*";
      else v = n % 3 ? "yes" : "no";
    } else {
      const int P = static_cast<int>(p);
      if (n == 1 || n == 2 || n == P || n == 2 * P || (n == 3 * P && p % 3 == 2)) v = "*";
      else if (n == 3 * P) v = "no";
      else if (n == 3) v = "yes";
      else v = n % P ? "yes" : "no";
    }
    r[n] = v;
  }
  return r;
}

}  // namespace

TEST_CASE("table predictions") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (const auto& [n, v] : row(p, 4 * static_cast<int>(p) + 6))
      CHECK_MESSAGE(to_string(table1_predict(p, n)) == v, "p=" << p << " n=" << n);
    for (int n : table1_star_cells(p)) CHECK(table1_predict(p, n) == Verdict::Star);
  }
  CHECK(table1_star_cells(2) == std::vector<int>{1, 2, 3, 4, 6, 8});
  CHECK(table1_star_cells(7) == std::vector<int>{1, 2, 7, 14});
  CHECK(table1_star_cells(5) == std::vector<int>{1, 2, 5, 10, 15});
  CHECK_THROWS_AS(table1_predict(9, 3), DomainError);
  CHECK(theorem_a_predict(3));
  CHECK_FALSE(theorem_a_predict(2));
  CHECK(ordinary_coarse_predict(5));
  CHECK_FALSE(ordinary_coarse_predict(4));
}

TEST_CASE("ordsharp family has the requested j and I0* fibres") {
  for (auto [p, j] : std::vector<std::pair<std::uint32_t, long long>>{{5, 0}, {5, 1}, {5, 2}, {7, 3}, {3, 0}}) {
    CatalogEntry e = gen_ordsharp1(p, j);
    const FieldSpec& f = FieldSpec::prime(p);
    CHECK(e.curve.j_invariant() == RationalFunction(Polynomial::constant(f.from_int(j))));
    CHECK(e.curve.contains(e.point));
    CHECK_FALSE(is_constant_pair(e.curve, e.point));
    for (const auto& ld : local_data_report(e.curve))
      if (ld.kodaira.kind != KodairaType::Kind::I0) CHECK(ld.kodaira.to_string() == "I0*");
  }
  CHECK(gen_ordsharp1(5, 2).id == "ordsharp1_p5_j2");
}

TEST_CASE("char 3 twist family") {
  CatalogEntry e = gen_char3_ordinary_twist(1);
  CHECK(e.curve.contains(e.point));
  CHECK_FALSE(is_supersingular(e.curve));
  for (const auto& ld : local_data_report(e.curve))
    if (ld.kodaira.kind != KodairaType::Kind::I0) CHECK(ld.kodaira.to_string() == "I0*");
}

TEST_CASE("seeded j = 0 pairs are reproducible and admissible") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RandomPair a = random_j0_pair(5, seed), b = random_j0_pair(5, seed);
    CHECK(a.curve == b.curve);
    CHECK(a.point == b.point);
    CHECK(a.curve.j_invariant().is_zero());
    CHECK(a.curve.contains(a.point));
    CHECK_FALSE(is_constant_pair(a.curve, a.point));
    CHECK_FALSE(torsion_check(a.curve, a.point).torsion);
  }
}

TEST_CASE("the sweep reports a wrong stated type") {
  CatalogEntry e = ex_3_4();
  e.stated_types = {{"(t)", "III"}};
  SweepReport rep = consistency_sweep({e, ex_7_4()}, Schedule::Serial);
  CHECK_FALSE(rep.ok());
  REQUIRE_FALSE(rep.failures.empty());
  CHECK(rep.failures[0].find("ex_3_4") != std::string::npos);
  CHECK(rep.render().back().rfind("sweep: FAILED", 0) == 0);
}

TEST_CASE("the sweep refuses torsion and constant entries") {
  const FieldSpec& f = FieldSpec::prime(5);
  RationalFunction z(f);
  auto c = [&](long long v) { return RationalFunction(Polynomial::constant(f.from_int(v))); };
  CatalogEntry e{"const", "", "", Curve(z, z, z, z, c(1)), FfPoint(c(2), c(3)), 6, {}};
  SweepReport rep = consistency_sweep({e}, Schedule::Serial);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("multiples keep the curve") {
  CatalogEntry e = multiple_of(ex_7_4(), 5, 12);
  CHECK(e.id == "ex_7_4_x5");
  CHECK(e.curve == ex_7_4().curve);
  CHECK(e.point == ex_7_4().curve.scalar_mul(ex_7_4().point, 5));
}
