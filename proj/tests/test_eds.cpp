#include <doctest.h>

#include <numeric>

#include "eds/classifier.hpp"

using namespace eds;

namespace {

RationalFunction rf(const FieldSpec& f, std::vector<long long> c) {
  return RationalFunction(Polynomial::from_ints(f, c));
}

bool integral_model(const Curve& E) {
  for (const auto& a : E.coefficients())
    if (!a.is_polynomial()) return false;
  return true;
}

}  // namespace

TEST_CASE("x(nP) matches the division polynomial quotient") {
  for (const auto& e : {ex_3_4(), ex_6_3(), ex_7_4()}) {
    DivisionPolynomials<RationalFunction> dp(e.curve);
    const RationalFunction& x = e.point.x();
    for (int n = 1; n <= 8; ++n) {
      auto pr = dp.pair(n);
      FfPoint Q = e.curve.scalar_mul(e.point, n);
      REQUIRE(!Q.is_infinity());
      CHECK_MESSAGE(pr.phi(x) / pr.psi_sq(x) == Q.x(), e.id << " n=" << n);
    }
  }
}

TEST_CASE("D_n at good places is half the valuation of psi_n^2(x(P))") {
  for (const auto& e : {ex_3_4(), ex_6_3(), ex_7_2(), ex_7_4()}) {
    REQUIRE(integral_model(e.curve));
    REQUIRE(e.point.x().is_polynomial());
    REQUIRE(e.point.y().is_polynomial());
    const Polynomial disc = e.curve.discriminant().num();
    EdsSequence seq = eds_sequence_or_throw(e.curve, e.point, 10);
    DivisionPolynomials<RationalFunction> dp(e.curve);
    for (int n = 1; n <= 10; ++n) {
      RationalFunction s = dp.pair(n).psi_sq(e.point.x());
      REQUIRE(s.is_polynomial());
      Divisor expect;
      for (const auto& [pi, k] : poly_factor(s.num()).factors) {
        if (multiplicity(disc, pi) > 0) continue;
        REQUIRE(k % 2 == 0);
        expect.set(Place::from_factor(pi), k / 2);
      }
      Divisor got;
      for (const auto& [v, k] : seq.term(n).entries())
        if (!v.is_infinity() && multiplicity(disc, v.polynomial()) == 0) got.set(v, k);
      CHECK_MESSAGE(got == expect, e.id << " n=" << n);
    }
  }
}

TEST_CASE("serial and parallel schedules agree") {
  for (const auto& e : catalog_generators()) {
    const int N = std::min(e.N, 12);
    EdsSequence a = eds_sequence_or_throw(e.curve, e.point, N, Schedule::Serial);
    EdsSequence b = eds_sequence_or_throw(e.curve, e.point, N, Schedule::Parallel);
    CHECK_MESSAGE(a.terms() == b.terms(), e.id);
    CHECK(render_table(a) == render_table(b));
    for (int n : {1, N / 2 + 1, N}) CHECK(eds_term(e.curve, e.point, n) == a.term(n));
  }
}

TEST_CASE("strong divisibility, effectivity, and the empty first terms") {
  for (const auto& e : catalog_generators()) {
    const int N = std::min(e.N, 12);
    EdsSequence seq = eds_sequence_or_throw(e.curve, e.point, N);
    for (int m = 1; m <= N; ++m) {
      CHECK(seq.term(m).is_effective());
      for (int n = 1; n <= N; ++n) CHECK_MESSAGE(strong_divisibility_check(seq, m, n), e.id << " m=" << m << " n=" << n);
    }
  }
}

TEST_CASE("seeds do not change the terms") {
  CatalogEntry e = ex_7_4();
  auto a = eds_sequence_or_throw(e.curve, e.point, 16, Schedule::Serial, 0);
  auto b = eds_sequence_or_throw(e.curve, e.point, 16, Schedule::Serial, 12345);
  CHECK(a.terms() == b.terms());
}

TEST_CASE("zsigmondy report agrees with primitive places and apparition ranks") {
  CatalogEntry e = ex_7_4();
  EdsSequence seq = eds_sequence_or_throw(e.curve, e.point, e.N);
  ZsigmondyReport rep = zsigmondy_report(seq);
  REQUIRE(rep.rows.size() == static_cast<std::size_t>(e.N));
  for (const auto& row : rep.rows) {
    CHECK(row.witnesses == primitive_places(seq, row.n));
    for (const auto& v : row.witnesses) {
      ApparitionRecord a = rank_of_apparition(seq, v);
      REQUIRE(a.m.has_value());
      CHECK(*a.m == row.n);
      // every later term divisible by the rank contains v
      for (int k = 2 * row.n; k <= e.N; k += row.n) CHECK(seq.term(k)[v] > 0);
    }
  }
  CHECK(rep.largest_lacking == 20);
  const FieldSpec& f = FieldSpec::prime(2);
  ApparitionRecord none = rank_of_apparition(seq, Place::finite(Polynomial::from_ints(f, {1, 1, 0, 0, 0, 0, 0, 1})));
  CHECK_FALSE(none.m.has_value());
}

TEST_CASE("torsion points are refused") {
  // Tate normal form with b = c: (0, 0) has order 5
  const FieldSpec& f = FieldSpec::prime(7);
  RationalFunction t = RationalFunction::variable(f);
  RationalFunction one = rf(f, {1});
  Curve E(one - t, -t, -t, RationalFunction(f), RationalFunction(f));
  FfPoint P{RationalFunction(f), RationalFunction(f)};
  REQUIRE(E.contains(P));
  TorsionCheck tc = torsion_check(E, P);
  CHECK(tc.torsion);
  CHECK(tc.value == 5);
  auto out = eds_sequence(E, P, 8);
  REQUIRE(std::holds_alternative<TorsionHit>(out));
  CHECK(std::get<TorsionHit>(out).order == 5);
  CHECK_NOTHROW(eds_sequence(E, P, 4));
  CHECK_THROWS_AS(eds_sequence_or_throw(E, P, 5), TorsionHitError);
  CHECK_THROWS_AS(eds_term(E, P, 10), TorsionHitError);

  // constant point of order dividing #E(F_5) = 6
  const FieldSpec& g = FieldSpec::prime(5);
  Curve C(rf(g, {0}), rf(g, {0}), rf(g, {0}), rf(g, {0}), rf(g, {1}));
  FfPoint Q(rf(g, {2}), rf(g, {3}));
  TorsionCheck tq = torsion_check(C, Q);
  CHECK(tq.torsion);
  CHECK(C.scalar_mul(Q, tq.value).is_infinity());
  for (int k = 1; k < tq.value; ++k) CHECK_FALSE(C.scalar_mul(Q, k).is_infinity());
}

TEST_CASE("torsion_check agrees with exhaustive multiplication") {
  for (const auto& e : catalog_generators()) {
    TorsionCheck tc = torsion_check(e.curve, e.point, 24);
    bool brute = false;
    FfPoint Q = e.point;
    for (int n = 1; n <= 24 && !brute; ++n, Q = e.curve.add(Q, e.point)) brute = Q.is_infinity();
    CHECK_MESSAGE(tc.torsion == brute, e.id);
  }
}

TEST_CASE("input validation") {
  CatalogEntry e = ex_3_4();
  const FieldSpec& f = FieldSpec::prime(3);
  CHECK_THROWS_AS(EdsContext(e.curve, FfPoint(rf(f, {1}), rf(f, {2, 1}))), DomainError);
  EdsSequence seq = eds_sequence_or_throw(e.curve, e.point, 4);
  CHECK_THROWS_AS(seq.term(0), DomainError);
  CHECK_THROWS_AS(seq.term(5), DomainError);
  CHECK_THROWS_AS(eds_sequence(e.curve, e.point, 0), DomainError);
}

TEST_CASE("table rendering") {
  CatalogEntry e = ex_3_4();
  auto lines = render_table(eds_sequence_or_throw(e.curve, e.point, 5));
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "D_1 = 1");
  CHECK(lines[2] == "D_3 = t^2  [new: (t)]");
  CHECK(lines[4] == "D_5 = (t^2 + t + 2)^3  [new: (t^2 + t + 2)]");
}
