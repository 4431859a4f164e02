#include "eds/classifier.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <random>
#include <set>

namespace eds {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Star:
      return "*";
  }
  return "?";
}

std::vector<int> table1_star_cells(std::uint32_t p) {
  if (!is_prime_number(p)) throw DomainError(std::to_string(p) + " is not prime");
  const int q = static_cast<int>(p);
  if (p == 2) return {1, 2, 3, 4, 6, 8};
  if (p == 3) return {1, 2, 3, 6, 9};
  if (p % 3 == 1) return {1, 2, q, 2 * q};
  return {1, 2, q, 2 * q, 3 * q};
}

Verdict table1_predict(std::uint32_t p, int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  auto stars = table1_star_cells(p);
  if (std::find(stars.begin(), stars.end(), n) != stars.end()) return Verdict::Star;
  const bool divides = n % static_cast<int>(p) == 0;
  if (p == 2) return divides ? Verdict::No : Verdict::Yes;
  if (p == 3) return divides ? Verdict::No : Verdict::Yes;
  // p > 3: the remaining cells are n = 3 (yes), n = 3p when p = 1 mod 3 (no),
  // and the two tails.
  if (n == 3) return Verdict::Yes;
  return divides ? Verdict::No : Verdict::Yes;
}

bool theorem_a_predict(int n) { return n > 2; }
bool ordinary_coarse_predict(int n) { return n > 4; }

namespace {

RationalFunction poly_rf(const FieldSpec& f, std::initializer_list<long long> c) {
  return RationalFunction(Polynomial::from_ints(f, c));
}

RationalFunction const_rf(const FieldSpec& f, long long c) { return RationalFunction(Polynomial::constant(f.from_int(c))); }

long long mod(long long a, long long p) { return ((a % p) + p) % p; }

std::vector<StatedType> all_bad(const std::string& k) { return {StatedType{std::nullopt, k}}; }

}  // namespace

CatalogEntry gen_ordsharp1(std::uint32_t p, long long j) {
  if (p < 3 || !is_prime_number(p)) throw DomainError("gen_ordsharp1 needs a prime p >= 3");
  const FieldSpec& f = FieldSpec::prime(p);
  long long a = -1, b = -1;
  if (p == 3) {
    if (mod(j, 3) != 0) throw DomainError("in characteristic 3 this family has j = 0 only");
    a = 1;
    b = 0;
  } else {
    FieldElement target = f.from_int(j);
    for (long long ai = 0; ai < p && a < 0; ++ai) {
      for (long long bi = 0; bi < p; ++bi) {
        FieldElement A = f.from_int(ai), B = f.from_int(bi);
        FieldElement den = f.from_int(4) * A * A * A + f.from_int(27) * B * B;
        if (den.is_zero()) continue;
        if (f.from_int(1728) * f.from_int(4) * A * A * A / den == target) {
          a = ai;
          b = bi;
          break;
        }
      }
    }
    if (a < 0) throw DomainError("no short Weierstrass curve over F_" + std::to_string(p) + " with j = " + std::to_string(j));
  }
  RationalFunction t = RationalFunction::variable(f);
  RationalFunction r = poly_rf(f, {b, a, 0, 1});
  RationalFunction zero(f);
  Curve E(zero, zero, zero, r * r * const_rf(f, a), r * r * r * const_rf(f, b));
  std::string id = "ordsharp1_p" + std::to_string(p) + "_j" + std::to_string(mod(j, p));
  return {id,
          "p=" + std::to_string(p) + " j=" + std::to_string(mod(j, p)) + " a=" + std::to_string(a) + " b=" + std::to_string(b),
          "quadratic twist by r = t^3 + a t + b of a constant curve; D_1 = D_2 = 0",
          E,
          FfPoint(r * t, r * r),
          12,
          all_bad("I0*")};
}

CatalogEntry gen_char3_ordinary_twist(long long j) {
  const FieldSpec& f = FieldSpec::prime(3);
  if (mod(j, 3) == 0) throw DomainError("twist family needs j != 0");
  FieldElement J = f.from_int(j);
  FieldElement j2 = J * J, j5 = J.pow(5);
  RationalFunction d(Polynomial(f, {f.from_int(2) * j5, f.zero(), j2, f.one()}));
  RationalFunction t = RationalFunction::variable(f);
  RationalFunction zero(f);
  Curve E(zero, d * RationalFunction(Polynomial::constant(j2)), zero, zero,
          d * d * d * RationalFunction(Polynomial::constant(f.from_int(2) * j5)));
  return {"twist3_j" + std::to_string(mod(j, 3)),
          "p=3 j=" + std::to_string(mod(j, 3)),
          "ordinary quadratic twist by d = t^3 + j^2 t^2 + 2 j^5; height-1 point",
          E,
          FfPoint(t * d, d * d),
          12,
          all_bad("I0*")};
}

CatalogEntry gen_lemma65(std::uint32_t p) {
  if (p <= 3 || !is_prime_number(p) || p % 3 != 2) throw DomainError("gen_lemma65 needs a prime p > 3 with p = 2 mod 3");
  const FieldSpec& f = FieldSpec::prime(p);
  RationalFunction t = RationalFunction::variable(f);
  RationalFunction zero(f);
  Curve E(zero, zero, zero, zero, poly_rf(f, {0, 0, 1, -1}));
  return {"lemma65_p" + std::to_string(p), "p=" + std::to_string(p), "j = 0 curve with A = t^2 - t^3 and P = (t, t)",
          E, FfPoint(t, t), 20, {}};
}

CatalogEntry ex_3_4() {
  const FieldSpec& f = FieldSpec::prime(3);
  RationalFunction zero(f);
  Curve E(zero, zero, zero, poly_rf(f, {0, 1}), poly_rf(f, {0, -1}));
  return {"ex_3_4", "p=3", "supersingular; III* at infinity, II at t = 0", E,
          FfPoint(const_rf(f, 1), const_rf(f, 1)), 12,
          {{"(t)", "II"}, {"inf", "III*"}}};
}

CatalogEntry ex_7_2() {
  CatalogEntry e = gen_ordsharp1(5, 2);
  e.id = "ex_7_2";
  e.note = "ordinary j != 0 instance with a = b = 1 over F_5";
  return e;
}

CatalogEntry ex_7_3() {
  const FieldSpec& f = FieldSpec::prime(3);
  RationalFunction zero(f);
  Curve E(zero, zero, zero, poly_rf(f, {0, 0, 0, 1}), poly_rf(f, {0, 0, 0, 0, 1}));
  return {"ex_7_3", "p=3", "supersingular; height 1/6", E, FfPoint(zero, poly_rf(f, {0, 0, 1})), 27,
          {{"(t)", "IV*"}, {"inf", "III"}}};
}

CatalogEntry ex_7_4() {
  const FieldSpec& f = FieldSpec::prime(2);
  RationalFunction zero(f);
  Curve E(zero, zero, poly_rf(f, {0, 1}), poly_rf(f, {0, 0, 1}), zero);
  return {"ex_7_4", "p=2", "supersingular j = 0; generator of height 1/12", E, FfPoint(poly_rf(f, {0, 1}), zero), 20,
          {{"(t)", "IV"}, {"inf", "I1*"}}};
}

CatalogEntry ex_7_5(int k) {
  if (k != 1 && k != 2) throw DomainError("ex_7_5 is defined for k = 1, 2");
  const FieldSpec& f = FieldSpec::prime(2);
  RationalFunction zero(f);
  Polynomial a3 = Polynomial::monomial(f.one(), 2 * k);
  Curve E(zero, poly_rf(f, {0, 0, 1, 1}), RationalFunction(a3), poly_rf(f, {0, 1}), zero);
  return {"ex_7_5_" + std::to_string(k), "p=2 k=" + std::to_string(k), "supersingular j = 0 family with P = (0, 0)", E,
          FfPoint(zero, zero), 12,
          {{"(t)", "III"}, {"inf", k == 1 ? "I5*" : "I1*"}}};
}

CatalogEntry ex_7_6(long long j) {
  const FieldSpec& f = FieldSpec::prime(2);
  if (mod(j, 2) == 0) throw DomainError("ex_7_6 needs j != 0");
  RationalFunction zero(f);
  RationalFunction t = RationalFunction::variable(f);
  RationalFunction jinv = const_rf(f, j).inverse();
  Curve E(const_rf(f, 1), t + (t * t * const_rf(f, j)).inverse(), zero, zero, jinv);
  return {"ex_7_6", "p=2 j=" + std::to_string(mod(j, 2)) + " a=t", "ordinary j != 0 in characteristic 2", E,
          FfPoint(t, zero), 12,
          {{"(t)", "I4*"}}};
}

CatalogEntry ex_6_3() {
  CatalogEntry e = gen_lemma65(5);
  e.id = "ex_6_3";
  return e;
}

ConstCurve ex_2_3() {
  const FieldSpec& f = FieldSpec::prime(3);
  return ConstCurve(f.zero(), f.zero(), f.zero(), f.one(), f.zero());
}

CatalogEntry multiple_of(const CatalogEntry& base, int m, int N) {
  if (m < 1) throw DomainError("multiplier must be >= 1");
  CatalogEntry e = base;
  e.id = base.id + "_x" + std::to_string(m);
  e.params = base.params + " m=" + std::to_string(m);
  e.note = std::to_string(m) + " times the point of " + base.id;
  e.point = base.curve.scalar_mul(base.point, m);
  e.N = N;
  return e;
}

std::vector<CatalogEntry> catalog_generators() {
  std::vector<CatalogEntry> out;
  out.push_back(ex_3_4());
  out.push_back(ex_7_2());
  out.push_back(ex_7_3());
  out.push_back(ex_7_4());
  out.push_back(ex_7_5(1));
  out.push_back(ex_7_5(2));
  out.push_back(ex_7_6(1));
  out.push_back(ex_6_3());
  out.push_back(gen_ordsharp1(3, 0));
  CatalogEntry ss5 = gen_ordsharp1(5, 0);
  ss5.N = 15;
  out.push_back(ss5);
  out.push_back(gen_char3_ordinary_twist(1));
  out.push_back(multiple_of(ex_7_4(), 5, 12));
  out.push_back(multiple_of(ex_7_3(), 4, 12));
  out.push_back(multiple_of(ex_6_3(), 5, 15));
  return out;
}

std::string SweepLine::to_string() const {
  std::string s = entry + " n=" + std::to_string(n) + " computed=" + (primitive ? "primitive" : "none") +
                  " predicted=" + predicted;
  if (predicted == "*") s += std::string(" witness=") + (primitive ? "yes-side" : "no-side");
  if (!rule.empty()) s += " rule=" + rule;
  s += ok ? " OK" : " FAIL";
  return s;
}

std::string StarCoverage::to_string() const {
  auto join = [](const std::vector<std::string>& v) {
    if (v.empty()) return std::string("none");
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
  };
  return "star p=" + std::to_string(p) + " n=" + std::to_string(n) + " yes-side=" + join(yes_side) +
         " no-side=" + join(no_side) + (ok() ? " OK" : " FAIL");
}

std::vector<std::string> SweepReport::render() const {
  std::vector<std::string> out;
  for (const auto& l : lines) out.push_back(l.to_string());
  for (const auto& s : stars) out.push_back(s.to_string());
  for (const auto& f : failures) out.push_back("violation: " + f);
  out.push_back(ok() ? "sweep: OK" : "sweep: FAILED (" + std::to_string(failures.size()) + " violations)");
  return out;
}

namespace {

struct EntryResult {
  std::vector<std::string> failures;
  std::vector<SweepLine> lines;
  bool supersingular = false;
  std::uint32_t p = 0;
};

EntryResult sweep_entry(const CatalogEntry& e, std::uint64_t seed) {
  EntryResult r;
  r.p = e.characteristic();
  auto fail = [&](const std::string& msg) { r.failures.push_back(e.id + ": " + msg); };

  TorsionCheck tc = torsion_check(e.curve, e.point, 36);
  if (tc.torsion) {
    fail("point has torsion order " + std::to_string(tc.value));
    return r;
  }
  if (is_constant_pair(e.curve, e.point)) fail("pair is constant");

  if (!e.stated_types.empty()) {
    auto report = local_data_report(e.curve);
    for (const auto& st : e.stated_types) {
      bool matched = false;
      for (const auto& ld : report) {
        if (ld.reduction == ReductionClass::Good) continue;
        if (st.place && ld.place.to_string() != *st.place) continue;
        matched = true;
        if (ld.kodaira.to_string() != st.kodaira)
          fail("type at " + ld.place.to_string() + " is " + ld.kodaira.to_string() + ", stated " + st.kodaira);
      }
      if (!matched) fail("no bad place " + st.place.value_or("(any)") + " for stated type " + st.kodaira);
    }
  }

  auto outcome = eds_sequence(e.curve, e.point, e.N, Schedule::Serial, seed);
  if (auto* hit = std::get_if<TorsionHit>(&outcome)) {
    fail("torsion hit at n=" + std::to_string(hit->order));
    return r;
  }
  const EdsSequence& seq = std::get<EdsSequence>(outcome);

  for (int m = 1; m <= std::min(12, e.N); ++m)
    for (int n = m; n <= std::min(12, e.N); ++n)
      if (!strong_divisibility_check(seq, m, n))
        fail("strong divisibility fails at (" + std::to_string(m) + ", " + std::to_string(n) + ")");

  r.supersingular = is_supersingular(e.curve);
  RationalFunction j = e.curve.j_invariant();
  const bool ordinary_const_j = !r.supersingular && j.is_constant();
  auto rep = zsigmondy_report(seq);
  for (const auto& row : rep.rows) {
    SweepLine line{e.id, row.n, row.has_primitive, "-", "", true};
    if (r.supersingular) {
      Verdict v = table1_predict(r.p, row.n);
      line.predicted = to_string(v);
      line.rule = "supersingular";
      if (v == Verdict::Yes) line.ok = row.has_primitive;
      if (v == Verdict::No) line.ok = !row.has_primitive;
    } else if (ordinary_const_j) {
      if (ordinary_coarse_predict(row.n)) {
        line.predicted = "yes";
        line.rule = "ordinary>4";
        line.ok = row.has_primitive;
      } else if (theorem_a_predict(row.n)) {
        line.predicted = "yes";
        line.rule = "ordinary>2";
        line.ok = row.has_primitive;
      } else {
        line.rule = "ordinary";
      }
    }
    if (!line.ok)
      fail("n=" + std::to_string(row.n) + " computed=" + (row.has_primitive ? "primitive" : "none") +
           " predicted=" + line.predicted);
    r.lines.push_back(line);
  }
  return r;
}

}  // namespace

SweepReport consistency_sweep(const std::vector<CatalogEntry>& entries, Schedule schedule, std::uint64_t seed) {
  std::vector<EntryResult> results(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  const int count = static_cast<int>(entries.size());
  if (schedule == Schedule::Serial) {
    for (int i = 0; i < count; ++i) results[i] = sweep_entry(entries[i], seed);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) {
      try {
        results[i] = sweep_entry(entries[i], seed);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }

  SweepReport report;
  std::map<std::pair<std::uint32_t, int>, StarCoverage> stars;
  std::map<std::uint32_t, int> max_n;
  for (int i = 0; i < count; ++i) {
    if (errors[i]) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (const std::exception& ex) {
        report.failures.push_back(entries[i].id + ": " + ex.what());
      }
      continue;
    }
    const EntryResult& r = results[i];
    for (const auto& f : r.failures) report.failures.push_back(f);
    for (const auto& l : r.lines) {
      report.lines.push_back(l);
      if (l.predicted != "*") continue;
      auto& cell = stars[{r.p, l.n}];
      cell.p = r.p;
      cell.n = l.n;
      (l.primitive ? cell.yes_side : cell.no_side).push_back(l.entry);
    }
    if (r.supersingular) max_n[r.p] = std::max(max_n[r.p], entries[i].N);
  }
  for (const auto& [p, bound] : max_n) {
    for (int n : table1_star_cells(p)) {
      if (n > bound) continue;
      auto it = stars.find({p, n});
      StarCoverage cell = it == stars.end() ? StarCoverage{p, n, {}, {}} : it->second;
      if (!cell.ok())
        report.failures.push_back("star cell p=" + std::to_string(p) + " n=" + std::to_string(n) + " lacks a " +
                                  (cell.yes_side.empty() ? "yes-side" : "no-side") + " witness");
      report.stars.push_back(std::move(cell));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

const FieldSpec& oracle_level_field(const FieldSpec& base, int k) {
  if (k < 1) throw DomainError("level must be >= 1");
  const int deg = base.degree() * k;
  if (deg > kMaxExtensionDegree) throw DomainError("level field degree " + std::to_string(deg) + " exceeds 12");
  return deg == 1 ? FieldSpec::prime(base.characteristic()) : FieldSpec::of_degree(base.characteristic(), deg);
}

FieldEmbedding::FieldEmbedding(const FieldSpec& from, const FieldSpec& to) : from_(&from), to_(&to) {
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0)
    throw FieldMismatch("no embedding " + from.name() + " -> " + to.name());
  if (!from.is_prime()) {
    std::vector<FieldElement> m;
    for (auto c : from.modulus()) m.push_back(to.from_int(c));
    auto rs = roots(Polynomial(to, m));
    if (rs.empty()) throw ConsistencyError("modulus has no root in the target field");
    root_ = rs.front();
  }
}

FieldElement FieldEmbedding::operator()(const FieldElement& c) const {
  if (&c.field() != from_) throw FieldMismatch();
  if (from_->is_prime()) return to_->from_int(c.value());
  FieldElement acc = to_->zero(), pw = to_->one();
  for (int i = 0; i < from_->degree(); ++i) {
    acc += to_->from_int(c.coord(i)) * pw;
    pw *= root_;
  }
  return acc;
}

namespace {

// z^(q^j) with q = p^e
FieldElement frob_power(FieldElement z, int e, int j) {
  for (int i = 0; i < e * j; ++i) z = z.frobenius();
  return z;
}

}  // namespace

OracleResult torsion_enum_oracle(const ConstCurve& E, int n, int k_max) {
  if (n < 1 || k_max < 1) throw DomainError("oracle needs n >= 1 and k_max >= 1");
  const FieldSpec& base = E.a1().field();
  const int e = base.degree();
  OracleResult out{{}, 1, 0};
  {
    const long long deg_i = inseparable_degree(E, n);
    out.expected = static_cast<long long>(n) * n / deg_i;
  }
  for (int k = 1; k <= k_max; ++k) {
    const FieldSpec& L = oracle_level_field(base, k);
    const std::uint64_t size = *L.order();
    if (size > 10'000'000ULL) throw DomainError("level field of size " + std::to_string(size) + " is too large to enumerate");
    FieldEmbedding emb(base, L);
    ConstCurve EL(emb(E.a1()), emb(E.a2()), emb(E.a3()), emb(E.a4()), emb(E.a6()));
    std::vector<int> proper;
    for (int j = 1; j < k; ++j)
      if (k % j == 0) proper.push_back(j);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      FieldElement x = L.from_index(idx);
      // y^2 + (a1 x + a3) y - (x^3 + a2 x^2 + a4 x + a6) = 0
      FieldElement B = EL.a1() * x + EL.a3();
      FieldElement C = x * x * x + EL.a2() * x * x + EL.a4() * x + EL.a6();
      auto ys = roots(Polynomial(L, {-C, B, L.one()}));
      bool recorded = false;
      for (const auto& y : ys) {
        bool lower = false;
        for (int j : proper)
          if (frob_power(x, e, j) == x && frob_power(y, e, j) == y) lower = true;
        if (lower) continue;
        ConstPoint P(x, y);
        ConstPoint R = P;
        int order = 0;
        for (int m = 1; m <= n; ++m) {
          if (R.is_infinity()) {
            order = m;
            break;
          }
          R = EL.add(R, P);
        }
        if (order == 0 || n % order != 0) continue;
        ++out.found;
        if (!recorded) out.points.push_back({x, order, k});
        recorded = true;
      }
    }
  }
  if (out.found != out.expected)
    throw DomainError("k_max = " + std::to_string(k_max) + " sees " + std::to_string(out.found) + " of " +
                      std::to_string(out.expected) + " points of E[" + std::to_string(n) + "]");
  return out;
}

RandomPair random_j0_pair(std::uint32_t p, std::uint64_t seed) {
  const FieldSpec& f = FieldSpec::prime(p);
  std::mt19937_64 rng(seed);
  RationalFunction t = RationalFunction::variable(f);
  RationalFunction zero(f);
  for (int attempt = 1; attempt <= 1000; ++attempt) {
    auto nonzero = [&] {
      FieldElement c = f.zero();
      while (c.is_zero()) c = f.random(rng);
      return c;
    };
    FieldElement c0 = nonzero(), c1 = f.random(rng), e0 = nonzero(), e1 = f.random(rng);
    RationalFunction x1 = t * RationalFunction(Polynomial(f, {c0, c1}));
    RationalFunction y1 = t * RationalFunction(Polynomial(f, {e0, e1}));
    RationalFunction A = y1 * y1 - x1 * x1 * x1;
    if (A.is_zero()) continue;
    Curve E(zero, zero, zero, zero, A);
    FfPoint P(x1, y1);
    if (torsion_check(E, P, 36).torsion) continue;
    if (is_constant_pair(E, P)) continue;
    return {E, P, attempt};
  }
  throw DomainError("no suitable random pair found");
}

}  // namespace eds
