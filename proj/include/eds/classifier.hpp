#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eds/constant_mode.hpp"
#include "eds/eds.hpp"

namespace eds {

enum class Verdict { Yes, No, Star };

/// "yes", "no", "*"
std::string to_string(Verdict v);

/// Prediction for D_n of a supersingular non-constant pair in characteristic p.
Verdict table1_predict(std::uint32_t p, int n);
/// The finite set of n with a Star verdict for p.
std::vector<int> table1_star_cells(std::uint32_t p);

/// Ordinary, constant j, non-constant pair: D_n is guaranteed a primitive place iff n > 2.
bool theorem_a_predict(int n);
/// The coarser ordinary guarantee, n > 4.
bool ordinary_coarse_predict(int n);

struct StatedType {
  std::optional<std::string> place;  // rendered place; empty means every bad place
  std::string kodaira;
};

struct CatalogEntry {
  std::string id;
  std::string params;
  std::string note;
  Curve curve;
  FfPoint point;
  int N;
  std::vector<StatedType> stated_types;

  std::uint32_t characteristic() const { return curve.a1().field().characteristic(); }
};

/// y^2 = x^3 + r^2 a x + r^3 b with r = t^3 + a t + b, P = (r t, r^2). The pair
/// (a, b) is the first in lexicographic order with j(y^2 = x^3 + a x + b) = j;
/// p = 3 forces a = 1, b = 0 (and j = 0).
CatalogEntry gen_ordsharp1(std::uint32_t p, long long j);
/// y^2 = x^3 + j^2 d x^2 + 2 j^5 d^3 with d = t^3 + j^2 t^2 + 2 j^5, P = (t d, d^2), over F_3.
CatalogEntry gen_char3_ordinary_twist(long long j);
/// y^2 = x^3 + t^2 - t^3, P = (t, t); p > 3, p = 2 mod 3.
CatalogEntry gen_lemma65(std::uint32_t p);

CatalogEntry ex_3_4();
CatalogEntry ex_7_2();
CatalogEntry ex_7_3();
CatalogEntry ex_7_4();
CatalogEntry ex_7_5(int k);
CatalogEntry ex_7_6(long long j);
CatalogEntry ex_6_3();
/// The constant curve y^2 = x^3 + x over F_3.
ConstCurve ex_2_3();

/// Same curve, point m*P, id suffixed "_x<m>".
CatalogEntry multiple_of(const CatalogEntry& base, int m, int N);

/// Everything the sweep runs over.
std::vector<CatalogEntry> catalog_generators();

struct SweepLine {
  std::string entry;
  int n;
  bool primitive;
  std::string predicted;  // "yes", "no", "*", or "-" when nothing is claimed
  std::string rule;       // which prediction layer produced `predicted`
  bool ok;

  /// "ex_7_4 n=8 computed=primitive predicted=* witness=yes-side OK"
  std::string to_string() const;
};

struct StarCoverage {
  std::uint32_t p;
  int n;
  std::vector<std::string> yes_side;
  std::vector<std::string> no_side;

  bool ok() const { return !yes_side.empty() && !no_side.empty(); }
  std::string to_string() const;
};

struct SweepReport {
  std::vector<SweepLine> lines;
  std::vector<StarCoverage> stars;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::vector<std::string> render() const;
};

/// Validates each entry (torsion, constancy, stated types), computes its
/// sequence, and checks every n <= N against the predictions. Star cells of
/// every characteristic present must be witnessed both ways.
SweepReport consistency_sweep(const std::vector<CatalogEntry>& entries, Schedule schedule = Schedule::Parallel,
                              std::uint64_t seed = 0);

struct OraclePoint {
  FieldElement x;  // in the field of the level at which it was found
  int order;
  int level;       // k with x, y generating F_{q^k}
};

struct OracleResult {
  std::vector<OraclePoint> points;  // one per +-pair, O excluded
  long long found;                  // points of order dividing n, O and both signs included
  long long expected;               // #E[n] over the algebraic closure
};

/// Brute-force enumeration of E(F_{q^k}) for k <= k_max. Throws DomainError
/// when k_max is too small to see all of E[n].
OracleResult torsion_enum_oracle(const ConstCurve& E, int n, int k_max);

/// Field embedding F_q -> F_{q^k} used by the oracle.
class FieldEmbedding {
 public:
  FieldEmbedding(const FieldSpec& from, const FieldSpec& to);
  FieldElement operator()(const FieldElement& c) const;
  const FieldSpec& target() const { return *to_; }

 private:
  const FieldSpec* from_;
  const FieldSpec* to_;
  FieldElement root_;
};

/// The degree-(e*k) field containing F_q = F_{p^e} as used by the oracle.
const FieldSpec& oracle_level_field(const FieldSpec& base, int k);

struct RandomPair {
  Curve curve;
  FfPoint point;
  int attempts;
};
/// Seeded pairs y^2 = x^3 + A with P = (x1, y1), x1 = t(c0 + c1 t), y1 = t(e0 + e1 t),
/// A = y1^2 - x1^3, over F_p(t); skips constant pairs and torsion points.
RandomPair random_j0_pair(std::uint32_t p, std::uint64_t seed);

}  // namespace eds
