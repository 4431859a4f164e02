#include "eds/eds.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <set>

namespace eds {

EdsContext::EdsContext(const Curve& E, const FfPoint& P, std::uint64_t seed) : E_(E), P_(P), seed_(seed) {
  if (!E.contains(P)) throw DomainError("point " + P.to_string() + " is not on the curve");
  for (const auto& v : candidate_bad_places(E)) local_.emplace(v, tate_algorithm(E, v));
}

namespace {

int half_pole(int val, const Place& v, int n) {
  if (val >= 0) return 0;
  if (val % 2 != 0)
    throw ConsistencyError("odd valuation " + std::to_string(val) + " of x(" + std::to_string(n) + "P) at " + v.to_string() +
                           " on a minimal model");
  return -val / 2;
}

}  // namespace

Divisor EdsContext::term_from_x(const RationalFunction& x, int n) const {
  Divisor D;
  const Polynomial& den = x.den();
  if (den.degree() >= 1) {
    for (const auto& [pi, e] : poly_factor(den, seed_).factors) {
      Place v = Place::from_factor(pi);
      if (local_.count(v)) continue;
      D.set(v, half_pole(-e, v, n));
    }
  }
  for (const auto& [v, ld] : local_) {
    const FfTransform& tau = ld.transform;
    RationalFunction xv = (x - tau.r) / (tau.u * tau.u);
    int val = valuation_or_inf(xv, v);
    if (val == kInfiniteValuation) continue;
    int m = half_pole(val, v, n);
    if (m) D.set(v, m);
  }
  return D;
}

const Divisor& EdsSequence::term(int n) const {
  if (n < 1 || n > bound()) throw DomainError("term index " + std::to_string(n) + " outside 1.." + std::to_string(bound()));
  return terms_[n - 1];
}

std::variant<std::vector<RationalFunction>, TorsionHit> point_chain_x(const Curve& E, const FfPoint& P, int N) {
  if (N < 1) throw DomainError("sequence bound must be >= 1");
  std::vector<RationalFunction> xs;
  xs.reserve(N);
  FfPoint Q = P;
  for (int n = 1; n <= N; ++n) {
    if (Q.is_infinity()) return TorsionHit{n};
    xs.push_back(Q.x());
    if (n < N) Q = E.add(Q, P);
  }
  return xs;
}

Divisor eds_term(const Curve& E, const FfPoint& P, int n, std::uint64_t seed) {
  if (n < 1) throw DomainError("term index must be >= 1");
  EdsContext ctx(E, P, seed);
  FfPoint Q = E.scalar_mul(P, n);
  if (Q.is_infinity()) {
    for (int k = 1; k <= n; ++k)
      if (E.scalar_mul(P, k).is_infinity()) throw TorsionHitError(k);
  }
  return ctx.term_from_x(Q.x(), n);
}

SequenceOutcome eds_sequence(const Curve& E, const FfPoint& P, int N, Schedule schedule, std::uint64_t seed) {
  EdsContext ctx(E, P, seed);
  auto chain = point_chain_x(E, P, N);
  if (auto* hit = std::get_if<TorsionHit>(&chain)) return *hit;
  const auto& xs = std::get<std::vector<RationalFunction>>(chain);

  std::vector<Divisor> terms(N);
  if (schedule == Schedule::Serial) {
    for (int n = 1; n <= N; ++n) terms[n - 1] = ctx.term_from_x(xs[n - 1], n);
  } else {
    std::vector<std::exception_ptr> errors(N);
    // Large n dominate; dynamic scheduling from the top keeps threads busy.
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < N; ++i) {
      int n = N - i;
      try {
        terms[n - 1] = ctx.term_from_x(xs[n - 1], n);
      } catch (...) {
        errors[n - 1] = std::current_exception();
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return EdsSequence(std::move(ctx), std::move(terms));
}

EdsSequence eds_sequence_or_throw(const Curve& E, const FfPoint& P, int N, Schedule schedule, std::uint64_t seed) {
  auto out = eds_sequence(E, P, N, schedule, seed);
  if (auto* hit = std::get_if<TorsionHit>(&out)) throw TorsionHitError(hit->order);
  return std::get<EdsSequence>(std::move(out));
}

ApparitionRecord rank_of_apparition(const EdsSequence& seq, const Place& v) {
  for (int n = 1; n <= seq.bound(); ++n)
    if (seq.term(n)[v] > 0) return {v, n, seq.bound()};
  return {v, std::nullopt, seq.bound()};
}

std::vector<Place> primitive_places(const EdsSequence& seq, int n) {
  std::vector<Place> out;
  for (const auto& v : seq.term(n).support()) {
    bool seen = false;
    for (int m = 1; m < n && !seen; ++m) seen = seq.term(m)[v] > 0;
    if (!seen) out.push_back(v);
  }
  return out;
}

ZsigmondyReport zsigmondy_report(const EdsSequence& seq) {
  ZsigmondyReport rep;
  std::set<Place> seen;
  for (int n = 1; n <= seq.bound(); ++n) {
    ZsigmondyRow row{n, false, {}};
    for (const auto& v : seq.term(n).support())
      if (!seen.count(v)) row.witnesses.push_back(v);
    for (const auto& v : row.witnesses) seen.insert(v);
    row.has_primitive = !row.witnesses.empty();
    if (!row.has_primitive) rep.largest_lacking = n;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

bool strong_divisibility_check(const EdsSequence& seq, int m, int n) {
  return divisor_combine(seq.term(m), seq.term(n), DivisorOp::Min) == seq.term(std::gcd(m, n));
}

std::vector<std::string> render_table(const EdsSequence& seq) {
  std::vector<std::string> lines;
  for (const auto& row : zsigmondy_report(seq).rows) {
    std::string line = "D_" + std::to_string(row.n) + " = " + seq.term(row.n).to_string();
    if (row.has_primitive) {
      line += "  [new: ";
      for (std::size_t i = 0; i < row.witnesses.size(); ++i) {
        if (i) line += ", ";
        line += row.witnesses[i].to_string();
      }
      line += "]";
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

namespace {

// Monic polynomials of degree k in index order.
Polynomial monic_from_index(const FieldSpec& f, int k, std::uint64_t idx) {
  std::vector<FieldElement> c(k + 1, f.zero());
  std::uint64_t q = *f.order();
  for (int i = 0; i < k; ++i) {
    c[i] = f.from_index(idx % q);
    idx /= q;
  }
  c[k] = f.one();
  return Polynomial(f, std::move(c));
}

bool integral_and_good(const Curve& E, const FfPoint& P, const Place& v) {
  for (const auto& a : E.coefficients())
    if (valuation_or_inf(a, v) < 0) return false;
  if (valuation(E.discriminant(), v) != 0) return false;
  return valuation_or_inf(P.x(), v) >= 0 && valuation_or_inf(P.y(), v) >= 0;
}

}  // namespace

TorsionCheck torsion_check(const Curve& E, const FfPoint& P, int bound) {
  if (bound < 1) throw DomainError("torsion bound must be >= 1");
  if (!E.contains(P)) throw DomainError("point is not on the curve");
  if (P.is_infinity()) return {true, 1};

  const FieldSpec& f = E.a1().field();
  // candidates[n]: n may still be the exact order
  std::vector<bool> candidate(bound + 1, true);
  candidate[0] = false;
  int used = 0;
  const std::uint64_t q = *f.order();
  for (int k = 1; k <= 6 && used < 4; ++k) {
    double count = std::pow(static_cast<double>(q), k);
    if (count > 4096) break;
    for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(count) && used < 4; ++idx) {
      Polynomial pi = monic_from_index(f, k, idx);
      if (!is_irreducible(pi)) continue;
      Place v = Place::from_factor(pi);
      if (!integral_and_good(E, P, v)) continue;
      ConstCurve Ev = reduce_curve(E, v);
      ConstPoint Pv(residue_reduce(P.x(), v), residue_reduce(P.y(), v));
      // order of the reduction, if it is at most bound
      int m = 0;
      ConstPoint R = Pv;
      for (int j = 1; j <= bound; ++j) {
        if (R.is_infinity()) {
          m = j;
          break;
        }
        R = Ev.add(R, Pv);
      }
      if (m == 0) return {false, bound};
      for (int n = 1; n <= bound; ++n)
        if (n % m) candidate[n] = false;
      ++used;
    }
  }
  // The reduction of a torsion point has order dividing the true order, so the
  // smallest surviving n with nP = O is the order.
  for (int n = 1; n <= bound; ++n)
    if (candidate[n] && E.scalar_mul(P, n).is_infinity()) return {true, n};
  return {false, bound};
}

}  // namespace eds
