#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eds/local.hpp"

namespace eds {

/// nP = O for some n: the divisor D_nP is undefined.
struct TorsionHit {
  int order;
};

class TorsionHitError : public DomainError {
 public:
  explicit TorsionHitError(int order)
      : DomainError("point is torsion of order " + std::to_string(order)), order_(order) {}
  int order() const { return order_; }

 private:
  int order_;
};

enum class Schedule { Serial, Parallel };

/// Shared per-(E, P) state: the special places and their local data.
class EdsContext {
 public:
  EdsContext(const Curve& E, const FfPoint& P, std::uint64_t seed = 0);

  const Curve& curve() const { return E_; }
  const FfPoint& point() const { return P_; }
  std::uint64_t seed() const { return seed_; }
  const std::map<Place, LocalData>& local_data() const { return local_; }

  /// D for a point Q = nP given by its x-coordinate in the input model; n only labels errors.
  Divisor term_from_x(const RationalFunction& x, int n) const;

 private:
  Curve E_;
  FfPoint P_;
  std::uint64_t seed_;
  std::map<Place, LocalData> local_;
};

class EdsSequence {
 public:
  EdsSequence(EdsContext context, std::vector<Divisor> terms)
      : ctx_(std::move(context)), terms_(std::move(terms)) {}

  const Curve& curve() const { return ctx_.curve(); }
  const FfPoint& point() const { return ctx_.point(); }
  const EdsContext& context() const { return ctx_; }
  int bound() const { return static_cast<int>(terms_.size()); }
  /// D_n for 1 <= n <= bound().
  const Divisor& term(int n) const;
  const std::vector<Divisor>& terms() const { return terms_; }

 private:
  EdsContext ctx_;
  std::vector<Divisor> terms_;
};

Divisor eds_term(const Curve& E, const FfPoint& P, int n, std::uint64_t seed = 0);

using SequenceOutcome = std::variant<EdsSequence, TorsionHit>;

/// x(nP) for n = 1..N via nP = (n-1)P + P; stops at the first nP = O.
std::variant<std::vector<RationalFunction>, TorsionHit> point_chain_x(const Curve& E, const FfPoint& P, int N);

SequenceOutcome eds_sequence(const Curve& E, const FfPoint& P, int N, Schedule schedule = Schedule::Parallel,
                             std::uint64_t seed = 0);
/// As eds_sequence, throwing TorsionHitError instead of returning the hit.
EdsSequence eds_sequence_or_throw(const Curve& E, const FfPoint& P, int N, Schedule schedule = Schedule::Parallel,
                                  std::uint64_t seed = 0);

struct ApparitionRecord {
  Place place;
  std::optional<int> m;  // empty: not found within `bound`
  int bound;
};
ApparitionRecord rank_of_apparition(const EdsSequence& seq, const Place& v);

std::vector<Place> primitive_places(const EdsSequence& seq, int n);

struct ZsigmondyRow {
  int n;
  bool has_primitive;
  std::vector<Place> witnesses;
};
struct ZsigmondyReport {
  std::vector<ZsigmondyRow> rows;
  std::optional<int> largest_lacking;
};
ZsigmondyReport zsigmondy_report(const EdsSequence& seq);

bool strong_divisibility_check(const EdsSequence& seq, int m, int n);

/// "D_3 = t^2  [new: (t)]" lines.
std::vector<std::string> render_table(const EdsSequence& seq);

struct TorsionCheck {
  bool torsion;
  int value;  // the order when torsion, else the bound
};
/// Scans n <= bound for nP = O. Reductions at a few good places rule out
/// most n cheaply; surviving candidates are confirmed exactly.
TorsionCheck torsion_check(const Curve& E, const FfPoint& P, int bound = 36);

}  // namespace eds
