#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eds/weierstrass.hpp"

namespace eds {

struct KodairaType {
  enum class Kind { I0, In, II, III, IV, I0Star, InStar, IVStar, IIIStar, IIStar };
  Kind kind = Kind::I0;
  int n = 0;  // for In and InStar

  static KodairaType parse(const std::string& symbol);
  std::string to_string() const;
  bool operator==(const KodairaType&) const = default;
};

struct ComponentGroup {
  enum class Shape { Cyclic, Klein };
  Shape shape = Shape::Cyclic;
  int order = 1;

  std::string to_string() const;
  bool operator==(const ComponentGroup&) const = default;
};

enum class ReductionClass { Good, Multiplicative, Additive };

struct LocalData {
  Place place;
  Curve minimal_model;
  FfTransform transform;  // input model -> minimal model
  KodairaType kodaira;
  int disc_valuation;
  int tamagawa;
  ComponentGroup group;
  ReductionClass reduction;

  /// "v=(t): type II, c=1, vΔ=3"
  std::string to_string() const;
};

LocalData tate_algorithm(const Curve& E, const Place& v);

struct MinimalModel {
  Curve model;
  FfTransform map;
};
MinimalModel minimal_model_at(const Curve& E, const Place& v);

/// Finite places dividing Δ or a denominator of some a_i, in canonical order, then infinity.
std::vector<Place> candidate_bad_places(const Curve& E);

/// Local data at every place of bad reduction, plus infinity (always reported).
std::vector<LocalData> local_data_report(const Curve& E);

struct ComponentOrderRecord {
  Place place;
  int d;
  int tamagawa;
  /// (k, kind of reduction of kP on the minimal model) for k = 1..d
  std::vector<std::pair<int, ReducedPoint::Kind>> chain;
};

/// Order of P in E(F_v)/E_0(F_v), searched up to c_v.
ComponentOrderRecord component_order(const Curve& E, const FfPoint& P, const Place& v);
ComponentOrderRecord component_order(const LocalData& local, const FfPoint& P);

struct ExclusionEvidence {
  Place place;
  KodairaType kodaira;
  int tamagawa;
  std::optional<int> d;  // filled when a point is supplied
};

/// Checks that rational component groups avoid order-4 elements (char 2) and
/// order-3 elements (char 3); with a point in char >= 5, also d_v <= 2.
/// Throws ConsistencyError on a violation.
std::vector<ExclusionEvidence> component_group_exclusions(const Curve& E, const std::optional<FfPoint>& P = std::nullopt);

}  // namespace eds
