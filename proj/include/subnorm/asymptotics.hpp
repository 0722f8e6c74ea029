#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subnorm/composed_map.hpp"
#include "subnorm/extended_value.hpp"
#include "subnorm/interval_grid.hpp"
#include "subnorm/reports.hpp"

namespace subnorm {

struct SlopeEstimate {
  ExtendedValue value;
  bool converged = false;
  bool applicable = true;
  std::vector<std::pair<double, double>> sequence;  // (probe, ratio)
  // order_lower / same_order (A), monotone_bounded, divergent, ...
  std::string note;
  // inf (for A) or sup (for B) of h(u)/u over the samples, when computed.
  std::optional<double> sample_extremum;
  std::optional<bool> extremum_agrees;
};

std::string to_record(const SlopeEstimate& e);

// A = lim h(u)/u at infinity, via s1(t)/s2(t) at t = 10^-k, k = 1..12.
SlopeEstimate asymptotic_slope_A(const ComposedMap& map,
                                 const IntervalGrid& grid = IntervalGrid::uniform(101));

// B: lim h(u)/u at 0+ for strict pairs (u = 10^-k), sup over samples for
// normalized proper pairs; not applicable otherwise.
SlopeEstimate small_slope_B(const ComposedMap& map,
                            const IntervalGrid& grid = IntervalGrid::uniform(101));

// A u <= h(u) <= B u on the samples.
CriterionReport linear_envelope_check(const ComposedMap& map, double a,
                                      double b, const IntervalGrid& grid);

struct Section4Branch {
  CriterionReport report;  // holds: predicts lhs <= rhs; fails: predicts not
  bool oracle_dominated_or_equal = false;
  bool agrees = true;  // trivially true when not applicable
};

struct Section4Report {
  Section4Branch convex_profile;   // phi = h/u convex: A finite and = inf phi
  Section4Branch bounded_profile;  // phi non-increasing, bounded, rhs strict
  Section4Branch concave_map;      // h concave, sup phi <= 1
  bool consistent() const {
    return convex_profile.agrees && bounded_profile.agrees && concave_map.agrees;
  }
};

Section4Report section4_equivalences(const ComposedMap& map,
                                     const IntervalGrid& grid);

}  // namespace subnorm
