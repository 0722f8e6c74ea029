#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subnorm/composed_map.hpp"
#include "subnorm/families.hpp"
#include "subnorm/interval_grid.hpp"
#include "subnorm/operators.hpp"
#include "subnorm/reports.hpp"
#include "subnorm/tolerance.hpp"

namespace subnorm {

// Brute-force ground truth: both operators on grid x grid, classified by the
// sign pattern of lhs - rhs against verdict_margin.
ComparisonVerdict direct_compare(const BinaryOperator& lhs,
                                 const BinaryOperator& rhs,
                                 const IntervalGrid& grid,
                                 const ToleranceProfile& tol = {});

// h(u+v) <= h(u) + h(v) on all sample pairs. Holds iff lhs <= rhs.
CriterionReport subadditivity_test(const ComposedMap& map,
                                   const IntervalGrid& grid);

// h(u) = c*u with c fitted at the median sample. Holds iff lhs = rhs.
CriterionReport equality_test(const ComposedMap& map, const IntervalGrid& grid);

CriterionReport midpoint_concavity(const ComposedMap& map,
                                   const IntervalGrid& grid);
CriterionReport midpoint_convexity(const ComposedMap& map,
                                   const IntervalGrid& grid);

// Concave h, plus h(u) <= u when both generators are proper (checked on the
// normalized pair). Sufficient for lhs <= rhs.
CriterionReport concavity_criterion(const ComposedMap& map,
                                    const IntervalGrid& grid);

inline constexpr double kDefaultHomogeneitySamples[] = {1, 1.5, 2, 3, 5, 10};

// Requires a midpoint-convex h (else not_applicable); then
// h(tu) <= t h(u) for t >= 1 is equivalent to lhs <= rhs.
CriterionReport quasi_homogeneity_criterion(
    const ComposedMap& map, const IntervalGrid& grid,
    std::span<const double> t_samples = kDefaultHomogeneitySamples);

// s1/s2 non-decreasing on (0,1). Sufficient for lhs <= rhs.
CriterionReport ratio_criterion(const Generator& s1, const Generator& s2,
                                const IntervalGrid& grid,
                                const ToleranceProfile& tol = {});

// h(u)/u non-increasing. Sufficient for lhs <= rhs.
CriterionReport ratio_profile_criterion(const ComposedMap& map,
                                        const IntervalGrid& grid);

// s1'/s2' non-decreasing, plus s1 <= s2 for normalized proper pairs.
// Sufficient for lhs <= rhs.
CriterionReport derivative_ratio_criterion(const Generator& s1,
                                           const Generator& s2,
                                           const IntervalGrid& grid,
                                           const ToleranceProfile& tol = {});

// phi(x) = exp(-t(x)) carries the strict t-norm T onto the product.
std::function<double(double)> product_isomorphism(const TSubnorm& t);
// g(u) = s(phi^-1(u)) = s(t^-1(-ln u)), s normalized when S is proper.
std::function<double(double)> submultiplicative_map(const TSubnorm& s,
                                                    const TSubnorm& t);

// g(uv) <= g(u) + g(v). Holds iff S <= T. not_applicable unless T strict.
CriterionReport strict_dominance_test(const TSubnorm& s, const TSubnorm& t,
                                      const IntervalGrid& grid);

// g(u) = -c ln u. Holds iff S = T. not_applicable unless T strict.
CriterionReport logarithmic_equality_test(const TSubnorm& s, const TSubnorm& t,
                                          const IntervalGrid& grid);

struct PowerWitness {
  double x;
  int n;
  double t_power;  // exactly 0
  double s_power;  // > 0
};

// Smallest n <= n_max with x_T^(n) = 0 < x_S^(n), where x^(1) = x.
std::optional<PowerWitness> power_witness(const BinaryOperator& s,
                                          const BinaryOperator& t, double x,
                                          int n_max = 10000);

// Tests S <= T_nil; always fails with a power witness for generated S.
CriterionReport nilpotent_guard(const TSubnorm& s, const BinaryOperator& t_nil,
                                const IntervalGrid& grid);

// Tests T <= S for proper S and strict T; always fails, witnessed by
// S(x,1) < x = T(x,1).
CriterionReport proper_never_dominates_tnorm_check(const TSubnorm& s,
                                                   const TSubnorm& t,
                                                   const IntervalGrid& grid);

enum class Criterion {
  subadditivity,
  equality,
  concavity,
  quasi_homogeneity,
  ratio,
  ratio_profile,
  derivative_ratio,
  strict_dominance,
  logarithmic_equality,
};

const char* to_string(Criterion c);
Criterion criterion_from_string(std::string_view s);  // throws ParseError

// Runs `c` on the ordered pair (lhs, rhs).
CriterionReport run_criterion(Criterion c, const TSubnorm& lhs,
                              const TSubnorm& rhs, const IntervalGrid& grid);

enum class Direction { up, down, flat, none };
const char* to_string(Direction d);

struct ScanStep {
  double lambda_from = 0, lambda_to = 0;
  CriterionReport forward;   // criterion(S_from, S_to)
  CriterionReport backward;  // criterion(S_to, S_from)
  Direction criterion_direction = Direction::none;
  ComparisonVerdict oracle;
  Direction oracle_direction = Direction::none;
  bool agrees = false;
};

struct FamilyScanReport {
  FamilySpec family;
  Criterion criterion = Criterion::subadditivity;
  std::vector<ScanStep> steps;
  // "increasing", "decreasing", "constant" or "mixed", from the oracle.
  std::string chain;
  bool all_agree = false;
};

FamilyScanReport family_monotonicity_scan(const FamilySpec& family,
                                          std::span<const double> lambdas,
                                          Criterion criterion,
                                          const IntervalGrid& grid,
                                          const ToleranceProfile& tol = {});

// Cheap certificates first, oracle last. `criterion` names what decided;
// certificates never override a contradicting oracle.
ComparisonVerdict compare(const BinaryOperator& lhs, const BinaryOperator& rhs,
                          const IntervalGrid& grid,
                          const ToleranceProfile& tol = {});

}  // namespace subnorm
