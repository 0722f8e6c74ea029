#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subnorm {

enum class Relation { dominates, dominated, equal, incomparable, unknown };
enum class CriterionVerdict { holds, fails, not_applicable };

const char* to_string(Relation r);
const char* to_string(CriterionVerdict v);
Relation relation_from_string(std::string_view s);
CriterionVerdict verdict_from_string(std::string_view s);

// "dominated" reads lhs <= rhs with strict inequality somewhere.
inline bool dominated_or_equal(Relation r) {
  return r == Relation::dominated || r == Relation::equal;
}

struct Witness {
  double x = 0, y = 0;
  double lhs = 0, rhs = 0;
};

struct ComparisonVerdict {
  Relation relation = Relation::unknown;
  std::vector<Witness> witnesses;
  std::string criterion;
  double margin = 0.0;
  double sup_difference = 0.0;  // max |lhs - rhs| over the grid
  std::string notes;
};

struct SamplePoint {
  std::vector<std::pair<std::string, double>> coords;
  double residual = 0.0;

  double at(std::string_view name) const;  // throws std::out_of_range
};

struct CriterionReport {
  std::string criterion;
  CriterionVerdict verdict = CriterionVerdict::not_applicable;
  std::optional<SamplePoint> worst_case;
  std::optional<double> estimate;  // fitted constant where the test fits one
  double margin = 0.0;
  std::string notes;

  bool holds() const { return verdict == CriterionVerdict::holds; }
  bool fails() const { return verdict == CriterionVerdict::fails; }
};

// JSON object, keys in the order criterion, verdict, witnesses, margin,
// then extras. Stable across releases.
std::string to_record(const ComparisonVerdict& v);
std::string to_record(const CriterionReport& r);
ComparisonVerdict verdict_from_record(std::string_view record);
CriterionReport report_from_record(std::string_view record);

}  // namespace subnorm
