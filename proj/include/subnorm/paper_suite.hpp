#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "subnorm/fixtures.hpp"
#include "subnorm/operators.hpp"
#include "subnorm/tolerance.hpp"

namespace subnorm {

// Accepts fixture names from `fixtures` and FamilySpec text.
BinaryOperator parse_operator(std::string_view text,
                              const FixtureSet& fixtures = FixtureSet::standard(),
                              const ToleranceProfile& tol = {});

struct SuiteOptions {
  ToleranceProfile tolerance;
  FixtureSet fixtures = FixtureSet::standard();
};

struct SuiteItem {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Replays the worked examples; one item per check group.
std::vector<SuiteItem> run_paper_suite(const SuiteOptions& options = {});

}  // namespace subnorm
