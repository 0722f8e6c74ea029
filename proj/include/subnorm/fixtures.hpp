#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "subnorm/generator.hpp"
#include "subnorm/operators.hpp"

namespace subnorm {

// s1 = outer o base. With outer strictly increasing, the composed map
// s1 o base^-1 is exactly `outer`, so any function on [base(1), inf) can be
// realised as a generator pair. The inverse is numeric.
Generator outer_composition(std::string label,
                            std::function<double(double)> outer,
                            const Generator& base);

// 2/x - 1, the normalized generator of xy/(x+y-0.5xy).
Generator fixture_base();

// psi(u) = -u^2+4u-2 on [1,2], u beyond: subadditive but neither concave
// nor with a monotone generator ratio.
Generator psi_construction(const Generator& base);
// k(u-1)+1, k > 1.
Generator steep_affine_fixture(double k, const Generator& base);
// 2u-1 on [1,2], u/2+2 beyond.
Generator broken_line_fixture(const Generator& base);
// ln(2e^u - e).
Generator log_exp_fixture(const Generator& base);
// u^2.
Generator square_fixture(const Generator& base);

// Named generator fixtures, removable to exercise the regression harness.
class FixtureSet {
 public:
  using Factory = std::function<Generator()>;

  static FixtureSet standard();

  bool contains(const std::string& name) const;
  Generator get(const std::string& name) const;  // throws MissingFixtureError
  void remove(const std::string& name);
  void add(std::string name, Factory factory);
  std::vector<std::string> names() const;

 private:
  std::map<std::string, Factory> entries_;
};

}  // namespace subnorm
