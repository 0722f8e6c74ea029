#pragma once

#include <vector>

#include "subnorm/extended_value.hpp"
#include "subnorm/generator.hpp"
#include "subnorm/interval_grid.hpp"
#include "subnorm/tolerance.hpp"

namespace subnorm {

struct MapSample {
  double x;  // abscissa in (0,1]
  double u;  // s2(x)
  double h;  // s1(x) = h(u)
};

// h = s1 o s2^-1 on [s2(1), inf]. Strictly increasing, h(s2(1)) = s1(1).
class ComposedMap {
 public:
  ComposedMap(Generator lhs, Generator rhs, ToleranceProfile tol = {});

  const Generator& lhs() const { return lhs_; }
  const Generator& rhs() const { return rhs_; }
  const ToleranceProfile& tolerance() const { return tol_; }
  double domain_start() const { return rhs_.boundary_at_one(); }

  // +inf for u = +inf. Throws DomainError below domain_start.
  double operator()(double u) const;
  ExtendedValue eval(ExtendedValue u) const;

  // Both proper generators replaced by their normalized versions.
  ComposedMap normalized() const;
  bool both_proper() const { return !lhs_.is_strict() && !rhs_.is_strict(); }
  bool both_strict() const { return lhs_.is_strict() && rhs_.is_strict(); }

  // One sample per x in grid.with_tail(), ascending in u, duplicates in u
  // dropped. Uses h(s2(x)) = s1(x) directly.
  std::vector<MapSample> samples(const IntervalGrid& grid) const;

 private:
  Generator lhs_;
  Generator rhs_;
  ToleranceProfile tol_;
};

}  // namespace subnorm
