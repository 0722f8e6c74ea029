#include "subnorm/composed_map.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "subnorm/errors.hpp"

namespace subnorm {

ComposedMap::ComposedMap(Generator lhs, Generator rhs, ToleranceProfile tol)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)), tol_(tol) {}

double ComposedMap::operator()(double u) const {
  if (std::isnan(u)) throw DomainError("composed map: NaN argument");
  if (std::isinf(u) && u > 0) return u;
  double start = domain_start();
  if (u < start - tol_.abs_eval_tol * std::max(1.0, start)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "composed map: u = %g below domain start %g", u, start);
    throw DomainError(buf);
  }
  return lhs_.eval(rhs_.invert(std::max(u, start), tol_)).to_double();
}

ExtendedValue ComposedMap::eval(ExtendedValue u) const {
  if (u.is_infinite()) return kInf;
  return (*this)(u.value());
}

ComposedMap ComposedMap::normalized() const {
  return ComposedMap(lhs_.is_strict() ? lhs_ : normalize(lhs_),
                     rhs_.is_strict() ? rhs_ : normalize(rhs_), tol_);
}

std::vector<MapSample> ComposedMap::samples(const IntervalGrid& grid) const {
  auto xs = grid.with_tail();
  std::vector<MapSample> out;
  out.reserve(xs.size());
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    double x = *it;
    double u = rhs_.eval(x).to_double();
    double h = lhs_.eval(x).to_double();
    if (!std::isfinite(u) || !std::isfinite(h)) continue;
    if (!out.empty() && !(u > out.back().u)) continue;
    out.push_back({x, u, h});
  }
  return out;
}

}  // namespace subnorm
