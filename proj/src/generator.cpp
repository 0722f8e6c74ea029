#include "subnorm/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "subnorm/errors.hpp"

namespace subnorm {

namespace {

constexpr int kMaxBisections = 1100;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

Generator::Generator(std::string label, Rule rule, double boundary_at_one)
    : Generator(std::move(label), std::move(rule), boundary_at_one, Rule{}) {}

Generator::Generator(std::string label, Rule rule, double boundary_at_one,
                     Rule inverse) {
  if (!rule) throw ParameterError("generator '" + label + "': empty rule");
  if (!(boundary_at_one >= 0) || !std::isfinite(boundary_at_one))
    throw ParameterError("generator '" + label + "': s(1) must be finite and >= 0");
  impl_ = std::make_shared<const Impl>(
      Impl{std::move(label), std::move(rule), boundary_at_one, std::move(inverse)});
}

ExtendedValue Generator::eval(double x) const {
  if (!(x >= 0 && x <= 1))
    throw DomainError("generator '" + label() + "': x = " + fmt(x) + " outside [0,1]");
  if (x == 0) return kInf;
  if (x == 1) return impl_->boundary;
  double r = impl_->rule(x);
  if (std::isnan(r))
    throw DomainError("generator '" + label() + "': NaN at x = " + fmt(x));
  if (r < 0) {
    if (r > -ToleranceProfile{}.abs_eval_tol) return 0.0;
    throw DomainError("generator '" + label() + "': negative value at x = " + fmt(x));
  }
  return r;
}

double Generator::bisect(double u) const {
  double lo = 0, hi = 1;
  for (int i = 0; i < kMaxBisections; ++i) {
    double mid = lo + (hi - lo) / 2;
    if (!(mid > lo && mid < hi)) break;
    if (impl_->rule(mid) > u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

double Generator::invert(ExtendedValue u, const ToleranceProfile& tol) const {
  if (u.is_infinite()) return 0;
  double v = u.value();
  double b = impl_->boundary;
  if (v <= b) {
    if (v >= b - tol.abs_eval_tol * std::max(1.0, b)) return 1;
    throw DomainError("generator '" + label() + "': cannot invert " + fmt(v) +
                      " below s(1) = " + fmt(b));
  }
  if (!impl_->inverse) return bisect(v);
  double z = impl_->inverse(v);
  if (std::isnan(z))
    throw DomainError("generator '" + label() + "': inverse is NaN at " + fmt(v));
  return std::clamp(z, 0.0, 1.0);
}

double Generator::pseudo_invert(ExtendedValue u, const ToleranceProfile& tol) const {
  if (u.is_finite() && u.value() <= impl_->boundary) return 1;
  return invert(u, tol);
}

Generator Generator::relabeled(std::string label) const {
  Generator g = *this;
  g.impl_ = std::make_shared<const Impl>(
      Impl{std::move(label), impl_->rule, impl_->boundary, impl_->inverse});
  return g;
}

Generator normalize(const Generator& g) {
  double b = g.boundary_at_one();
  if (b == 0)
    throw NormalizationError("generator '" + g.label() +
                             "': s(1) = 0, cannot normalize a t-norm generator");
  Generator::Rule rule = [g, b](double x) { return g.eval(x).to_double() / b; };
  if (g.kind() == InverseKind::numeric) return Generator(g.label(), rule, 1.0);
  Generator::Rule inv = [g, b](double u) { return g.invert(u * b); };
  return Generator(g.label(), rule, 1.0, inv);
}

Generator affine_shift(const Generator& g, double c, double b) {
  if (!(c > 0)) throw ParameterError("affine shift: c must be positive");
  double boundary = c * g.boundary_at_one() + b;
  if (!(boundary >= 0))
    throw ParameterError("affine shift: c*s(1) + b must be non-negative");
  Generator::Rule rule = [g, c, b](double x) { return c * g.eval(x).to_double() + b; };
  std::string label = g.label() + "*" + fmt(c) + "+" + fmt(b);
  if (g.kind() == InverseKind::numeric) return Generator(label, rule, boundary);
  Generator::Rule inv = [g, c, b](double u) {
    return g.invert(std::max(g.boundary_at_one(), (u - b) / c));
  };
  return Generator(label, rule, boundary, inv);
}

double derivative(const Generator& g, double x, const ToleranceProfile& tol) {
  if (!(x > 0 && x < 1))
    throw DomainError("derivative: x = " + fmt(x) + " outside (0,1)");
  double h = tol.derivative_step * std::max(1.0, x);
  auto s = [&](double t) { return g.eval(t).to_double(); };
  if (x - h <= 0) return (s(x + h) - s(x)) / h;
  if (x + h > 1) return (s(x) - s(x - h)) / h;
  return (s(x + h) - s(x - h)) / (2 * h);
}

std::vector<std::string> check_generator(const Generator& g, const IntervalGrid& grid,
                                         const ToleranceProfile& tol) {
  std::vector<std::string> problems;
  if (!g.eval(0).is_infinite()) problems.push_back("s(0) is not INF");
  double prev = INFINITY;
  double prev_x = 0;
  for (double x : grid.points()) {
    double sx;
    try {
      sx = g.eval(x).to_double();
    } catch (const DomainError& e) {
      problems.push_back(e.what());
      continue;
    }
    if (!(sx < prev))
      problems.push_back("not strictly decreasing between x = " + fmt(prev_x) +
                         " and x = " + fmt(x));
    if (std::isfinite(sx)) {
      try {
        double back = g.eval(g.invert(sx, tol)).to_double();
        if (!(std::abs(back - sx) <= tol.abs_eval_tol * std::max(1.0, sx)))
          problems.push_back("inverse round trip off at x = " + fmt(x));
      } catch (const DomainError& e) {
        problems.push_back(e.what());
      }
    }
    prev = sx;
    prev_x = x;
  }
  return problems;
}

void validate_generator(const Generator& g, const IntervalGrid& grid,
                        const ToleranceProfile& tol) {
  auto problems = check_generator(g, grid, tol);
  if (problems.empty()) return;
  std::string msg = "generator '" + g.label() + "' invalid:";
  for (const auto& p : problems) msg += "\n  " + p;
  throw ValidationError(msg);
}

}  // namespace subnorm
