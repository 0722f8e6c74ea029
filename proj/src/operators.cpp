#include "subnorm/operators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "subnorm/errors.hpp"

namespace subnorm {

namespace {

void check_unit_square(const std::string& label, double x, double y) {
  if (!(x >= 0 && x <= 1 && y >= 0 && y <= 1)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%g, %g) outside [0,1]^2", x, y);
    throw DomainError("operator '" + label + "': " + buf);
  }
}

void record(AxiomCheck& check, double residual, std::vector<double> where,
            bool violated) {
  if (residual > check.residual) {
    check.residual = residual;
    check.witness = std::move(where);
  }
  if (violated) check.passed = false;
}

// Rows below sqrt(epsilon floor) are skipped: there S(x,.) is smaller than
// the double resolution for steep generators and differences vanish.
AxiomCheck cancellative_rows(const BinaryOperator& op, std::span<const double> pts,
                             double floor) {
  AxiomCheck check;
  double start = std::sqrt(floor);
  for (double x : pts) {
    if (x < start) continue;
    double prev = -1;
    double prev_y = 0;
    for (double y : pts) {
      if (y < start) continue;
      double v = op(x, y);
      if (prev >= 0 && !(v > prev)) {
        check.passed = false;
        double gap = prev - v;
        if (check.witness.empty() || gap >= check.residual) {
          check.residual = gap;
          check.witness = {x, prev_y, y};
        }
      }
      prev = v;
      prev_y = y;
    }
  }
  return check;
}

}  // namespace

BinaryOperator::BinaryOperator(std::string label, Rule rule, bool nilpotent)
    : label_(std::move(label)), rule_(std::move(rule)), nilpotent_(nilpotent) {
  if (!rule_) throw ParameterError("operator '" + label_ + "': empty rule");
}

double BinaryOperator::operator()(double x, double y) const {
  check_unit_square(label_, x, y);
  return rule_(x, y);
}

const char* to_string(Classification c) {
  return c == Classification::strict_tnorm ? "strict_tnorm" : "proper_subnorm";
}

TSubnorm TSubnorm::from_generator(Generator g, const ToleranceProfile& tol) {
  tol.validate();
  validate_generator(g, IntervalGrid::uniform(201), tol);
  return TSubnorm(std::move(g), tol);
}

double TSubnorm::operator()(double x, double y) const {
  check_unit_square(label(), x, y);
  if (x == 0 || y == 0) return 0;
  return generator_.pseudo_invert(generator_.eval(x) + generator_.eval(y), tol_);
}

BinaryOperator TSubnorm::as_operator() const {
  auto self = std::make_shared<const TSubnorm>(*this);
  BinaryOperator op(label(), [self](double x, double y) { return (*self)(x, y); });
  op.generated_ = self;
  return op;
}

TSubnorm from_generator(Generator g, const ToleranceProfile& tol) {
  return TSubnorm::from_generator(std::move(g), tol);
}

double evaluate(const TSubnorm& s, double x, double y) { return s(x, y); }

AxiomReport check_axioms(const BinaryOperator& op, const IntervalGrid& grid,
                         const ToleranceProfile& tol) {
  AxiomReport report;
  auto pts = grid.points();
  const double eps = tol.abs_eval_tol;

  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      double x = pts[i], y = pts[j];
      double v = op(x, y);
      double sym = std::abs(v - op(y, x));
      record(report.commutative, sym, {x, y}, sym > eps);

      double over = std::max(v - std::min(x, y), -v);
      record(report.bounded_by_min, std::max(over, 0.0), {x, y}, over > eps);

      if (i + 1 < pts.size()) {
        double drop = v - op(pts[i + 1], y);
        record(report.monotone, std::max(drop, 0.0), {x, y}, drop > eps);
      }
      if (j + 1 < pts.size()) {
        double drop = v - op(x, pts[j + 1]);
        record(report.monotone, std::max(drop, 0.0), {x, y}, drop > eps);
      }
    }
  }

  const IntervalGrid coarse_grid = grid.coarsened(11);
  auto coarse = coarse_grid.points();
  for (double x : coarse) {
    for (double y : coarse) {
      double xy = op(x, y);
      for (double z : coarse) {
        double r = std::abs(op(xy, z) - op(x, op(y, z)));
        record(report.associative, r, {x, y, z}, r > tol.verdict_margin);
      }
    }
  }

  report.cancellative = cancellative_rows(op, pts, grid.epsilon_floor());
  return report;
}

AxiomReport check_axioms(const TSubnorm& s, const IntervalGrid& grid,
                         const ToleranceProfile& tol) {
  return check_axioms(s.as_operator(), grid, tol);
}

BinaryOperator complete_to_tnorm(const TSubnorm& s) {
  return BinaryOperator(s.label() + "+completion", [s](double x, double y) {
    if (x == 1) return y;
    if (y == 1) return x;
    return s(x, y);
  });
}

BinaryOperator dual_superconorm(const TSubnorm& s) {
  return BinaryOperator(s.label() + "+dual", [s](double x, double y) {
    return 1 - s(1 - x, 1 - y);
  });
}

}  // namespace subnorm
