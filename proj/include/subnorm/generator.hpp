#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "subnorm/extended_value.hpp"
#include "subnorm/interval_grid.hpp"
#include "subnorm/tolerance.hpp"

namespace subnorm {

enum class InverseKind { closed_form, numeric };

// Continuous strictly decreasing additive generator s: [0,1] -> [s(1), inf]
// with s(0) = inf. The rule is only consulted on (0,1]; x = 0 maps to INF
// without calling it, and x = 1 maps to boundary_at_one exactly.
class Generator {
 public:
  using Rule = std::function<double(double)>;

  // Numeric inverse (bisection).
  Generator(std::string label, Rule rule, double boundary_at_one);
  // Closed-form inverse, defined for finite u >= boundary_at_one.
  Generator(std::string label, Rule rule, double boundary_at_one,
            Rule inverse);

  const std::string& label() const { return impl_->label; }
  double boundary_at_one() const { return impl_->boundary; }
  InverseKind kind() const {
    return impl_->inverse ? InverseKind::closed_form : InverseKind::numeric;
  }
  bool is_strict() const { return impl_->boundary == 0.0; }
  bool is_normalized() const { return impl_->boundary == 1.0; }

  ExtendedValue eval(double x) const;

  // The unique z in [0,1] with s(z) = u. Throws DomainError for u < s(1).
  double invert(ExtendedValue u, const ToleranceProfile& tol = {}) const;

  // sup{x | s(x) > u}: 1 on [0, s(1)], the inverse above.
  double pseudo_invert(ExtendedValue u, const ToleranceProfile& tol = {}) const;

  Generator relabeled(std::string label) const;

 private:
  struct Impl {
    std::string label;
    Rule rule;
    double boundary;
    Rule inverse;
  };
  std::shared_ptr<const Impl> impl_;

  double bisect(double u) const;
};

// s / s(1). Throws NormalizationError when s(1) = 0.
Generator normalize(const Generator& g);

// x -> c*s(x) + b. Throws ParameterError for c <= 0 or c*s(1) + b < 0.
Generator affine_shift(const Generator& g, double c, double b);

// Finite-difference s'(x) with step derivative_step*max(1,x); one-sided within
// a step of either endpoint. Throws DomainError outside (0,1).
double derivative(const Generator& g, double x, const ToleranceProfile& tol = {});

// Sampled invariant check; returns one message per violation.
std::vector<std::string> check_generator(const Generator& g,
                                         const IntervalGrid& grid,
                                         const ToleranceProfile& tol = {});

// Throws ValidationError listing every violation found by check_generator.
void validate_generator(const Generator& g, const IntervalGrid& grid,
                        const ToleranceProfile& tol = {});

}  // namespace subnorm
