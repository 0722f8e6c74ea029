#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subnorm/generator.hpp"
#include "subnorm/interval_grid.hpp"
#include "subnorm/tolerance.hpp"

namespace subnorm {

class TSubnorm;

// Any binary operation on [0,1]^2: a generated t-subnorm or a closed-form
// fixture such as the Yager or Lukasiewicz t-norm.
class BinaryOperator {
 public:
  using Rule = std::function<double(double, double)>;

  BinaryOperator(std::string label, Rule rule, bool nilpotent = false);

  // Throws DomainError outside the unit square.
  double operator()(double x, double y) const;

  const std::string& label() const { return label_; }
  bool is_nilpotent_fixture() const { return nilpotent_; }

  // Non-null when this operator came from an additive generator.
  const TSubnorm* generated() const { return generated_.get(); }

 private:
  friend class TSubnorm;
  std::string label_;
  Rule rule_;
  bool nilpotent_ = false;
  std::shared_ptr<const TSubnorm> generated_;
};

enum class Classification { strict_tnorm, proper_subnorm };

const char* to_string(Classification c);

// S(x,y) = s^(-1)(s(x) + s(y)) for a continuous strictly decreasing generator.
class TSubnorm {
 public:
  // Validates the generator on a 201-point grid; throws ValidationError.
  static TSubnorm from_generator(Generator g, const ToleranceProfile& tol = {});

  double operator()(double x, double y) const;

  const Generator& generator() const { return generator_; }
  Classification classification() const {
    return generator_.is_strict() ? Classification::strict_tnorm
                                  : Classification::proper_subnorm;
  }
  bool is_strict() const { return generator_.is_strict(); }
  bool is_proper() const { return !generator_.is_strict(); }
  const std::string& label() const { return generator_.label(); }
  const ToleranceProfile& tolerance() const { return tol_; }

  BinaryOperator as_operator() const;

 private:
  TSubnorm(Generator g, ToleranceProfile tol)
      : generator_(std::move(g)), tol_(tol) {}
  Generator generator_;
  ToleranceProfile tol_;
};

TSubnorm from_generator(Generator g, const ToleranceProfile& tol = {});
double evaluate(const TSubnorm& s, double x, double y);

struct AxiomCheck {
  bool passed = true;
  std::vector<double> witness;  // (x,y) or (x,y,z) of the worst case
  double residual = 0.0;
};

struct AxiomReport {
  AxiomCheck commutative;
  AxiomCheck associative;
  AxiomCheck monotone;
  AxiomCheck bounded_by_min;
  AxiomCheck cancellative;

  bool all_passed() const {
    return commutative.passed && associative.passed && monotone.passed &&
           bounded_by_min.passed && cancellative.passed;
  }
};

// Pairwise axioms on the full grid, associativity on an 11-point sub-grid.
AxiomReport check_axioms(const BinaryOperator& op, const IntervalGrid& grid,
                         const ToleranceProfile& tol = {});
AxiomReport check_axioms(const TSubnorm& s, const IntervalGrid& grid,
                         const ToleranceProfile& tol = {});

// S on [0,1)^2, min on the upper and right edges.
BinaryOperator complete_to_tnorm(const TSubnorm& s);

// 1 - S(1-x, 1-y).
BinaryOperator dual_superconorm(const TSubnorm& s);

}  // namespace subnorm
