#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "subnorm/generator.hpp"
#include "subnorm/operators.hpp"

namespace subnorm {

enum class Family {
  hamacher0,           // t(x) = (1-x)/x
  product,             // t(x) = -ln x
  half_product,        // s(x) = 1 - ln x / ln 2, S(x,y) = xy/2
  rational,            // s(x) = (1/x - a)/(1-a), S(x,y) = xy/(x+y-axy)
  reciprocal_minus_x,  // t(x) = 1/x - x
  aa_tnorm,            // t(x) = (-ln x)^l
  dombi_sub,           // s(x) = ((1/x - a)/(1-a))^l
  aa_sub,              // s(x) = (-ln ax)^l / (-ln a)^l
  ss_sub,              // s(x) = (1 - (ax)^l)/(1 - a^l), l < 0
  log_sub,             // s(x) = (-ln ax)^l, raw
  yager,               // nilpotent closed-form fixture
  lukasiewicz,         // nilpotent closed-form fixture
};

const char* to_string(Family f);

// Grammar: name[:key=val,...], keys "a" and "l" (alias "lambda").
struct FamilySpec {
  Family family = Family::product;
  std::map<std::string, double> parameters;

  static FamilySpec parse(std::string_view text);  // throws ParseError
  std::string to_string() const;                   // canonical spec text

  // Throws ParameterError when absent.
  double param(const std::string& key) const;
  FamilySpec with(const std::string& key, double value) const;

  // Throws ParameterError naming the violated constraint.
  void validate() const;
  bool has_generator() const {
    return family != Family::yager && family != Family::lukasiewicz;
  }

  // {"label":..,"family":..,"parameters":{..}}
  std::string to_record() const;
  static FamilySpec from_record(std::string_view record);

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

Generator family_generator(const FamilySpec& spec);
TSubnorm make_family(const FamilySpec& spec, const ToleranceProfile& tol = {});
BinaryOperator make_operator(const FamilySpec& spec,
                             const ToleranceProfile& tol = {});

BinaryOperator yager(double lambda);
BinaryOperator lukasiewicz();

// Members used for the order matrix and structural checks.
std::vector<FamilySpec> standard_catalog();

}  // namespace subnorm
