#include <doctest.h>

#include <cmath>

#include "subnorm/errors.hpp"
#include "subnorm/families.hpp"

using namespace subnorm;

TEST_CASE("parse names, parameters and aliases") {
  auto d = FamilySpec::parse("dombi:a=0.6,lambda=2");
  CHECK(d.family == Family::dombi_sub);
  CHECK(d.param("a") == 0.6);
  CHECK(d.param("l") == 2);
  CHECK(d.to_string() == "dombi_sub:a=0.6,l=2");
  CHECK(FamilySpec::parse("ss:a=0.5,l=-2").family == Family::ss_sub);
  CHECK(FamilySpec::parse("log:a=0.5,l=1").family == Family::log_sub);
  CHECK(FamilySpec::parse("aa:l=3").family == Family::aa_tnorm);
  CHECK(FamilySpec::parse("product").parameters.empty());
  CHECK(FamilySpec::parse("yager:l=2").family == Family::yager);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(FamilySpec::parse("nosuch"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("rational:a"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("rational:a=zero"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("rational:b=1"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("product:a=1"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("rational:a=0.5x"), ParseError);
}

TEST_CASE("parameter domains") {
  CHECK_THROWS_AS(make_family(FamilySpec::parse("rational:a=1")), ParameterError);
  CHECK_THROWS_AS(make_family(FamilySpec::parse("rational")), ParameterError);
  CHECK_THROWS_AS(make_family(FamilySpec::parse("dombi_sub:a=0.6,l=0")), ParameterError);
  CHECK_THROWS_AS(make_family(FamilySpec::parse("aa_sub:a=0,l=1")), ParameterError);
  CHECK_THROWS_AS(make_family(FamilySpec::parse("ss_sub:a=0.5,l=1")), ParameterError);
  CHECK_THROWS_AS(make_family(FamilySpec::parse("log_sub:a=1.5,l=1")), ParameterError);
  CHECK_THROWS_AS(make_family(FamilySpec::parse("yager:l=2")), ParameterError);
  CHECK_THROWS_AS(make_operator(FamilySpec::parse("yager:l=-1")), ParameterError);
  try {
    FamilySpec::parse("ss_sub:a=0.5,l=1").validate();
    FAIL("expected ParameterError");
  } catch (const ParameterError& e) {
    CHECK(std::string(e.what()).find("l < 0") != std::string::npos);
  }
}

TEST_CASE("records round trip") {
  for (const auto& spec : standard_catalog()) {
    auto back = FamilySpec::from_record(spec.to_record());
    CHECK(back == spec);
  }
  CHECK(FamilySpec::parse("rational:a=0.5").to_record() ==
        R"({"label":"rational:a=0.5","family":"rational","parameters":{"a":0.5}})");
  CHECK_THROWS_AS(FamilySpec::from_record("{"), ParseError);
  CHECK_THROWS_AS(FamilySpec::from_record(R"({"label":"x"})"), ParseError);
}

TEST_CASE("generator formulas") {
  auto g = [](const char* s) { return family_generator(FamilySpec::parse(s)); };
  for (double x : {0.1, 0.3, 0.7, 1.0}) {
    INFO("x=" << x);
    CHECK(g("ss_sub:a=0.5,l=-1").eval(x).value() == doctest::Approx(2 / x - 1).epsilon(1e-12));
    CHECK(g("rational:a=0.7").eval(x).value() ==
          doctest::Approx(10 / (3 * x) - 7.0 / 3).epsilon(1e-12));
    CHECK(g("aa_sub:a=0.5,l=2").eval(x).value() ==
          doctest::Approx(std::pow(std::log(0.5 * x) / std::log(0.5), 2)).epsilon(1e-12));
    CHECK(g("log_sub:a=0.5,l=2").eval(x).value() ==
          doctest::Approx(std::pow(-std::log(0.5 * x), 2)).epsilon(1e-12));
    CHECK(g("dombi_sub:a=0.6,l=0.5").eval(x).value() ==
          doctest::Approx(std::sqrt((1 / x - 0.6) / 0.4)).epsilon(1e-12));
  }
  CHECK(g("ss_sub:a=0.5,l=-2").boundary_at_one() == 1.0);
  CHECK(g("dombi_sub:a=0.6,l=2").boundary_at_one() == 1.0);
  CHECK(g("log_sub:a=0.5,l=1").boundary_at_one() == doctest::Approx(std::log(2.0)));
  CHECK(g("log_sub:a=1,l=1").is_strict());
}

TEST_CASE("closed-form operators for nilpotent fixtures") {
  auto y = yager(2);
  CHECK(y(0.5, 0.5) == doctest::Approx(1 - std::sqrt(0.5)).epsilon(1e-12));
  CHECK(y(0.2, 0.2) == 0.0);
  CHECK(y.is_nilpotent_fixture());
  CHECK(y.generated() == nullptr);
  auto l = lukasiewicz();
  CHECK(l(0.7, 0.6) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(l(0.3, 0.6) == 0.0);
  CHECK(make_operator(FamilySpec::parse("product")).generated() != nullptr);
}

TEST_CASE("catalog contents") {
  auto cat = standard_catalog();
  CHECK(cat.size() == 14);
  int strict = 0;
  for (const auto& spec : cat) {
    spec.validate();
    if (make_family(spec).is_strict()) ++strict;
  }
  CHECK(strict == 4);
}

TEST_CASE("aa_sub regenerates its closed-form operator") {
  for (double l : {0.5, 2.0}) {
    auto s = make_family(FamilySpec::parse("aa_sub:a=0.5").with("l", l));
    auto closed = [l](double x, double y) {
      double sum = std::pow(-std::log(0.5 * x), l) + std::pow(-std::log(0.5 * y), l);
      return 2 * std::exp(-std::pow(sum, 1 / l));
    };
    auto grid = IntervalGrid::uniform(21);
    for (double x : grid.points())
      for (double y : grid.points()) {
        INFO("l=" << l << " x=" << x << " y=" << y);
        CHECK(std::abs(s(x, y) - closed(x, y)) <= 1e-12);
      }
  }
}
