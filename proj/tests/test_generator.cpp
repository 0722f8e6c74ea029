#include <doctest.h>

#include <cmath>

#include "subnorm/errors.hpp"
#include "subnorm/families.hpp"
#include "subnorm/fixtures.hpp"
#include "subnorm/generator.hpp"
#include "subnorm/operators.hpp"
#include "subnorm/order.hpp"

using namespace subnorm;

namespace {

Generator gen(const char* spec) { return family_generator(FamilySpec::parse(spec)); }

Generator two_over_x() {
  return Generator("2/x-1", [](double x) { return 2 / x - 1; }, 1.0);
}

}  // namespace

TEST_CASE("eval at the endpoints") {
  CHECK(gen("product").eval(1) == ExtendedValue(0));
  CHECK(gen("hamacher0").eval(0).is_infinite());
  CHECK(gen("half_product").eval(1) == ExtendedValue(1));
  CHECK(gen("hamacher0").eval(0.5).value() == doctest::Approx(1.0));
}

TEST_CASE("eval rejects points outside [0,1]") {
  auto g = gen("product");
  CHECK_THROWS_AS(g.eval(-0.1), DomainError);
  CHECK_THROWS_AS(g.eval(1.0000001), DomainError);
  CHECK_THROWS_AS(g.eval(std::nan("")), DomainError);
}

TEST_CASE("closed-form inversion") {
  CHECK(gen("product").invert(std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(gen("hamacher0").invert(1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(gen("reciprocal_minus_x").invert(3.0) ==
        doctest::Approx((std::sqrt(13.0) - 3) / 2).epsilon(1e-12));
  CHECK(gen("product").invert(kInf) == 0.0);
  CHECK_THROWS_AS(gen("half_product").invert(0.5), DomainError);
}

TEST_CASE("numeric inversion by bisection") {
  auto g = two_over_x();
  CHECK(g.kind() == InverseKind::numeric);
  CHECK(g.invert(3.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(g.invert(1e6 - 1) - 2e-6) < 1e-18);
  CHECK(g.invert(1.0) == 1.0);
  CHECK(g.invert(kInf) == 0.0);
}

TEST_CASE("pseudo-inverse clamps below s(1)") {
  CHECK(gen("half_product").pseudo_invert(0.5) == 1.0);
  CHECK(gen("product").pseudo_invert(0.0) == 1.0);
  CHECK(two_over_x().pseudo_invert(3.0) == doctest::Approx(0.5));
  CHECK(two_over_x().pseudo_invert(0.0) == 1.0);
}

TEST_CASE("normalize divides by s(1)") {
  Generator four("4/x-2", [](double x) { return 4 / x - 2; }, 2.0);
  auto n = normalize(four);
  CHECK(n.boundary_at_one() == 1.0);
  CHECK(n.eval(0.5).value() == doctest::Approx(3.0));
  auto grid = IntervalGrid::uniform(201);
  auto v = direct_compare(from_generator(four).as_operator(), from_generator(n).as_operator(), grid);
  CHECK(v.relation == Relation::equal);
  CHECK(normalize(two_over_x()).eval(0.25).value() == doctest::Approx(7.0));
  CHECK_THROWS_AS(normalize(gen("product")), NormalizationError);
}

TEST_CASE("affine shift") {
  auto grid = IntervalGrid::uniform(201);
  auto base = gen("rational:a=0.5");
  auto shifted = affine_shift(base, 0.5, 0.5);
  // 0.5 * (2/x - 1) + 0.5 = 1/x
  CHECK(shifted.eval(0.25).value() == doctest::Approx(4.0));
  CHECK(shifted.boundary_at_one() == doctest::Approx(1.0));
  auto v = direct_compare(from_generator(shifted).as_operator(), from_generator(base).as_operator(), grid);
  CHECK(dominated_or_equal(v.relation));

  auto half = affine_shift(gen("product"), 1 / std::log(2.0), 1.0);
  auto hp = from_generator(half);
  CHECK(hp(0.6, 0.7) == doctest::Approx(0.21).epsilon(1e-12));
  CHECK(direct_compare(hp.as_operator(), from_generator(gen("product")).as_operator(), grid)
            .relation == Relation::dominated);

  auto same = affine_shift(base, 1, 0);
  CHECK(direct_compare(from_generator(same).as_operator(), from_generator(base).as_operator(), grid)
            .relation == Relation::equal);
  CHECK_THROWS_AS(affine_shift(base, 0, 1), ParameterError);
  CHECK_THROWS_AS(affine_shift(base, 1, -2), ParameterError);
}

TEST_CASE("finite-difference derivatives") {
  CHECK(derivative(gen("product"), 0.5) == doctest::Approx(-2).epsilon(1e-4));
  CHECK(derivative(gen("rational:a=0.5"), 0.5) == doctest::Approx(-8).epsilon(1e-4));
  CHECK(derivative(gen("hamacher0"), 0.5) == doctest::Approx(-4).epsilon(1e-4));
  CHECK(derivative(gen("product"), 1 - 1e-7) == doctest::Approx(-1).epsilon(1e-4));
  CHECK_THROWS_AS(derivative(gen("product"), 0), DomainError);
  CHECK_THROWS_AS(derivative(gen("product"), 1), DomainError);
}

TEST_CASE("derivatives match analytic forms on (0.05, 0.95)") {
  struct Case {
    const char* spec;
    double (*d)(double);
  };
  const Case cases[] = {
      {"product", [](double x) { return -1 / x; }},
      {"hamacher0", [](double x) { return -1 / (x * x); }},
      {"reciprocal_minus_x", [](double x) { return -1 / (x * x) - 1; }},
      {"aa_tnorm:l=2", [](double x) { return 2 * std::log(x) / x; }},
      {"dombi_sub:a=0.6,l=2",
       [](double x) { return 2 * ((1 / x - 0.6) / 0.4) * (-1 / (0.4 * x * x)); }},
      {"ss_sub:a=0.5,l=-2",
       [](double x) { return -(-2) * std::pow(0.5, -2.0) * std::pow(x, -3.0) / (1 - 4.0); }},
  };
  for (const auto& c : cases) {
    auto g = gen(c.spec);
    for (double x = 0.05; x <= 0.95; x += 0.05) {
      INFO(c.spec << " x=" << x);
      CHECK(derivative(g, x) == doctest::Approx(c.d(x)).epsilon(1e-3));
    }
  }
}

TEST_CASE("inversion round trip for every catalog generator") {
  auto grid = IntervalGrid::uniform(101);
  std::vector<Generator> gens;
  for (const auto& spec : standard_catalog()) gens.push_back(family_generator(spec));
  for (const auto& name : FixtureSet::standard().names()) gens.push_back(FixtureSet::standard().get(name));
  for (const auto& g : gens) {
    for (double x : grid.with_tail()) {
      double u = g.eval(x).value();
      double back = g.eval(g.invert(u)).value();
      INFO(g.label() << " x=" << x);
      CHECK(std::abs(back - u) <= 1e-12 * std::max(1.0, u));
      CHECK(g.pseudo_invert(u) == g.invert(u));
    }
    double below = g.boundary_at_one() * 0.5;
    CHECK(g.pseudo_invert(below) == 1.0);
  }
}

TEST_CASE("validation rejects non-decreasing rules") {
  auto grid = IntervalGrid::uniform(51);
  Generator increasing("bad", [](double x) { return x; }, 1.0);
  CHECK_FALSE(check_generator(increasing, grid).empty());
  CHECK_THROWS_AS(validate_generator(increasing, grid), ValidationError);
  Generator flat("flat", [](double x) { return x < 0.5 ? 1 / x : 2.0; }, 2.0);
  CHECK_THROWS_AS(from_generator(flat), ValidationError);
  CHECK(check_generator(two_over_x(), grid).empty());
}

TEST_CASE("relabel keeps the rule") {
  auto g = gen("product").relabeled("ln");
  CHECK(g.label() == "ln");
  CHECK(g.eval(0.5).value() == doctest::Approx(std::log(2.0)));
}
