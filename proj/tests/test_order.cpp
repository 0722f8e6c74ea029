#include <doctest.h>

#include <cmath>

#include "subnorm/composed_map.hpp"
#include "subnorm/errors.hpp"
#include "subnorm/families.hpp"
#include "subnorm/fixtures.hpp"
#include "subnorm/order.hpp"

using namespace subnorm;

namespace {

FamilySpec spec(const char* s) { return FamilySpec::parse(s); }
Generator gen(const char* s) { return family_generator(spec(s)); }
TSubnorm fam(const char* s) { return make_family(spec(s)); }
BinaryOperator op(const char* s) { return make_operator(spec(s)); }
ComposedMap map(const char* lhs, const char* rhs) { return ComposedMap(gen(lhs), gen(rhs)); }

const IntervalGrid& grid() {
  static const IntervalGrid g = IntervalGrid::uniform(101);
  return g;
}

}  // namespace

TEST_CASE("oracle verdicts") {
  auto v = direct_compare(op("half_product"), yager(2), IntervalGrid({0.3, 1.0}));
  CHECK(v.relation == Relation::incomparable);
  REQUIRE(v.witnesses.size() == 2);
  CHECK(v.witnesses[0].x == 0.3);
  CHECK(v.witnesses[0].y == 0.3);
  CHECK(v.witnesses[0].lhs == doctest::Approx(0.045));
  CHECK(v.witnesses[0].rhs == doctest::Approx(1 - std::sqrt(0.98)));
  CHECK(v.witnesses[1].x == 1.0);
  CHECK(v.witnesses[1].lhs == doctest::Approx(0.5));
  CHECK(v.witnesses[1].rhs == 1.0);

  CHECK(direct_compare(op("half_product"), yager(2), grid()).relation == Relation::incomparable);
  CHECK(direct_compare(op("rational:a=0.5"), op("rational:a=0.7"), grid()).relation ==
        Relation::dominated);
  CHECK(direct_compare(op("rational:a=0.7"), op("rational:a=0.5"), grid()).relation ==
        Relation::dominates);
  CHECK(direct_compare(op("hamacher0"), op("reciprocal_minus_x"), grid()).relation ==
        Relation::dominates);
  CHECK(direct_compare(op("product"), op("reciprocal_minus_x"), grid()).relation ==
        Relation::dominated);
  auto eq = direct_compare(op("product"), op("product"), grid());
  CHECK(eq.relation == Relation::equal);
  CHECK(eq.witnesses.empty());
  CHECK(eq.sup_difference == 0.0);
}

TEST_CASE("subadditivity test") {
  auto r = subadditivity_test(map("product", "hamacher0"), grid());
  CHECK(r.holds());
  CHECK(subadditivity_test(map("rational:a=0.5", "rational:a=0.7"), grid()).holds());
  auto id = subadditivity_test(map("aa_tnorm:l=2", "aa_tnorm:l=2"), grid());
  CHECK(id.holds());
  CHECK(subadditivity_test(map("hamacher0", "product"), grid()).fails());
  CHECK(subadditivity_test(map("rational:a=0.7", "rational:a=0.5"), grid()).fails());
}

TEST_CASE("equality test") {
  auto p = gen("product");
  auto twice = equality_test(ComposedMap(affine_shift(p, 2, 0), p), grid());
  CHECK(twice.holds());
  CHECK(*twice.estimate == doctest::Approx(2.0).epsilon(1e-9));
  auto same = equality_test(map("half_product", "half_product"), grid());
  CHECK(same.holds());
  CHECK(*same.estimate == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(equality_test(map("product", "hamacher0"), grid()).fails());
}

TEST_CASE("concavity criterion") {
  CHECK(concavity_criterion(map("product", "hamacher0"), grid()).holds());
  CHECK(concavity_criterion(map("dombi_sub:a=0.6,l=0.5", "dombi_sub:a=0.6,l=2"), grid()).holds());
  auto base = fixture_base();
  CHECK(concavity_criterion(ComposedMap(steep_affine_fixture(2, base), base), grid()).fails());
  ComposedMap psi(psi_construction(base), base);
  CHECK(concavity_criterion(psi, grid()).fails());
  CHECK(subadditivity_test(psi, grid()).holds());
}

TEST_CASE("quasi-homogeneity criterion") {
  auto affine = map("rational:a=0.5", "rational:a=0.7");
  CHECK(midpoint_convexity(affine, grid()).holds());
  CHECK(quasi_homogeneity_criterion(affine, grid()).holds());
  CHECK(quasi_homogeneity_criterion(map("product", "product"), grid()).holds());

  auto base = fixture_base();
  auto sq = quasi_homogeneity_criterion(ComposedMap(square_fixture(base), base), grid());
  CHECK(sq.fails());
  REQUIRE(sq.worst_case.has_value());
  CHECK(sq.worst_case->at("h_tu") > sq.worst_case->at("t_h"));
  const double only_two[] = {2};
  auto at2 = quasi_homogeneity_criterion(ComposedMap(square_fixture(base), base), grid(), only_two);
  CHECK(at2.fails());

  CHECK(quasi_homogeneity_criterion(map("product", "hamacher0"), grid()).verdict ==
        CriterionVerdict::not_applicable);
}

TEST_CASE("ratio criterion") {
  CHECK(ratio_criterion(gen("product"), gen("aa_tnorm:l=2"), grid()).holds());
  CHECK(ratio_criterion(gen("log_sub:a=0.5,l=1"), gen("log_sub:a=0.5,l=2"), grid()).holds());
  CHECK(ratio_criterion(gen("reciprocal_minus_x"), gen("hamacher0"), grid()).holds());
  auto base = fixture_base();
  CHECK(ratio_criterion(psi_construction(base), base, grid()).fails());
}

TEST_CASE("ratio profile criterion") {
  CHECK(ratio_profile_criterion(map("product", "hamacher0"), grid()).holds());
  CHECK(ratio_profile_criterion(map("rational:a=0.5", "rational:a=0.7"), grid()).holds());
  auto base = fixture_base();
  CHECK(ratio_profile_criterion(ComposedMap(square_fixture(base), base), grid()).fails());
}

TEST_CASE("derivative ratio criterion") {
  CHECK(derivative_ratio_criterion(gen("ss_sub:a=0.5,l=-1"), gen("ss_sub:a=0.5,l=-2"), grid()).holds());
  CHECK(derivative_ratio_criterion(gen("product"), gen("product"), grid()).holds());
  auto r = derivative_ratio_criterion(gen("hamacher0"), gen("reciprocal_minus_x"), grid());
  CHECK_FALSE(r.holds());
  CHECK_FALSE(dominated_or_equal(
      direct_compare(op("hamacher0"), op("reciprocal_minus_x"), grid()).relation));
  CHECK(derivative_ratio_criterion(gen("product"), gen("half_product"), grid()).verdict ==
        CriterionVerdict::not_applicable);
}

TEST_CASE("strict dominance") {
  auto hp = fam("half_product");
  auto h0 = fam("hamacher0");
  CHECK(strict_dominance_test(hp, h0, grid()).holds());
  auto g = submultiplicative_map(hp, h0);
  for (double x : {0.05, 0.3, std::exp(-1.0), 0.9}) {
    CHECK(g(x) == doctest::Approx(1 + std::log(1 - std::log(x)) / std::log(2.0)).epsilon(1e-9));
  }
  CHECK(g(1) == doctest::Approx(1.0));
  auto phi = product_isomorphism(h0);
  CHECK(phi(0.5) == doctest::Approx(std::exp(-1.0)));

  auto shifted = from_generator(affine_shift(gen("hamacher0"), 0.5, 1));
  CHECK(strict_dominance_test(shifted, h0, grid()).holds());
  CHECK(dominated_or_equal(direct_compare(shifted.as_operator(), h0.as_operator(), grid()).relation));

  CHECK(strict_dominance_test(fam("product"), hp, grid()).verdict ==
        CriterionVerdict::not_applicable);
  CHECK(strict_dominance_test(fam("hamacher0"), fam("product"), grid()).fails());
}

TEST_CASE("logarithmic equality") {
  auto p = fam("product");
  auto same = logarithmic_equality_test(p, p, grid());
  CHECK(same.holds());
  CHECK(*same.estimate == doctest::Approx(1.0));
  auto h0 = fam("hamacher0");
  auto scaled = from_generator(affine_shift(h0.generator(), 3, 0));
  auto three = logarithmic_equality_test(scaled, h0, grid());
  CHECK(three.holds());
  CHECK(*three.estimate == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(logarithmic_equality_test(fam("half_product"), h0, grid()).fails());
  CHECK(logarithmic_equality_test(p, fam("half_product"), grid()).verdict ==
        CriterionVerdict::not_applicable);
}

TEST_CASE("nilpotent guard") {
  auto w = power_witness(op("product"), lukasiewicz(), 0.6);
  REQUIRE(w.has_value());
  CHECK(w->n == 3);
  CHECK(w->t_power == 0.0);
  CHECK(w->s_power == doctest::Approx(0.216));

  auto r = power_witness(op("rational:a=0.5"), lukasiewicz(), 0.5);
  REQUIRE(r.has_value());
  CHECK(r->n == 2);
  CHECK(r->s_power > 0);

  auto g = nilpotent_guard(fam("half_product"), yager(2), grid());
  CHECK(g.fails());
  REQUIRE(g.worst_case.has_value());
  CHECK(g.worst_case->at("n") >= 2);
  for (const auto& s : standard_catalog()) {
    CHECK(nilpotent_guard(make_family(s), lukasiewicz(), grid()).fails());
    CHECK(direct_compare(make_operator(s), yager(2), grid()).relation != Relation::dominated);
  }
}

TEST_CASE("proper operators never dominate a t-norm") {
  auto r = proper_never_dominates_tnorm_check(fam("half_product"), fam("product"), grid());
  CHECK(r.fails());
  REQUIRE(r.worst_case.has_value());
  double x = r.worst_case->at("x");
  CHECK(r.worst_case->at("s_value") < x);
  CHECK(proper_never_dominates_tnorm_check(fam("rational:a=0.5"), fam("hamacher0"), IntervalGrid({1.0}))
            .fails());
  CHECK(proper_never_dominates_tnorm_check(fam("product"), fam("hamacher0"), grid()).verdict ==
        CriterionVerdict::not_applicable);
}

TEST_CASE("criterion names") {
  for (auto c : {Criterion::subadditivity, Criterion::equality, Criterion::concavity,
                 Criterion::quasi_homogeneity, Criterion::ratio, Criterion::ratio_profile,
                 Criterion::derivative_ratio, Criterion::strict_dominance,
                 Criterion::logarithmic_equality})
    CHECK(criterion_from_string(to_string(c)) == c);
  CHECK_THROWS_AS(criterion_from_string("nope"), ParseError);
  auto r = run_criterion(Criterion::ratio_profile, fam("product"), fam("hamacher0"), grid());
  CHECK(r.criterion == "ratio_profile");
  CHECK(r.holds());
}

TEST_CASE("family scans") {
  const double dombi[] = {0.5, 1, 2, 4};
  auto d = family_monotonicity_scan(spec("dombi_sub:a=0.6"), dombi, Criterion::subadditivity, grid());
  CHECK(d.chain == "increasing");
  CHECK(d.all_agree);
  CHECK(d.steps.size() == 3);

  const double ss[] = {-3, -2, -1};
  auto s = family_monotonicity_scan(spec("ss_sub:a=0.5"), ss, Criterion::derivative_ratio, grid());
  CHECK(s.chain == "decreasing");
  CHECK(s.all_agree);

  const double lg[] = {1, 2};
  auto l = family_monotonicity_scan(spec("log_sub:a=0.5"), lg, Criterion::ratio, grid());
  CHECK(l.chain == "increasing");
  CHECK(l.all_agree);

  const double one[] = {1};
  CHECK_THROWS_AS(family_monotonicity_scan(spec("dombi_sub:a=0.6"), one, Criterion::ratio, grid()),
                  ParameterError);
  const double bad[] = {-1, 1};
  CHECK_THROWS_AS(family_monotonicity_scan(spec("dombi_sub:a=0.6"), bad, Criterion::ratio, grid()),
                  ParameterError);
}

TEST_CASE("compare picks a certificate consistent with the oracle") {
  auto v = compare(op("rational:a=0.5"), op("rational:a=0.7"), grid());
  CHECK(v.relation == Relation::dominated);
  CHECK_FALSE(v.criterion.empty());
  auto e = compare(op("product"), op("product"), grid());
  CHECK(e.relation == Relation::equal);
  CHECK(e.criterion == "equality");
  auto i = compare(op("half_product"), yager(2), grid());
  CHECK(i.relation == Relation::incomparable);
  CHECK(i.witnesses.size() == 2);
  auto inc = compare(op("hamacher0"), op("dombi_sub:a=0.6,l=2"), grid());
  CHECK(inc.relation ==
        direct_compare(op("hamacher0"), op("dombi_sub:a=0.6,l=2"), grid()).relation);
}

TEST_CASE("values below the margin still separate from an exact nilpotent zero") {
  auto s = make_operator(spec("aa_tnorm:l=0.3"));
  auto grid = IntervalGrid::uniform(41);
  auto v = direct_compare(s, yager(3), grid);
  CHECK(v.relation == Relation::incomparable);
  REQUIRE(v.witnesses.size() == 2);
  CHECK(v.witnesses[0].rhs == 0.0);
  CHECK(v.witnesses[0].lhs > 0.0);
  CHECK(direct_compare(yager(3), s, grid).relation == Relation::incomparable);
}
