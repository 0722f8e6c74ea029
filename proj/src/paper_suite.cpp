#include "subnorm/paper_suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>

#include "subnorm/asymptotics.hpp"
#include "subnorm/composed_map.hpp"
#include "subnorm/errors.hpp"
#include "subnorm/families.hpp"
#include "subnorm/order.hpp"

namespace subnorm {

BinaryOperator parse_operator(std::string_view text, const FixtureSet& fixtures,
                              const ToleranceProfile& tol) {
  std::string name(text);
  if (fixtures.contains(name))
    return TSubnorm::from_generator(fixtures.get(name), tol).as_operator();
  return make_operator(FamilySpec::parse(text), tol);
}

namespace {

constexpr double kValueTol = 1e-9;

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  std::string summary() const {
    if (failures_.empty()) return std::to_string(total_) + " checks";
    std::string out;
    for (std::size_t i = 0; i < failures_.size() && i < 4; ++i)
      out += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 4) out += "; +" + std::to_string(failures_.size() - 4) + " more";
    return out;
  }

 private:
  int total_ = 0;
  std::vector<std::string> failures_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

TSubnorm member(const char* spec, const ToleranceProfile& tol) {
  return make_family(FamilySpec::parse(spec), tol);
}

bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(b), 1.0);
}

std::vector<TSubnorm> catalog(const SuiteOptions& o, bool with_fixture) {
  std::vector<TSubnorm> ops;
  for (const auto& spec : standard_catalog()) ops.push_back(make_family(spec, o.tolerance));
  if (with_fixture)
    ops.push_back(TSubnorm::from_generator(o.fixtures.get("psi"), o.tolerance));
  return ops;
}

void strict_tnorm_values(const SuiteOptions& o, Checks& c) {
  const auto& tol = o.tolerance;
  auto t1 = member("hamacher0", tol);
  auto t2 = member("reciprocal_minus_x", tol);
  c.expect(std::abs(t1(0.5, 0.5) - 1.0 / 3) <= kValueTol, "T1(0.5,0.5) != 1/3");
  c.expect(std::abs(t2(0.5, 0.5) - (std::sqrt(13.0) - 3) / 2) <= kValueTol,
           "T2(0.5,0.5) != (sqrt(13)-3)/2");
  auto grid = IntervalGrid::uniform(201);
  auto v = direct_compare(t1.as_operator(), t2.as_operator(), grid, tol);
  c.expect(v.relation == Relation::dominates,
           std::string("expected T2 <= T1 strictly, got ") + to_string(v.relation));
  c.expect(t1(0.5, 0.5) - t2(0.5, 0.5) > tol.verdict_margin, "no strict gap at (0.5,0.5)");
  c.expect(ratio_criterion(t2.generator(), t1.generator(), grid, tol).holds(),
           "ratio criterion does not certify T2 <= T1");
}

void subadditive_trio(const SuiteOptions& o, Checks& c) {
  const auto& tol = o.tolerance;
  auto grid = IntervalGrid::uniform(101);
  struct Case {
    const char* lhs;
    const char* rhs;
    double (*h)(double);
  };
  const Case cases[] = {
      {"product", "hamacher0", [](double u) { return std::log(u + 1); }},
      {"half_product", "hamacher0", nullptr},
      {"rational:a=0.5", "rational:a=0.7", [](double u) { return (3 * u + 2) / 5; }},
  };
  for (const auto& k : cases) {
    auto a = member(k.lhs, tol);
    auto b = member(k.rhs, tol);
    ComposedMap map(a.generator(), b.generator(), tol);
    std::string pair = std::string(k.lhs) + " vs " + k.rhs;
    c.expect(subadditivity_test(map, grid).holds(), pair + ": not subadditive");
    c.expect(direct_compare(a.as_operator(), b.as_operator(), grid, tol).relation ==
                 Relation::dominated,
             pair + ": oracle does not report dominated");
    if (!k.h) continue;
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
      double u = map.domain_start() + std::pow(10.0, -2 + 5.0 * i / 49);
      worst = std::max(worst, std::abs(map(u) - k.h(u)));
    }
    c.expect(worst <= kValueTol, pair + ": composed map off by " + fmt(worst));
  }
}

void catalog_matrix(const SuiteOptions& o, Checks& c) {
  auto ops = catalog(o, true);
  auto grid = IntervalGrid::uniform(101);
  c.expect(ops.size() >= 10, "catalog has fewer than 10 members");
  for (const auto& a : ops) {
    for (const auto& b : ops) {
      ComposedMap map(a.generator(), b.generator(), o.tolerance);
      auto oracle = direct_compare(a.as_operator(), b.as_operator(), grid, o.tolerance);
      bool sub = subadditivity_test(map, grid).holds();
      c.expect(sub == dominated_or_equal(oracle.relation),
               a.label() + " vs " + b.label() + ": subadditivity disagrees with the grid");
      bool eq = equality_test(map, grid).holds();
      c.expect(eq == (oracle.relation == Relation::equal),
               a.label() + " vs " + b.label() + ": equality disagrees with the grid");
    }
  }
}

void family_chains(const SuiteOptions& o, Checks& c) {
  struct Case {
    const char* family;
    std::vector<double> lambdas;
    Criterion criterion;
    const char* chain;
  };
  const Case cases[] = {
      {"dombi_sub:a=0.6", {0.5, 1, 2, 4}, Criterion::concavity, "increasing"},
      {"ss_sub:a=0.5", {-3, -2, -1}, Criterion::derivative_ratio, "decreasing"},
      {"log_sub:a=0.5", {1, 2}, Criterion::ratio, "increasing"},
  };
  auto grid = IntervalGrid::uniform(101);
  for (const auto& k : cases) {
    auto r = family_monotonicity_scan(FamilySpec::parse(k.family), k.lambdas, k.criterion,
                                      grid, o.tolerance);
    c.expect(r.chain == k.chain, std::string(k.family) + ": chain " + r.chain);
    c.expect(r.all_agree, std::string(k.family) + ": criterion and grid disagree");
    for (const auto& step : r.steps) {
      bool strict = !step.oracle.witnesses.empty() &&
                    std::abs(step.oracle.witnesses[0].lhs - step.oracle.witnesses[0].rhs) >
                        o.tolerance.verdict_margin;
      c.expect(strict, std::string(k.family) + ": no strict witness at l = " +
                           fmt(step.lambda_from));
    }
  }
}

void converse_fixtures(const SuiteOptions& o, Checks& c) {
  auto grid = IntervalGrid::uniform(101);
  Generator base = fixture_base();
  Generator psi = o.fixtures.get("psi");
  ComposedMap pm(psi, base, o.tolerance);
  c.expect(subadditivity_test(pm, grid).holds(), "psi: not subadditive");
  auto ratio = ratio_criterion(psi, base, grid, o.tolerance);
  double lo = base.invert(std::sqrt(2.0));
  c.expect(ratio.fails() && ratio.worst_case && ratio.worst_case->at("x_lo") >= lo,
           "psi: ratio criterion not refuted on [s2^-1(sqrt 2), 1]");
  for (const char* name : {"steep_affine", "broken_line", "log_exp"}) {
    ComposedMap m(o.fixtures.get(name), base, o.tolerance);
    c.expect(midpoint_concavity(m, grid).holds(), std::string(name) + ": not concave");
    auto sub = subadditivity_test(m, grid);
    c.expect(sub.fails() && sub.worst_case.has_value(),
             std::string(name) + ": no subadditivity counterexample");
  }
}

void slopes(const SuiteOptions& o, Checks& c) {
  auto grid = IntervalGrid::uniform(101);
  const auto& tol = o.tolerance;
  ComposedMap log_map(member("product", tol).generator(), member("hamacher0", tol).generator(), tol);
  auto a = asymptotic_slope_A(log_map, grid);
  auto b = small_slope_B(log_map, grid);
  c.expect(a.converged && a.value.is_finite() && std::abs(a.value.value()) <= 1e-3,
           "ln(u+1): A = " + a.value.to_string());
  c.expect(b.value.is_finite() && rel_close(b.value.value(), 1.0, 1e-3),
           "ln(u+1): B = " + b.value.to_string());
  c.expect(a.extremum_agrees.value_or(false), "ln(u+1): A differs from inf h(u)/u");
  c.expect(linear_envelope_check(log_map, 0, 1, grid).holds(), "ln(u+1): envelope 0 <= h <= u");

  ComposedMap affine(member("rational:a=0.5", tol).generator(),
                     member("rational:a=0.7", tol).generator(), tol);
  auto a2 = asymptotic_slope_A(affine, grid);
  c.expect(a2.converged && a2.value.is_finite() && rel_close(a2.value.value(), 0.6, 1e-3),
           "(3u+2)/5: A = " + a2.value.to_string());
  c.expect(a2.extremum_agrees.value_or(false), "(3u+2)/5: A differs from inf h(u)/u");
  auto b2 = small_slope_B(affine, grid);
  c.expect(b2.value.is_finite() && rel_close(b2.value.value(), 1.0, 1e-3),
           "(3u+2)/5: B = " + b2.value.to_string());
  c.expect(linear_envelope_check(affine, 0.6, 1, grid).holds(), "(3u+2)/5: envelope 3/5..1");
}

void guards(const SuiteOptions& o, Checks& c) {
  auto ops = catalog(o, false);
  auto grid = IntervalGrid::uniform(101);
  BinaryOperator nil[] = {lukasiewicz(), yager(2)};
  for (const auto& s : ops) {
    for (const auto& t : nil) {
      auto r = nilpotent_guard(s, t, grid);
      bool witnessed = r.fails() && r.worst_case && r.worst_case->at("t_power") == 0 &&
                       r.worst_case->at("s_power") > 0;
      c.expect(witnessed, s.label() + " vs " + t.label() + ": no power witness");
    }
  }
  for (const auto& s : ops) {
    if (!s.is_proper()) continue;
    for (const auto& t : ops) {
      if (!t.is_strict()) continue;
      auto r = proper_never_dominates_tnorm_check(s, t, grid);
      c.expect(r.fails() && r.worst_case.has_value(),
               t.label() + " <= " + s.label() + " not refuted");
    }
  }
}

void structure(const SuiteOptions& o, Checks& c) {
  auto grid = IntervalGrid::uniform(21);
  for (const auto& s : catalog(o, true)) {
    auto report = check_axioms(s, grid, o.tolerance);
    double bound = s.generator().kind() == InverseKind::closed_form ? 1e-9 : 1e-6;
    c.expect(report.all_passed(), s.label() + ": axioms fail");
    c.expect(report.associative.residual <= bound,
             s.label() + ": associativity residual " + fmt(report.associative.residual));
    auto t = complete_to_tnorm(s);
    double worst = 0;
    for (double x : grid.points()) worst = std::max(worst, std::abs(t(x, 1) - x));
    c.expect(worst <= 1e-9, s.label() + ": completion lacks neutral element");
    if (s.is_proper()) {
      auto n = TSubnorm::from_generator(normalize(s.generator()), o.tolerance);
      double gap = direct_compare(s.as_operator(), n.as_operator(), grid, o.tolerance).sup_difference;
      c.expect(gap <= 1e-9, s.label() + ": normalization changes the operator by " + fmt(gap));
    }
  }
}

void submultiplicative(const SuiteOptions& o, Checks& c) {
  const auto& tol = o.tolerance;
  auto s = member("half_product", tol);
  auto t = member("hamacher0", tol);
  auto phi = product_isomorphism(t);
  auto g = submultiplicative_map(s, t);
  double worst_phi = 0, worst_g = 0;
  for (int i = 1; i <= 50; ++i) {
    double x = i / 50.0;
    worst_phi = std::max(worst_phi, std::abs(phi(x) - std::exp(1 - 1 / x)));
    worst_g = std::max(worst_g, std::abs(g(x) - (1 + std::log(1 - std::log(x)) / std::log(2.0))));
  }
  c.expect(worst_phi <= kValueTol, "phi off by " + fmt(worst_phi));
  c.expect(worst_g <= kValueTol, "g off by " + fmt(worst_g));
  auto grid = IntervalGrid::uniform(101);
  c.expect(strict_dominance_test(s, t, grid).holds(), "g is not submultiplicative-additive");
  c.expect(direct_compare(s.as_operator(), t.as_operator(), grid, tol).relation ==
               Relation::dominated,
           "oracle does not confirm xy/2 <= hamacher0");
}

struct Entry {
  const char* title;
  void (*run)(const SuiteOptions&, Checks&);
  double budget_seconds;
};

}  // namespace

std::vector<SuiteItem> run_paper_suite(const SuiteOptions& options) {
  const Entry entries[] = {
      {"strict t-norm values and ratio order", strict_tnorm_values, 1},
      {"subadditive composed maps", subadditive_trio, 2},
      {"subadditivity matches the grid on the catalog", catalog_matrix, 30},
      {"monotone parametric families", family_chains, 0},
      {"converse failures", converse_fixtures, 0},
      {"asymptotic and small-argument slopes", slopes, 0},
      {"nilpotent and t-norm guards", guards, 0},
      {"structural properties", structure, 0},
      {"submultiplicative-additive map", submultiplicative, 0},
  };
  std::vector<SuiteItem> items;
  int id = 0;
  for (const auto& e : entries) {
    SuiteItem item;
    item.id = ++id;
    item.title = e.title;
    Checks checks;
    auto start = std::chrono::steady_clock::now();
    try {
      e.run(options, checks);
      item.passed = checks.passed();
      item.detail = checks.summary();
    } catch (const std::exception& ex) {
      item.passed = false;
      item.detail = ex.what();
    }
    item.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.budget_seconds > 0 && item.seconds > e.budget_seconds) {
      item.passed = false;
      item.detail += "; over the " + fmt(e.budget_seconds) + " s budget";
    }
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace subnorm
