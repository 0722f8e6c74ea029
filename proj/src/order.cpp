#include "subnorm/order.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "subnorm/errors.hpp"

namespace subnorm {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Keeps the sample with the largest scaled excess; any excess above the
// slack turns the verdict into fails.
class Tracker {
 public:
  Tracker(std::string name, const ToleranceProfile& tol) : tol_(tol) {
    report_.criterion = std::move(name);
    report_.margin = tol.verdict_margin;
    report_.verdict = CriterionVerdict::holds;
  }

  void offer(double excess, double scale,
             std::vector<std::pair<std::string, double>> coords) {
    double weight = std::max(1.0, std::abs(scale));
    double scored = excess / weight;
    bool violated = excess > tol_.slack(scale);
    if (violated && !failed_) {
      failed_ = true;
      best_ = kNegInf;
    }
    if (failed_ && !violated) return;
    if (scored > best_) {
      best_ = scored;
      report_.worst_case = SamplePoint{std::move(coords), excess};
    }
  }

  bool failed() const { return failed_; }

  CriterionReport finish(std::string notes = {}) {
    if (failed_) report_.verdict = CriterionVerdict::fails;
    report_.notes = std::move(notes);
    return std::move(report_);
  }

 private:
  const ToleranceProfile& tol_;
  CriterionReport report_;
  double best_ = kNegInf;
  bool failed_ = false;
};

CriterionReport not_applicable(std::string name, const ToleranceProfile& tol,
                               std::string why) {
  CriterionReport r;
  r.criterion = std::move(name);
  r.verdict = CriterionVerdict::not_applicable;
  r.margin = tol.verdict_margin;
  r.notes = std::move(why);
  return r;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

// Sampled x in (0,1) for generator-space criteria.
std::vector<double> interior_abscissae(const IntervalGrid& grid) {
  std::vector<double> xs;
  for (double x : grid.with_tail())
    if (x < 1) xs.push_back(x);
  return xs;
}

CriterionReport midpoint_check(const ComposedMap& map, const IntervalGrid& grid,
                               bool concave) {
  const auto& tol = map.tolerance();
  Tracker t(concave ? "midpoint_concavity" : "midpoint_convexity", tol);
  auto samples = map.samples(grid);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 2; j < samples.size(); ++j) {
      const auto& a = samples[i];
      const auto& b = samples[j];
      double mid = a.u + (b.u - a.u) / 2;
      double hm = map(mid);
      double chord = (a.h + b.h) / 2;
      double excess = concave ? chord - hm : hm - chord;
      t.offer(excess, chord, {{"u", a.u}, {"v", b.u}, {"h_mid", hm}, {"chord", chord}});
    }
  }
  return t.finish();
}

// H(a) = s(t^-1(a)) with s normalized when proper.
struct LogMap {
  Generator s;
  Generator t;
  ToleranceProfile tol;
  double operator()(double a) const {
    if (std::isinf(a)) return a;
    return s.eval(t.invert(a, tol)).to_double();
  }
};

LogMap log_map(const TSubnorm& s, const TSubnorm& t) {
  return {s.is_proper() ? normalize(s.generator()) : s.generator(), t.generator(),
          s.tolerance()};
}

// -ln u for u in grid and u in phi(grid), ascending, finite.
std::vector<double> log_samples(const TSubnorm& t, const IntervalGrid& grid) {
  std::vector<double> as;
  for (double x : grid.points()) {
    as.push_back(-std::log(x));
    double tx = t.generator().eval(x).to_double();
    if (std::isfinite(tx) && std::exp(-tx) > 0) as.push_back(tx);
  }
  std::sort(as.begin(), as.end());
  as.erase(std::unique(as.begin(), as.end()), as.end());
  return as;
}

}  // namespace

ComparisonVerdict direct_compare(const BinaryOperator& lhs, const BinaryOperator& rhs,
                                 const IntervalGrid& grid, const ToleranceProfile& tol) {
  const double m = tol.verdict_margin;
  // A nilpotent fixture is exactly 0 on its zero region while a generated
  // operator is positive off the axes, so that sign difference is exact.
  const bool lhs_exact_zero = lhs.is_nilpotent_fixture() && rhs.generated();
  const bool rhs_exact_zero = rhs.is_nilpotent_fixture() && lhs.generated();
  Witness hi{}, lo{};
  std::optional<Witness> zero_hi, zero_lo;
  double max_d = kNegInf, min_d = std::numeric_limits<double>::infinity();
  for (double x : grid.points()) {
    for (double y : grid.points()) {
      double a = lhs(x, y), b = rhs(x, y);
      double d = a - b;
      if (d > max_d) {
        max_d = d;
        hi = {x, y, a, b};
      }
      if (d < min_d) {
        min_d = d;
        lo = {x, y, a, b};
      }
      if (rhs_exact_zero && b == 0 && a > 0 && (!zero_hi || a > zero_hi->lhs))
        zero_hi = Witness{x, y, a, b};
      if (lhs_exact_zero && a == 0 && b > 0 && (!zero_lo || b > zero_lo->rhs))
        zero_lo = Witness{x, y, a, b};
    }
  }
  ComparisonVerdict v;
  v.criterion = "direct_compare";
  v.margin = m;
  v.sup_difference = std::max(std::abs(max_d), std::abs(min_d));
  bool above = max_d > m, below = min_d < -m;
  if (!above && zero_hi) {
    above = true;
    hi = *zero_hi;
    v.notes = "exact zero of the nilpotent operand";
  }
  if (!below && zero_lo) {
    below = true;
    lo = *zero_lo;
    v.notes = "exact zero of the nilpotent operand";
  }
  if (above && below) {
    v.relation = Relation::incomparable;
    v.witnesses = {hi, lo};
  } else if (below) {
    v.relation = Relation::dominated;
    v.witnesses = {lo};
  } else if (above) {
    v.relation = Relation::dominates;
    v.witnesses = {hi};
  } else {
    v.relation = Relation::equal;
  }
  return v;
}

CriterionReport subadditivity_test(const ComposedMap& map, const IntervalGrid& grid) {
  Tracker t("subadditivity", map.tolerance());
  auto samples = map.samples(grid);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i; j < samples.size(); ++j) {
      const auto& a = samples[i];
      const auto& b = samples[j];
      double w = a.u + b.u;
      if (!std::isfinite(w)) continue;
      double hw = map(w);
      double sum = a.h + b.h;
      t.offer(hw - sum, sum, {{"u", a.u}, {"v", b.u}, {"h_sum", hw}, {"sum_h", sum}});
    }
  }
  return t.finish();
}

CriterionReport equality_test(const ComposedMap& map, const IntervalGrid& grid) {
  const auto& tol = map.tolerance();
  auto samples = map.samples(grid);
  std::vector<MapSample> positive;
  for (const auto& s : samples)
    if (s.u > 0) positive.push_back(s);
  if (positive.empty()) return not_applicable("equality", tol, "no positive samples");
  const auto& pivot = positive[positive.size() / 2];
  double c = pivot.h / pivot.u;
  Tracker t("equality", tol);
  for (const auto& s : samples) {
    double lin = c * s.u;
    t.offer(std::abs(s.h - lin), std::max(s.u, lin), {{"u", s.u}, {"h", s.h}, {"cu", lin}});
  }
  bool positive_c = c > 0;
  auto r = t.finish(positive_c ? "" : "fitted constant is not positive");
  if (!positive_c) r.verdict = CriterionVerdict::fails;
  r.estimate = c;
  return r;
}

CriterionReport midpoint_concavity(const ComposedMap& map, const IntervalGrid& grid) {
  return midpoint_check(map, grid, true);
}

CriterionReport midpoint_convexity(const ComposedMap& map, const IntervalGrid& grid) {
  return midpoint_check(map, grid, false);
}

CriterionReport concavity_criterion(const ComposedMap& map, const IntervalGrid& grid) {
  const auto& tol = map.tolerance();
  if (map.lhs().is_strict() && !map.rhs().is_strict())
    return not_applicable("concavity", tol,
                          "strict lhs against proper rhs: a t-norm never lies below a "
                          "proper t-subnorm");
  ComposedMap m = map.both_proper() ? map.normalized() : map;
  auto concave = midpoint_concavity(m, grid);
  concave.criterion = "concavity";
  if (!concave.holds() || !map.both_proper()) return concave;

  Tracker t("concavity", tol);
  for (const auto& s : m.samples(grid))
    t.offer(s.h - s.u, s.u, {{"u", s.u}, {"h", s.h}});
  auto bound = t.finish("side condition h(u) <= u on the normalized pair");
  if (bound.fails()) return bound;
  concave.notes = "concave; h(u) <= u on the normalized pair";
  return concave;
}

CriterionReport quasi_homogeneity_criterion(const ComposedMap& map,
                                            const IntervalGrid& grid,
                                            std::span<const double> t_samples) {
  const auto& tol = map.tolerance();
  auto convex = midpoint_convexity(map, grid);
  if (!convex.holds()) {
    auto r = not_applicable("quasi_homogeneity", tol, "composed map is not convex");
    r.worst_case = convex.worst_case;
    return r;
  }
  Tracker t("quasi_homogeneity", tol);
  for (const auto& s : map.samples(grid)) {
    for (double k : t_samples) {
      if (k < 1) throw ParameterError("quasi-homogeneity: t samples must be >= 1");
      double w = k * s.u;
      if (!std::isfinite(w)) continue;
      double hw = map(w);
      double bound = k * s.h;
      t.offer(hw - bound, bound, {{"t", k}, {"u", s.u}, {"h_tu", hw}, {"t_h", bound}});
    }
  }
  return t.finish();
}

CriterionReport ratio_criterion(const Generator& s1, const Generator& s2,
                                const IntervalGrid& grid, const ToleranceProfile& tol) {
  Tracker t("ratio", tol);
  double prev = std::numeric_limits<double>::quiet_NaN();
  double prev_x = 0;
  for (double x : interior_abscissae(grid)) {
    double a = s1.eval(x).to_double(), b = s2.eval(x).to_double();
    if (!std::isfinite(a) || !std::isfinite(b) || b <= 0) continue;
    double r = a / b;
    if (!std::isnan(prev))
      t.offer(prev - r, prev, {{"x_lo", prev_x}, {"x_hi", x}, {"ratio_lo", prev}, {"ratio_hi", r}});
    prev = r;
    prev_x = x;
  }
  return t.finish();
}

CriterionReport ratio_profile_criterion(const ComposedMap& map, const IntervalGrid& grid) {
  Tracker t("ratio_profile", map.tolerance());
  double prev = std::numeric_limits<double>::quiet_NaN();
  double prev_u = 0;
  for (const auto& s : map.samples(grid)) {
    if (s.u <= 0) continue;
    double phi = s.h / s.u;
    if (!std::isnan(prev))
      t.offer(phi - prev, prev, {{"u_lo", prev_u}, {"u_hi", s.u}, {"phi_lo", prev}, {"phi_hi", phi}});
    prev = phi;
    prev_u = s.u;
  }
  return t.finish();
}

CriterionReport derivative_ratio_criterion(const Generator& s1, const Generator& s2,
                                           const IntervalGrid& grid,
                                           const ToleranceProfile& tol) {
  const char* name = "derivative_ratio";
  bool proper = !s1.is_strict() && !s2.is_strict();
  if (!proper && !(s1.is_strict() && s2.is_strict()))
    return not_applicable(name, tol, "mixed strict/proper pair");
  Generator g1 = proper ? normalize(s1) : s1;
  Generator g2 = proper ? normalize(s2) : s2;

  std::vector<double> xs;
  for (double x : grid.with_tail())
    if (x >= 0.01 && x <= 0.99) xs.push_back(x);
  if (xs.size() < 3) return not_applicable(name, tol, "too few interior samples");

  Tracker t(name, tol);
  double prev = std::numeric_limits<double>::quiet_NaN();
  double prev_x = 0;
  for (double x : xs) {
    double d1 = derivative(g1, x, tol), d2 = derivative(g2, x, tol);
    if (!std::isfinite(d1) || !std::isfinite(d2) || d1 >= 0 || d2 >= 0)
      return not_applicable(name, tol, "derivative not negative at x = " + fmt(x));
    double q = d1 / d2;
    if (!std::isnan(prev))
      t.offer(prev - q, prev, {{"x_lo", prev_x}, {"x_hi", x}, {"q_lo", prev}, {"q_hi", q}});
    prev = q;
    prev_x = x;
  }
  if (t.failed() || !proper) return t.finish();

  Tracker side(name, tol);
  for (double x : interior_abscissae(grid)) {
    double a = g1.eval(x).to_double(), b = g2.eval(x).to_double();
    if (std::isfinite(a) && std::isfinite(b))
      side.offer(a - b, b, {{"x", x}, {"s1", a}, {"s2", b}});
  }
  auto r = side.finish("side condition s1 <= s2 on the normalized pair");
  if (r.fails()) return r;
  return t.finish("derivative ratio non-decreasing; s1 <= s2 on the normalized pair");
}

std::function<double(double)> product_isomorphism(const TSubnorm& t) {
  Generator g = t.generator();
  return [g](double x) { return std::exp(-g.eval(x).to_double()); };
}

std::function<double(double)> submultiplicative_map(const TSubnorm& s, const TSubnorm& t) {
  LogMap h = log_map(s, t);
  return [h](double u) {
    if (!(u > 0 && u <= 1)) throw DomainError("submultiplicative map: u outside (0,1]");
    return h(-std::log(u));
  };
}

CriterionReport strict_dominance_test(const TSubnorm& s, const TSubnorm& t,
                                      const IntervalGrid& grid) {
  const auto& tol = s.tolerance();
  if (!t.is_strict())
    return not_applicable("strict_dominance", tol, "reference is not a strict t-norm");
  LogMap h = log_map(s, t);
  auto as = log_samples(t, grid);
  std::vector<double> hs;
  for (double a : as) hs.push_back(h(a));

  Tracker tr("strict_dominance", tol);
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (std::size_t j = i; j < as.size(); ++j) {
      double w = as[i] + as[j];
      double gw = h(w);
      double sum = hs[i] + hs[j];
      tr.offer(gw - sum, sum,
               {{"u", std::exp(-as[i])}, {"v", std::exp(-as[j])}, {"g_uv", gw}, {"sum_g", sum}});
    }
  }
  return tr.finish();
}

CriterionReport logarithmic_equality_test(const TSubnorm& s, const TSubnorm& t,
                                          const IntervalGrid& grid) {
  const auto& tol = s.tolerance();
  if (!t.is_strict())
    return not_applicable("logarithmic_equality", tol, "reference is not a strict t-norm");
  LogMap h = log_map(s, t);
  auto as = log_samples(t, grid);
  std::vector<double> positive;
  for (double a : as)
    if (a > 0) positive.push_back(a);
  if (positive.empty()) return not_applicable("logarithmic_equality", tol, "no samples");
  double a0 = positive[positive.size() / 2];
  double c = h(a0) / a0;
  Tracker tr("logarithmic_equality", tol);
  for (double a : as) {
    double g = h(a), fit = c * a;
    tr.offer(std::abs(g - fit), std::max(g, fit), {{"u", std::exp(-a)}, {"g", g}, {"fit", fit}});
  }
  auto r = tr.finish();
  if (!(c > 0)) {
    r.verdict = CriterionVerdict::fails;
    r.notes = "fitted constant is not positive";
  }
  r.estimate = c;
  return r;
}

std::optional<PowerWitness> power_witness(const BinaryOperator& s, const BinaryOperator& t,
                                          double x, int n_max) {
  double xs = x, xt = x;
  for (int n = 2; n <= n_max; ++n) {
    xs = s(xs, x);
    xt = t(xt, x);
    if (xs <= 0) return std::nullopt;
    if (xt == 0) return PowerWitness{x, n, xt, xs};
  }
  return std::nullopt;
}

// Smallest n wins, ties go to the largest x.
CriterionReport nilpotent_guard(const TSubnorm& s, const BinaryOperator& t_nil,
                                const IntervalGrid& grid) {
  const auto& tol = s.tolerance();
  if (!t_nil.is_nilpotent_fixture())
    return not_applicable("nilpotent_guard", tol, "reference is not a nilpotent fixture");
  auto op = s.as_operator();
  std::optional<PowerWitness> best;
  for (double x : grid.points()) {
    if (x >= 1) continue;
    auto w = power_witness(op, t_nil, x, best ? best->n : 10000);
    if (w && (!best || w->n <= best->n)) best = w;
  }
  CriterionReport r;
  r.criterion = "nilpotent_guard";
  r.margin = tol.verdict_margin;
  if (!best) {
    r.verdict = CriterionVerdict::holds;
    r.notes = "no power witness found on the grid";
    return r;
  }
  r.verdict = CriterionVerdict::fails;
  r.worst_case = SamplePoint{{{"x", best->x},
                              {"n", static_cast<double>(best->n)},
                              {"t_power", best->t_power},
                              {"s_power", best->s_power}},
                             best->s_power};
  r.notes = s.label() + " is not below " + t_nil.label();
  return r;
}

CriterionReport proper_never_dominates_tnorm_check(const TSubnorm& s, const TSubnorm& t,
                                                   const IntervalGrid& grid) {
  const auto& tol = s.tolerance();
  const char* name = "proper_never_dominates_tnorm";
  if (!s.is_proper()) return not_applicable(name, tol, "lhs is not a proper t-subnorm");
  if (!t.is_strict()) return not_applicable(name, tol, "rhs is not a strict t-norm");
  Tracker tr(name, tol);
  for (double x : grid.points()) {
    double sv = s(x, 1), tv = t(x, 1);
    tr.offer(tv - sv, tv, {{"x", x}, {"s_value", sv}, {"t_value", tv}});
  }
  auto r = tr.finish(t.label() + " is not below " + s.label());
  if (!r.fails()) r.notes = "no witness: S(x,1) = x on the grid";
  return r;
}

namespace {

constexpr std::pair<Criterion, const char*> kCriteria[] = {
    {Criterion::subadditivity, "subadditivity"},
    {Criterion::equality, "equality"},
    {Criterion::concavity, "concavity"},
    {Criterion::quasi_homogeneity, "quasi_homogeneity"},
    {Criterion::ratio, "ratio"},
    {Criterion::ratio_profile, "ratio_profile"},
    {Criterion::derivative_ratio, "derivative_ratio"},
    {Criterion::strict_dominance, "strict_dominance"},
    {Criterion::logarithmic_equality, "logarithmic_equality"},
};

}  // namespace

const char* to_string(Criterion c) {
  for (const auto& [k, name] : kCriteria)
    if (k == c) return name;
  return "?";
}

Criterion criterion_from_string(std::string_view s) {
  for (const auto& [k, name] : kCriteria)
    if (s == name) return k;
  throw ParseError("unknown criterion '" + std::string(s) + "'");
}

CriterionReport run_criterion(Criterion c, const TSubnorm& lhs, const TSubnorm& rhs,
                              const IntervalGrid& grid) {
  ComposedMap map(lhs.generator(), rhs.generator(), lhs.tolerance());
  switch (c) {
    case Criterion::subadditivity: return subadditivity_test(map, grid);
    case Criterion::equality: return equality_test(map, grid);
    case Criterion::concavity: return concavity_criterion(map, grid);
    case Criterion::quasi_homogeneity: return quasi_homogeneity_criterion(map, grid);
    case Criterion::ratio:
      return ratio_criterion(lhs.generator(), rhs.generator(), grid, lhs.tolerance());
    case Criterion::ratio_profile: return ratio_profile_criterion(map, grid);
    case Criterion::derivative_ratio:
      return derivative_ratio_criterion(lhs.generator(), rhs.generator(), grid,
                                        lhs.tolerance());
    case Criterion::strict_dominance: return strict_dominance_test(lhs, rhs, grid);
    case Criterion::logarithmic_equality: return logarithmic_equality_test(lhs, rhs, grid);
  }
  throw ParameterError("unknown criterion");
}

const char* to_string(Direction d) {
  switch (d) {
    case Direction::up: return "up";
    case Direction::down: return "down";
    case Direction::flat: return "flat";
    case Direction::none: return "none";
  }
  return "?";
}

namespace {

Direction oracle_direction(Relation r) {
  switch (r) {
    case Relation::dominated: return Direction::up;
    case Relation::dominates: return Direction::down;
    case Relation::equal: return Direction::flat;
    default: return Direction::none;
  }
}

}  // namespace

FamilyScanReport family_monotonicity_scan(const FamilySpec& family,
                                          std::span<const double> lambdas,
                                          Criterion criterion, const IntervalGrid& grid,
                                          const ToleranceProfile& tol) {
  if (lambdas.size() < 2) throw ParameterError("scan: need at least two parameter values");
  std::vector<TSubnorm> members;
  for (double l : lambdas) members.push_back(make_family(family.with("l", l), tol));

  FamilyScanReport report;
  report.family = family;
  report.criterion = criterion;
  report.all_agree = true;
  int ups = 0, downs = 0, flats = 0;
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    ScanStep step;
    step.lambda_from = lambdas[i];
    step.lambda_to = lambdas[i + 1];
    step.forward = run_criterion(criterion, members[i], members[i + 1], grid);
    step.backward = run_criterion(criterion, members[i + 1], members[i], grid);
    bool f = step.forward.holds(), b = step.backward.holds();
    step.criterion_direction = f && b ? Direction::flat
                               : f    ? Direction::up
                               : b    ? Direction::down
                                      : Direction::none;
    step.oracle = direct_compare(members[i].as_operator(), members[i + 1].as_operator(),
                                 grid, tol);
    step.oracle_direction = oracle_direction(step.oracle.relation);
    step.agrees = step.criterion_direction == step.oracle_direction;
    report.all_agree = report.all_agree && step.agrees;
    ups += step.oracle_direction == Direction::up;
    downs += step.oracle_direction == Direction::down;
    flats += step.oracle_direction == Direction::flat;
    report.steps.push_back(std::move(step));
  }
  int n = static_cast<int>(report.steps.size());
  report.chain = ups == n     ? "increasing"
                 : downs == n ? "decreasing"
                 : flats == n ? "constant"
                              : "mixed";
  return report;
}

ComparisonVerdict compare(const BinaryOperator& lhs, const BinaryOperator& rhs,
                          const IntervalGrid& grid, const ToleranceProfile& tol) {
  ComparisonVerdict oracle = direct_compare(lhs, rhs, grid, tol);
  const TSubnorm* a = lhs.generated();
  const TSubnorm* b = rhs.generated();
  if (!a || !b) {
    if (lhs.is_nilpotent_fixture() != rhs.is_nilpotent_fixture() && (a || b))
      oracle.notes = "generated operator against a nilpotent fixture";
    return oracle;
  }

  constexpr Criterion kSufficient[] = {Criterion::ratio, Criterion::ratio_profile,
                                       Criterion::concavity, Criterion::derivative_ratio,
                                       Criterion::subadditivity};
  std::string decided;
  std::string contradictions;
  auto note = [&](const std::string& what) {
    contradictions += (contradictions.empty() ? "" : "; ") + what;
  };

  if (run_criterion(Criterion::equality, *a, *b, grid).holds()) {
    if (oracle.relation == Relation::equal) decided = "equality";
    else note("equality holds but the grid disagrees");
  }
  for (int dir = 0; dir < 2 && decided.empty(); ++dir) {
    const TSubnorm& lo = dir == 0 ? *a : *b;
    const TSubnorm& hi = dir == 0 ? *b : *a;
    Relation expected = dir == 0 ? Relation::dominated : Relation::dominates;
    for (Criterion c : kSufficient) {
      if (!run_criterion(c, lo, hi, grid).holds()) continue;
      if (oracle.relation == expected || oracle.relation == Relation::equal) {
        decided = to_string(c);
        break;
      }
      note(std::string(to_string(c)) + (dir == 0 ? " certifies lhs <= rhs" : " certifies rhs <= lhs") +
           " but the grid disagrees");
      break;
    }
  }
  if (decided.empty() && oracle.relation == Relation::incomparable) {
    bool fwd = run_criterion(Criterion::subadditivity, *a, *b, grid).fails();
    bool bwd = run_criterion(Criterion::subadditivity, *b, *a, grid).fails();
    if (fwd && bwd) decided = "subadditivity";
  }
  if (!decided.empty()) oracle.criterion = decided;
  oracle.notes = contradictions;
  return oracle;
}

}  // namespace subnorm
