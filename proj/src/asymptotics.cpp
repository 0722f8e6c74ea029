#include "subnorm/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "subnorm/errors.hpp"
#include "subnorm/families.hpp"
#include "subnorm/operators.hpp"
#include "subnorm/order.hpp"

namespace subnorm {

namespace {

constexpr double kRelWindow = 1e-3;

bool close_rel(double a, double b) {
  return std::abs(a - b) <= kRelWindow * std::max({std::abs(a), std::abs(b), 1e-3});
}

// Classifies the probe tail: converged, bounded but slow, or divergent.
void settle(SlopeEstimate& e) {
  const auto& seq = e.sequence;
  if (seq.size() < 3) {
    e.applicable = false;
    e.note = "too few finite probes";
    return;
  }
  double r0 = seq[seq.size() - 3].second;
  double r1 = seq[seq.size() - 2].second;
  double r2 = seq.back().second;
  if (close_rel(r2, r1)) {
    e.converged = true;
    e.value = std::max(r2, 0.0);
    return;
  }
  double d1 = r1 - r0, d2 = r2 - r1;
  if (d2 <= 0 && d1 <= 0) {
    e.value = std::max(r2, 0.0);
    e.note = "monotone_bounded";
  } else if (d2 > 0 && d1 > 0 && d2 >= 0.9 * d1) {
    e.value = kInf;
    e.note = "divergent";
  } else {
    e.value = std::max(r2, 0.0);
    e.note = "undetermined";
  }
}

std::vector<double> profile(const ComposedMap& map, const IntervalGrid& grid) {
  std::vector<double> phi;
  for (const auto& s : map.samples(grid))
    if (s.u > 0) phi.push_back(s.h / s.u);
  return phi;
}

Section4Branch branch(CriterionReport report, bool oracle) {
  Section4Branch b;
  b.oracle_dominated_or_equal = oracle;
  b.agrees = report.verdict == CriterionVerdict::not_applicable ||
             report.holds() == oracle;
  b.report = std::move(report);
  return b;
}

CriterionReport section_report(const char* name, CriterionVerdict v, std::string notes,
                               const ToleranceProfile& tol) {
  CriterionReport r;
  r.criterion = name;
  r.verdict = v;
  r.margin = tol.verdict_margin;
  r.notes = std::move(notes);
  return r;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string to_record(const SlopeEstimate& e) {
  nlohmann::ordered_json j;
  if (e.value.is_infinite()) j["value"] = "INF";
  else j["value"] = e.value.value();
  j["converged"] = e.converged;
  j["applicable"] = e.applicable;
  j["note"] = e.note;
  j["sequence"] = nlohmann::ordered_json::array();
  for (const auto& [probe, ratio] : e.sequence) j["sequence"].push_back({probe, ratio});
  if (e.sample_extremum) j["sample_extremum"] = *e.sample_extremum;
  if (e.extremum_agrees) j["extremum_agrees"] = *e.extremum_agrees;
  return j.dump();
}

SlopeEstimate asymptotic_slope_A(const ComposedMap& map, const IntervalGrid& grid) {
  SlopeEstimate e;
  for (int k = 1; k <= 12; ++k) {
    double t = std::pow(10.0, -k);
    double a = map.lhs().eval(t).to_double(), b = map.rhs().eval(t).to_double();
    if (std::isfinite(a) && std::isfinite(b) && b > 0) e.sequence.emplace_back(t, a / b);
  }
  settle(e);
  if (!e.applicable) return e;
  if (e.converged) e.note = e.value.value() < kRelWindow ? "order_lower" : "same_order";

  auto phi = profile(map, grid);
  for (const auto& [_, r] : e.sequence) phi.push_back(r);
  double inf = *std::min_element(phi.begin(), phi.end());
  e.sample_extremum = inf;
  e.extremum_agrees = e.value.is_finite() && close_rel(e.value.value(), inf);
  return e;
}

SlopeEstimate small_slope_B(const ComposedMap& map, const IntervalGrid& grid) {
  SlopeEstimate e;
  if (map.both_strict()) {
    for (int k = 1; k <= 10; ++k) {
      double u = std::pow(10.0, -k);
      double h = map(u);
      if (std::isfinite(h)) e.sequence.emplace_back(u, h / u);
    }
    settle(e);
    if (!e.applicable) return e;
    auto phi = profile(map, grid);
    for (const auto& [_, r] : e.sequence) phi.push_back(r);
    double sup = *std::max_element(phi.begin(), phi.end());
    e.sample_extremum = sup;
    e.extremum_agrees = e.value.is_finite() && close_rel(e.value.value(), sup);
    return e;
  }
  if (map.both_proper()) {
    auto phi = profile(map.normalized(), grid);
    double sup = *std::max_element(phi.begin(), phi.end());
    e.value = sup;
    e.converged = true;
    e.sample_extremum = sup;
    e.extremum_agrees = true;
    e.note = sup <= 2 ? "bounded_by_2" : "exceeds_2";
    return e;
  }
  e.applicable = false;
  e.value = kInf;
  e.note = "mixed strict/proper pair";
  return e;
}

CriterionReport linear_envelope_check(const ComposedMap& map, double a, double b,
                                      const IntervalGrid& grid) {
  const auto& tol = map.tolerance();
  if (!(std::isfinite(a) && std::isfinite(b) && a <= b))
    throw ParameterError("linear envelope: requires finite A <= B");
  CriterionReport r = section_report("linear_envelope", CriterionVerdict::holds, "", tol);
  double worst = -std::numeric_limits<double>::infinity();
  bool above = false;
  for (const auto& s : map.samples(grid)) {
    if (s.u <= 0) continue;
    double lo = a * s.u - s.h, hi = s.h - b * s.u;
    double excess = std::max(lo, hi);
    double scaled = excess / std::max(1.0, std::abs(s.h));
    bool bad = excess > tol.slack(s.h);
    if (bad && !r.fails()) {
      r.verdict = CriterionVerdict::fails;
      worst = -std::numeric_limits<double>::infinity();
    }
    if ((bad || !r.fails()) && scaled > worst) {
      worst = scaled;
      r.worst_case = SamplePoint{{{"u", s.u}, {"h", s.h}, {"a_u", a * s.u}, {"b_u", b * s.u}},
                                 excess};
      above = hi >= lo;
    }
  }
  if (r.fails() && above) r.notes = "h(u)/u exceeds B; no linear upper envelope with this B";
  return r;
}

Section4Report section4_equivalences(const ComposedMap& map, const IntervalGrid& grid) {
  const auto& tol = map.tolerance();
  bool oracle = dominated_or_equal(
      direct_compare(TSubnorm::from_generator(map.lhs(), tol).as_operator(),
                     TSubnorm::from_generator(map.rhs(), tol).as_operator(), grid, tol)
          .relation);
  const bool lhs_below_proper = map.lhs().is_strict() && !map.rhs().is_strict();
  ComposedMap m = map.both_proper() ? map.normalized() : map;
  auto phi = profile(m, grid);
  Section4Report out;

  // (a) convex profile: dominance iff A is finite and equals inf phi.
  {
    auto samples = m.samples(grid);
    bool convex = !phi.empty() && !lhs_below_proper;
    for (std::size_t i = 0; convex && i < samples.size(); ++i) {
      for (std::size_t j = i + 2; convex && j < samples.size(); ++j) {
        const auto& p = samples[i];
        const auto& q = samples[j];
        if (p.u <= 0) continue;
        double mid = p.u + (q.u - p.u) / 2;
        double pm = m(mid) / mid;
        double chord = (p.h / p.u + q.h / q.u) / 2;
        if (pm - chord > tol.slack(chord)) convex = false;
      }
    }
    CriterionReport r;
    if (!convex) {
      r = section_report("convex_profile", CriterionVerdict::not_applicable,
                         "h(u)/u is not convex", tol);
    } else {
      auto a = asymptotic_slope_A(m, grid);
      bool finite = a.applicable && a.value.is_finite() && a.note != "undetermined";
      bool predicted = finite && a.extremum_agrees.value_or(false);
      r = section_report("convex_profile",
                         predicted ? CriterionVerdict::holds : CriterionVerdict::fails,
                         "A = " + a.value.to_string() + (a.note.empty() ? "" : " (" + a.note + ")"),
                         tol);
      r.estimate = a.value.to_double();
    }
    out.convex_profile = branch(std::move(r), oracle);
  }

  // (b) strict rhs, phi non-increasing and bounded: dominance plus envelope.
  {
    CriterionReport r;
    if (!map.rhs().is_strict() || !map.lhs().is_strict()) {
      r = section_report("bounded_profile", CriterionVerdict::not_applicable,
                         map.rhs().is_strict() ? "h(u)/u unbounded near 0" : "rhs is not strict",
                         tol);
    } else if (!ratio_profile_criterion(m, grid).holds()) {
      r = section_report("bounded_profile", CriterionVerdict::not_applicable,
                         "h(u)/u is not non-increasing", tol);
    } else {
      auto b = small_slope_B(m, grid);
      if (!b.applicable || !b.value.is_finite() || !b.converged) {
        r = section_report("bounded_profile", CriterionVerdict::not_applicable,
                           "h(u)/u unbounded near 0", tol);
      } else {
        auto a = asymptotic_slope_A(m, grid);
        double av = a.value.is_finite() ? a.value.value() : 0.0;
        r = linear_envelope_check(m, std::min(av, b.value.value()), b.value.value(), grid);
        r.criterion = "bounded_profile";
        r.notes = "A = " + fmt(av) + ", B = " + fmt(b.value.value());
      }
    }
    out.bounded_profile = branch(std::move(r), oracle);
  }

  // (c) concave h with sup phi <= 1: dominance iff A <= phi <= 1.
  {
    CriterionReport r;
    double sup = phi.empty() ? INFINITY : *std::max_element(phi.begin(), phi.end());
    if (lhs_below_proper || phi.empty()) {
      r = section_report("concave_map", CriterionVerdict::not_applicable,
                         "strict lhs against proper rhs", tol);
    } else if (sup > 1 + tol.verdict_margin) {
      r = section_report("concave_map", CriterionVerdict::not_applicable,
                         "sup h(u)/u = " + fmt(sup) + " exceeds 1", tol);
    } else if (!midpoint_concavity(m, grid).holds()) {
      r = section_report("concave_map", CriterionVerdict::not_applicable, "h is not concave",
                         tol);
    } else {
      auto a = asymptotic_slope_A(m, grid);
      double inf = *std::min_element(phi.begin(), phi.end());
      bool within = a.value.is_finite() &&
                    inf >= a.value.value() - tol.slack(a.value.value()) - kRelWindow *
                                                 std::max(a.value.value(), 1e-3);
      r = section_report("concave_map",
                         within ? CriterionVerdict::holds : CriterionVerdict::fails,
                         "A = " + a.value.to_string() + ", inf phi = " + fmt(inf) +
                             ", sup phi = " + fmt(sup),
                         tol);
      r.estimate = a.value.to_double();
    }
    out.concave_map = branch(std::move(r), oracle);
  }
  return out;
}

}  // namespace subnorm
