#include "subnorm/reports.hpp"

#include <stdexcept>

#include <json.hpp>

#include "subnorm/errors.hpp"

namespace subnorm {

using nlohmann::ordered_json;

namespace {

constexpr const char* kRelations[] = {"dominates", "dominated", "equal", "incomparable",
                                      "unknown"};
constexpr const char* kVerdicts[] = {"holds", "fails", "not_applicable"};

ordered_json parse_record(std::string_view record) {
  try {
    auto j = ordered_json::parse(record);
    if (!j.is_object()) throw ParseError("record is not an object");
    return j;
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("record: ") + e.what());
  }
}

double number_or(const ordered_json& j, const char* key, double fallback) {
  return j.contains(key) && j[key].is_number() ? j[key].get<double>() : fallback;
}

std::string string_or(const ordered_json& j, const char* key) {
  return j.contains(key) && j[key].is_string() ? j[key].get<std::string>() : "";
}

}  // namespace

const char* to_string(Relation r) { return kRelations[static_cast<int>(r)]; }
const char* to_string(CriterionVerdict v) { return kVerdicts[static_cast<int>(v)]; }

Relation relation_from_string(std::string_view s) {
  for (int i = 0; i < 5; ++i)
    if (s == kRelations[i]) return static_cast<Relation>(i);
  throw ParseError("unknown relation '" + std::string(s) + "'");
}

CriterionVerdict verdict_from_string(std::string_view s) {
  for (int i = 0; i < 3; ++i)
    if (s == kVerdicts[i]) return static_cast<CriterionVerdict>(i);
  throw ParseError("unknown verdict '" + std::string(s) + "'");
}

double SamplePoint::at(std::string_view name) const {
  for (const auto& [key, value] : coords)
    if (key == name) return value;
  throw std::out_of_range("sample point has no coordinate '" + std::string(name) + "'");
}

std::string to_record(const ComparisonVerdict& v) {
  ordered_json j;
  j["criterion"] = v.criterion;
  j["verdict"] = to_string(v.relation);
  j["witnesses"] = ordered_json::array();
  for (const auto& w : v.witnesses)
    j["witnesses"].push_back({{"x", w.x}, {"y", w.y}, {"lhs", w.lhs}, {"rhs", w.rhs}});
  j["margin"] = v.margin;
  j["sup_difference"] = v.sup_difference;
  j["notes"] = v.notes;
  return j.dump();
}

std::string to_record(const CriterionReport& r) {
  ordered_json j;
  j["criterion"] = r.criterion;
  j["verdict"] = to_string(r.verdict);
  j["witnesses"] = ordered_json::array();
  if (r.worst_case) {
    ordered_json w;
    for (const auto& [key, value] : r.worst_case->coords) w[key] = value;
    w["residual"] = r.worst_case->residual;
    j["witnesses"].push_back(w);
  }
  j["margin"] = r.margin;
  if (r.estimate) j["estimate"] = *r.estimate;
  j["notes"] = r.notes;
  return j.dump();
}

ComparisonVerdict verdict_from_record(std::string_view record) {
  auto j = parse_record(record);
  ComparisonVerdict v;
  v.criterion = string_or(j, "criterion");
  v.relation = relation_from_string(string_or(j, "verdict"));
  if (j.contains("witnesses")) {
    for (const auto& w : j["witnesses"])
      v.witnesses.push_back({number_or(w, "x", 0), number_or(w, "y", 0),
                             number_or(w, "lhs", 0), number_or(w, "rhs", 0)});
  }
  v.margin = number_or(j, "margin", 0);
  v.sup_difference = number_or(j, "sup_difference", 0);
  v.notes = string_or(j, "notes");
  return v;
}

CriterionReport report_from_record(std::string_view record) {
  auto j = parse_record(record);
  CriterionReport r;
  r.criterion = string_or(j, "criterion");
  r.verdict = verdict_from_string(string_or(j, "verdict"));
  if (j.contains("witnesses") && !j["witnesses"].empty()) {
    SamplePoint p;
    for (const auto& [key, value] : j["witnesses"][0].items()) {
      if (key == "residual") {
        p.residual = value.is_number() ? value.get<double>() : 0;
      } else if (value.is_number()) {
        p.coords.emplace_back(key, value.get<double>());
      }
    }
    r.worst_case = p;
  }
  r.margin = number_or(j, "margin", 0);
  if (j.contains("estimate") && j["estimate"].is_number())
    r.estimate = j["estimate"].get<double>();
  r.notes = string_or(j, "notes");
  return r;
}

}  // namespace subnorm
