#include "subnorm/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include <json.hpp>

#include "subnorm/errors.hpp"

namespace subnorm {

namespace {

struct FamilyName {
  const char* name;
  Family family;
};

constexpr FamilyName kNames[] = {
    {"hamacher0", Family::hamacher0},
    {"product", Family::product},
    {"half_product", Family::half_product},
    {"rational", Family::rational},
    {"reciprocal_minus_x", Family::reciprocal_minus_x},
    {"aa_tnorm", Family::aa_tnorm},
    {"dombi_sub", Family::dombi_sub},
    {"aa_sub", Family::aa_sub},
    {"ss_sub", Family::ss_sub},
    {"log_sub", Family::log_sub},
    {"yager", Family::yager},
    {"lukasiewicz", Family::lukasiewicz},
    // aliases
    {"aa", Family::aa_tnorm},
    {"dombi", Family::dombi_sub},
    {"ss", Family::ss_sub},
    {"log", Family::log_sub},
};

std::vector<std::string> required_keys(Family f) {
  switch (f) {
    case Family::rational: return {"a"};
    case Family::aa_tnorm:
    case Family::yager: return {"l"};
    case Family::dombi_sub:
    case Family::aa_sub:
    case Family::ss_sub:
    case Family::log_sub: return {"a", "l"};
    default: return {};
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double parse_number(std::string_view text) {
  std::string s(text);
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("not a number: '" + s + "'");
}

void require(bool ok, const FamilySpec& spec, const char* what) {
  if (!ok) throw ParameterError(spec.to_string() + ": requires " + what);
}

}  // namespace

const char* to_string(Family f) {
  for (const auto& n : kNames)
    if (n.family == f) return n.name;
  return "?";
}

FamilySpec FamilySpec::parse(std::string_view text) {
  auto colon = text.find(':');
  std::string name(text.substr(0, colon));
  FamilySpec spec;
  auto it = std::find_if(std::begin(kNames), std::end(kNames),
                         [&](const FamilyName& n) { return name == n.name; });
  if (it == std::end(kNames)) throw ParseError("unknown operator '" + name + "'");
  spec.family = it->family;
  if (colon == std::string_view::npos) return spec;

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected key=value, got '" + std::string(item) + "'");
    std::string key(item.substr(0, eq));
    if (key == "lambda") key = "l";
    if (key != "a" && key != "l") throw ParseError("unknown parameter '" + key + "'");
    auto keys = required_keys(spec.family);
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ParseError(std::string(subnorm::to_string(spec.family)) + " takes no parameter '" +
                       key + "'");
    spec.parameters[key] = parse_number(item.substr(eq + 1));
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out = subnorm::to_string(family);
  char sep = ':';
  for (const auto& key : required_keys(family)) {
    auto it = parameters.find(key);
    if (it == parameters.end()) continue;
    out += sep;
    out += key + "=" + fmt(it->second);
    sep = ',';
  }
  return out;
}

double FamilySpec::param(const std::string& key) const {
  auto it = parameters.find(key);
  if (it == parameters.end())
    throw ParameterError(to_string() + ": missing parameter '" + key + "'");
  return it->second;
}

FamilySpec FamilySpec::with(const std::string& key, double value) const {
  FamilySpec out = *this;
  out.parameters[key] = value;
  return out;
}

void FamilySpec::validate() const {
  for (const auto& key : required_keys(family)) param(key);
  switch (family) {
    case Family::rational: {
      double a = param("a");
      require(a >= 0 && a < 1, *this, "0 <= a < 1");
      break;
    }
    case Family::aa_tnorm:
    case Family::yager:
      require(param("l") > 0, *this, "l > 0");
      break;
    case Family::dombi_sub:
      require(param("a") >= 0 && param("a") < 1, *this, "0 <= a < 1");
      require(param("l") > 0, *this, "l > 0");
      break;
    case Family::aa_sub:
      require(param("a") > 0 && param("a") < 1, *this, "0 < a < 1");
      require(param("l") > 0, *this, "l > 0");
      break;
    case Family::ss_sub:
      require(param("a") > 0 && param("a") < 1, *this, "0 < a < 1");
      require(param("l") < 0, *this, "l < 0");
      break;
    case Family::log_sub:
      require(param("a") > 0 && param("a") <= 1, *this, "0 < a <= 1");
      require(param("l") > 0, *this, "l > 0");
      break;
    default:
      break;
  }
  for (const auto& [key, value] : parameters)
    require(std::isfinite(value), *this, "finite parameters");
}

std::string FamilySpec::to_record() const {
  nlohmann::ordered_json j;
  j["label"] = to_string();
  j["family"] = subnorm::to_string(family);
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : parameters) j["parameters"][key] = value;
  return j.dump();
}

FamilySpec FamilySpec::from_record(std::string_view record) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(record);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("family record: ") + e.what());
  }
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw ParseError("family record: missing 'family'");
  FamilySpec spec = parse(j["family"].get<std::string>());
  if (j.contains("parameters")) {
    for (const auto& [key, value] : j["parameters"].items()) {
      if (!value.is_number()) throw ParseError("family record: non-numeric " + key);
      spec.parameters[key] = value.get<double>();
    }
  }
  return spec;
}

Generator family_generator(const FamilySpec& spec) {
  spec.validate();
  const std::string label = spec.to_string();
  switch (spec.family) {
    case Family::hamacher0:
      return Generator(
          label, [](double x) { return (1 - x) / x; }, 0.0,
          [](double u) { return 1 / (1 + u); });
    case Family::product:
      return Generator(
          label, [](double x) { return -std::log(x); }, 0.0,
          [](double u) { return std::exp(-u); });
    case Family::half_product:
      return Generator(
          label, [](double x) { return 1 - std::log2(x); }, 1.0,
          [](double u) { return std::exp2(1 - u); });
    case Family::rational: {
      double a = spec.param("a");
      return Generator(
          label, [a](double x) { return (1 / x - a) / (1 - a); }, 1.0,
          [a](double u) { return 1 / (a + (1 - a) * u); });
    }
    case Family::reciprocal_minus_x:
      return Generator(
          label, [](double x) { return 1 / x - x; }, 0.0,
          [](double u) { return 2 / (std::hypot(u, 2.0) + u); });
    case Family::aa_tnorm: {
      double l = spec.param("l");
      return Generator(
          label, [l](double x) { return std::pow(-std::log(x), l); }, 0.0,
          [l](double u) { return std::exp(-std::pow(u, 1 / l)); });
    }
    case Family::dombi_sub: {
      double a = spec.param("a"), l = spec.param("l");
      return Generator(
          label, [a, l](double x) { return std::pow((1 / x - a) / (1 - a), l); }, 1.0,
          [a, l](double u) { return 1 / (a + (1 - a) * std::pow(u, 1 / l)); });
    }
    case Family::aa_sub: {
      double a = spec.param("a"), l = spec.param("l");
      double la = -std::log(a);
      return Generator(
          label,
          [la, l](double x) { return std::pow((la - std::log(x)) / la, l); }, 1.0,
          [a, la, l](double u) { return std::exp(-la * std::pow(u, 1 / l)) / a; });
    }
    case Family::ss_sub: {
      double a = spec.param("a"), l = spec.param("l");
      double al = std::pow(a, l);
      return Generator(
          label, [a, l, al](double x) { return (1 - std::pow(a * x, l)) / (1 - al); },
          1.0, [a, l, al](double u) { return std::pow(1 + u * (al - 1), 1 / l) / a; });
    }
    case Family::log_sub: {
      double a = spec.param("a"), l = spec.param("l");
      double la = -std::log(a);
      return Generator(
          label, [la, l](double x) { return std::pow(la - std::log(x), l); },
          std::pow(la, l),
          [a, l](double u) { return std::exp(-std::pow(u, 1 / l)) / a; });
    }
    case Family::yager:
    case Family::lukasiewicz:
      break;
  }
  throw ParameterError(label + " has no additive generator in this library");
}

TSubnorm make_family(const FamilySpec& spec, const ToleranceProfile& tol) {
  return TSubnorm::from_generator(family_generator(spec), tol);
}

BinaryOperator make_operator(const FamilySpec& spec, const ToleranceProfile& tol) {
  spec.validate();
  if (spec.family == Family::yager) return yager(spec.param("l"));
  if (spec.family == Family::lukasiewicz) return lukasiewicz();
  return make_family(spec, tol).as_operator();
}

BinaryOperator yager(double lambda) {
  if (!(lambda > 0)) throw ParameterError("yager: requires l > 0");
  return BinaryOperator(
      "yager:l=" + fmt(lambda),
      [lambda](double x, double y) {
        double r = std::pow(std::pow(1 - x, lambda) + std::pow(1 - y, lambda),
                            1 / lambda);
        return std::max(0.0, 1 - r);
      },
      true);
}

BinaryOperator lukasiewicz() {
  return BinaryOperator(
      "lukasiewicz", [](double x, double y) { return std::max(0.0, x + y - 1); }, true);
}

std::vector<FamilySpec> standard_catalog() {
  const char* specs[] = {
      "hamacher0",          "product",         "half_product",
      "rational:a=0.5",     "rational:a=0.7",  "reciprocal_minus_x",
      "aa_tnorm:l=2",       "dombi_sub:a=0.6,l=0.5", "dombi_sub:a=0.6,l=2",
      "aa_sub:a=0.5,l=2",   "ss_sub:a=0.5,l=-2",     "ss_sub:a=0.5,l=-1",
      "log_sub:a=0.5,l=1",  "log_sub:a=0.5,l=2",
  };
  std::vector<FamilySpec> out;
  for (const char* s : specs) out.push_back(FamilySpec::parse(s));
  return out;
}

}  // namespace subnorm
