#include "subnorm/fixtures.hpp"

#include <cmath>
#include <utility>

#include "subnorm/errors.hpp"
#include "subnorm/families.hpp"

namespace subnorm {

Generator outer_composition(std::string label, std::function<double(double)> outer,
                            const Generator& base) {
  double boundary = outer(base.boundary_at_one());
  Generator::Rule rule = [outer, base](double x) {
    double u = base.eval(x).to_double();
    return std::isinf(u) ? u : outer(u);
  };
  return Generator(std::move(label), std::move(rule), boundary);
}

Generator fixture_base() {
  return family_generator(FamilySpec::parse("rational:a=0.5"));
}

Generator psi_construction(const Generator& base) {
  return outer_composition(
      "psi", [](double u) { return u <= 2 ? -u * u + 4 * u - 2 : u; }, base);
}

Generator steep_affine_fixture(double k, const Generator& base) {
  if (!(k > 1)) throw ParameterError("steep affine fixture: requires k > 1");
  return outer_composition(
      "steep_affine", [k](double u) { return k * (u - 1) + 1; }, base);
}

Generator broken_line_fixture(const Generator& base) {
  return outer_composition(
      "broken_line", [](double u) { return u <= 2 ? 2 * u - 1 : u / 2 + 2; }, base);
}

Generator log_exp_fixture(const Generator& base) {
  // ln(2e^u - e) rewritten so large u does not overflow.
  return outer_composition(
      "log_exp", [](double u) { return u + std::log(2 - std::exp(1 - u)); }, base);
}

Generator square_fixture(const Generator& base) {
  return outer_composition("square", [](double u) { return u * u; }, base);
}

FixtureSet FixtureSet::standard() {
  FixtureSet set;
  set.add("psi", [] { return psi_construction(fixture_base()); });
  set.add("steep_affine", [] { return steep_affine_fixture(2.0, fixture_base()); });
  set.add("broken_line", [] { return broken_line_fixture(fixture_base()); });
  set.add("log_exp", [] { return log_exp_fixture(fixture_base()); });
  set.add("square", [] { return square_fixture(fixture_base()); });
  return set;
}

bool FixtureSet::contains(const std::string& name) const {
  return entries_.count(name) > 0;
}

Generator FixtureSet::get(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw MissingFixtureError("missing fixture '" + name + "'");
  return it->second();
}

void FixtureSet::remove(const std::string& name) { entries_.erase(name); }

void FixtureSet::add(std::string name, Factory factory) {
  entries_[std::move(name)] = std::move(factory);
}

std::vector<std::string> FixtureSet::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : entries_) out.push_back(name);
  return out;
}

}  // namespace subnorm
