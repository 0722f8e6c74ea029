#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subnorm/subnorm.hpp"

using namespace subnorm;

namespace {

enum Exit { kOk = 0, kRegression = 1, kParse = 2, kDomain = 3, kIo = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad number in list: '" + item + "'");
    }
  }
  return out;
}

int run_eval(const std::string& spec, double x, double y, const ToleranceProfile& tol) {
  auto op = parse_operator(spec, FixtureSet::standard(), tol);
  std::printf("%.12g\n", op(x, y));
  return kOk;
}

int run_compare(const std::string& lhs, const std::string& rhs, const std::string& criterion,
                int n, const ToleranceProfile& tol) {
  auto a = parse_operator(lhs, FixtureSet::standard(), tol);
  auto b = parse_operator(rhs, FixtureSet::standard(), tol);
  auto grid = IntervalGrid::uniform(static_cast<std::size_t>(n));
  if (criterion.empty()) {
    std::cout << to_record(compare(a, b, grid, tol)) << "\n";
    return kOk;
  }
  Criterion c = criterion_from_string(criterion);
  if (!a.generated() || !b.generated())
    throw ParameterError("criterion '" + criterion + "' needs generated operators");
  std::cout << to_record(run_criterion(c, *a.generated(), *b.generated(), grid)) << "\n";
  std::cout << to_record(direct_compare(a, b, grid, tol)) << "\n";
  return kOk;
}

int run_scan(const std::string& family, const std::string& lambdas,
             const std::string& criterion, int n, const ToleranceProfile& tol) {
  auto spec = FamilySpec::parse(family);
  auto values = parse_list(lambdas);
  auto report = family_monotonicity_scan(spec, values, criterion_from_string(criterion),
                                         IntervalGrid::uniform(static_cast<std::size_t>(n)), tol);
  std::cout << "family " << spec.to_string() << "\n";
  std::cout << "criterion " << to_string(report.criterion) << "\n";
  for (const auto& s : report.steps) {
    std::printf("l=%g -> l=%g: criterion %s, grid %s, %s\n", s.lambda_from, s.lambda_to,
                to_string(s.criterion_direction), to_string(s.oracle_direction),
                s.agrees ? "agree" : "DISAGREE");
  }
  std::cout << "chain " << report.chain << (report.all_agree ? "" : " (criterion disagrees)")
            << "\n";
  return kOk;
}

int run_surface(const std::string& spec, int n, const std::string& out,
                const ToleranceProfile& tol) {
  auto op = parse_operator(spec, FixtureSet::standard(), tol);
  if (out.empty() || out == "-") {
    write_surface(op, n, std::cout);
    return kOk;
  }
  std::ostringstream buffer;
  write_surface(op, n, buffer);
  std::ofstream file(out, std::ios::binary);
  if (!file) throw IoError("cannot open '" + out + "' for writing");
  file << buffer.str();
  file.close();
  if (!file) throw IoError("failed writing '" + out + "'");
  return kOk;
}

int run_verify(const std::vector<std::string>& dropped, const ToleranceProfile& tol) {
  SuiteOptions options;
  options.tolerance = tol;
  for (const auto& name : dropped) options.fixtures.remove(name);
  bool all = true;
  double total = 0;
  for (const auto& item : run_paper_suite(options)) {
    std::printf("[%s] %d. %s (%.2f s): %s\n", item.passed ? "PASS" : "FAIL", item.id,
                item.title.c_str(), item.seconds, item.detail.c_str());
    all = all && item.passed;
    total += item.seconds;
  }
  std::printf("%s in %.2f s\n", all ? "all passed" : "FAILED", total);
  return all ? kOk : kRegression;
}

int run_catalog() {
  for (const auto& spec : standard_catalog()) {
    auto s = make_family(spec);
    std::printf("%-24s %s\n", spec.to_string().c_str(), to_string(s.classification()));
  }
  for (const auto& name : FixtureSet::standard().names()) {
    auto s = TSubnorm::from_generator(FixtureSet::standard().get(name));
    std::printf("%-24s %s (fixture)\n", name.c_str(), to_string(s.classification()));
  }
  std::printf("%-24s nilpotent (closed form)\n", "yager:l=<l>");
  std::printf("%-24s nilpotent (closed form)\n", "lukasiewicz");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous cancellative t-subnorms: evaluation and pointwise order"};
  app.require_subcommand(1);
  std::string tol_text;
  app.add_option("--tol", tol_text, "tolerance overrides, e.g. verdict_margin=1e-7");
  app.footer(
      "Operator spec: name[:key=val,...], e.g. product, rational:a=0.5, dombi:a=0.6,l=2.\n"
      "Fixture names (psi, steep_affine, broken_line, log_exp, square) are accepted too.\n"
      "Exit codes: 0 ok, 1 regression failure, 2 parse error, 3 domain error, 4 io error.");

  std::string spec, rhs, criterion, lambdas, out;
  double x = 0, y = 0;
  int grid_n = 101, resolution = 41;
  std::vector<std::string> dropped;

  auto* eval = app.add_subcommand("eval", "evaluate S(x,y)");
  eval->add_option("spec", spec)->required();
  eval->add_option("x", x)->required();
  eval->add_option("y", y)->required();

  auto* cmp = app.add_subcommand("compare", "decide the order of two operators");
  cmp->add_option("lhs", spec)->required();
  cmp->add_option("rhs", rhs)->required();
  cmp->add_option("--criterion", criterion, "run one named criterion");
  cmp->add_option("--grid", grid_n, "grid size")->check(CLI::Range(2, 100000));

  auto* scan = app.add_subcommand("scan", "order along a parameter chain");
  scan->add_option("family", spec)->required();
  scan->add_option("--lambdas", lambdas, "comma-separated parameter values")
      ->required()
      ->allow_extra_args(false);
  std::string scan_criterion = "subadditivity";
  scan->add_option("--criterion", scan_criterion, "criterion run per adjacent pair");
  scan->add_option("--grid", grid_n, "grid size")->check(CLI::Range(2, 100000));

  auto* surface = app.add_subcommand("surface", "write x,y,z CSV surface data");
  surface->add_option("spec", spec)->required();
  surface->add_option("--resolution", resolution, "points per axis");
  surface->add_option("--out", out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify-paper", "replay the worked examples");
  verify->add_option("--drop-fixture", dropped, "remove a named fixture first");

  auto* catalog = app.add_subcommand("catalog", "list operators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    ToleranceProfile tol;
    if (!tol_text.empty()) tol = tol.with_overrides(tol_text);
    if (*eval) return run_eval(spec, x, y, tol);
    if (*cmp) return run_compare(spec, rhs, criterion, grid_n, tol);
    if (*scan) return run_scan(spec, lambdas, scan_criterion, grid_n, tol);
    if (*surface) return run_surface(spec, resolution, out, tol);
    if (*verify) return run_verify(dropped, tol);
    if (*catalog) return run_catalog();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}
