#include "subnorm/surface.hpp"

#include <cstdio>

#include "subnorm/errors.hpp"

namespace subnorm {

void write_surface(const BinaryOperator& op, int n, std::ostream& out) {
  if (n < 2) throw ParameterError("surface: resolution must be at least 2");
  out << "x,y,z\n";
  char buf[96];
  for (int i = 0; i < n; ++i) {
    double x = i == n - 1 ? 1.0 : static_cast<double>(i) / (n - 1);
    for (int j = 0; j < n; ++j) {
      double y = j == n - 1 ? 1.0 : static_cast<double>(j) / (n - 1);
      std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g\n", x, y, op(x, y));
      out << buf;
    }
  }
}

}  // namespace subnorm
