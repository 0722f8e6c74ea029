#pragma once

#include <ostream>

#include "subnorm/operators.hpp"

namespace subnorm {

// CSV `x,y,z`, n*n rows, x outer, 9 significant digits. Throws ParameterError
// for n < 2.
void write_surface(const BinaryOperator& op, int n, std::ostream& out);

}  // namespace subnorm
