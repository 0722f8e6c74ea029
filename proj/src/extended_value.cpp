#include "subnorm/extended_value.hpp"

#include <cmath>
#include <cstdio>

#include "subnorm/errors.hpp"

namespace subnorm {

ExtendedValue::ExtendedValue(double v) {
  if (std::isnan(v)) throw DomainError("extended value: NaN");
  if (v < 0) throw DomainError("extended value: negative input " + std::to_string(v));
  if (std::isinf(v)) {
    infinite_ = true;
  } else {
    value_ = v;
  }
}

double ExtendedValue::value() const {
  if (infinite_) throw DomainError("extended value: INF has no finite value");
  return value_;
}

std::string ExtendedValue::to_string() const {
  if (infinite_) return "INF";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

ExtendedValue operator+(ExtendedValue a, ExtendedValue b) noexcept {
  if (a.infinite_ || b.infinite_) return kInf;
  double s = a.value_ + b.value_;
  if (std::isinf(s)) return kInf;
  ExtendedValue r;
  r.value_ = s;
  return r;
}

}  // namespace subnorm
