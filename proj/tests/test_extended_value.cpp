#include <doctest.h>

#include <cmath>
#include <limits>

#include "subnorm/errors.hpp"
#include "subnorm/extended_value.hpp"

using namespace subnorm;

TEST_CASE("finite values round trip") {
  ExtendedValue v = 2.5;
  CHECK(v.is_finite());
  CHECK(v.value() == 2.5);
  CHECK(v.to_double() == 2.5);
  CHECK(ExtendedValue{}.value() == 0.0);
}

TEST_CASE("infinity is a state, not a number") {
  CHECK(kInf.is_infinite());
  CHECK_THROWS_AS(kInf.value(), DomainError);
  CHECK(std::isinf(kInf.to_double()));
  CHECK(ExtendedValue(std::numeric_limits<double>::infinity()) == kInf);
  CHECK(kInf.to_string() == "INF");
}

TEST_CASE("construction rejects NaN and negatives") {
  CHECK_THROWS_AS(ExtendedValue(-1e-300), DomainError);
  CHECK_THROWS_AS(ExtendedValue(std::nan("")), DomainError);
  CHECK_THROWS_AS(ExtendedValue(-std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("addition saturates") {
  CHECK((ExtendedValue(1) + ExtendedValue(2)).value() == 3);
  CHECK((kInf + ExtendedValue(5)).is_infinite());
  CHECK((ExtendedValue(5) + kInf).is_infinite());
  CHECK((kInf + kInf).is_infinite());
  double big = std::numeric_limits<double>::max();
  CHECK((ExtendedValue(big) + ExtendedValue(big)).is_infinite());
}

TEST_CASE("ordering puts INF above every finite value") {
  double big = std::numeric_limits<double>::max();
  CHECK(ExtendedValue(big) < kInf);
  CHECK(ExtendedValue(0) < ExtendedValue(1e-300));
  CHECK(kInf <= kInf);
  CHECK_FALSE(kInf < kInf);
  CHECK(ExtendedValue(3) == ExtendedValue(3));
  CHECK(ExtendedValue(3) != kInf);
}
