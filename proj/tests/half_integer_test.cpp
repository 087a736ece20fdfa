#include "doctest.h"
#include "lagcap/half_integer.hpp"

using lagcap::HalfInteger;

TEST_CASE("half-integers are exact and print as fractions") {
    const auto h = HalfInteger::from_fraction(3, 2);
    CHECK(h.twice() == 3);
    CHECK_FALSE(h.is_integer());
    CHECK(h.str() == "3/2");
    CHECK((h + h).str() == "3");
    CHECK((h + h).to_int() == 3);
    CHECK((-h).numerator() == -3);
    CHECK((-h).denominator() == 2);
    CHECK(HalfInteger::from_fraction(4, 2) == HalfInteger(2));
    CHECK(HalfInteger(1) > h - HalfInteger(1));
}

TEST_CASE("half-integer errors") {
    CHECK_THROWS_AS(HalfInteger::from_fraction(1, 3), lagcap::InputError);
    CHECK_THROWS_AS(HalfInteger::from_twice(1).to_int(), lagcap::InconsistencyError);
}
