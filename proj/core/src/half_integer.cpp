#include "lagcap/half_integer.hpp"

namespace lagcap {

HalfInteger HalfInteger::from_fraction(int num, int den) {
    if (den == 1) return HalfInteger(num);
    if (den == 2) return from_twice(num);
    throw InputError("half-integer denominator must be 1 or 2, got " + std::to_string(den));
}

int HalfInteger::to_int() const {
    if (!is_integer()) throw InconsistencyError("expected an integer, got " + str());
    return twice_ / 2;
}

std::string HalfInteger::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

}  // namespace lagcap
