#pragma once

#include <compare>
#include <string>

#include "lagcap/errors.hpp"

namespace lagcap {

/// Exact element of (1/2)Z, stored as twice its value.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    constexpr HalfInteger(int value) : twice_(2 * value) {}  // NOLINT(google-explicit-constructor)

    static constexpr HalfInteger from_twice(int twice) {
        HalfInteger h;
        h.twice_ = twice;
        return h;
    }
    /// Accepts den in {1, 2}; anything else is an InputError.
    static HalfInteger from_fraction(int num, int den);

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double to_double() const { return 0.5 * twice_; }

    /// Reduced numerator/denominator pair, den in {1, 2}.
    constexpr int numerator() const { return is_integer() ? twice_ / 2 : twice_; }
    constexpr int denominator() const { return is_integer() ? 1 : 2; }

    /// Throws InconsistencyError when the value is not integral.
    int to_int() const;

    std::string str() const;

    constexpr HalfInteger operator-() const { return from_twice(-twice_); }
    constexpr HalfInteger operator+(HalfInteger o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInteger operator-(HalfInteger o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInteger& operator+=(HalfInteger o) {
        twice_ += o.twice_;
        return *this;
    }
    constexpr HalfInteger& operator-=(HalfInteger o) {
        twice_ -= o.twice_;
        return *this;
    }

    constexpr auto operator<=>(const HalfInteger&) const = default;

private:
    int twice_ = 0;
};

}  // namespace lagcap
