#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace catmod {

/// Non-negative machine integer whose arithmetic throws instead of wrapping.
class Natural {
public:
    using value_type = std::uint64_t;

    static constexpr value_type max_value = std::numeric_limits<value_type>::max();

    constexpr Natural() noexcept = default;

    template <std::unsigned_integral T>
    constexpr Natural(T v) noexcept : value_(static_cast<value_type>(v)) {}

    template <std::signed_integral T>
    constexpr Natural(T v) : value_(static_cast<value_type>(v)) {
        if (v < 0) throw std::out_of_range("Natural: negative value");
    }

    [[nodiscard]] constexpr value_type value() const noexcept { return value_; }
    constexpr explicit operator value_type() const noexcept { return value_; }

    constexpr Natural& operator+=(Natural rhs) {
        if (value_ > max_value - rhs.value_) throw std::overflow_error("Natural: addition overflow");
        value_ += rhs.value_;
        return *this;
    }

    constexpr Natural& operator-=(Natural rhs) {
        if (rhs.value_ > value_) throw std::underflow_error("Natural: subtraction below zero");
        value_ -= rhs.value_;
        return *this;
    }

    constexpr Natural& operator*=(Natural rhs) {
        if (rhs.value_ != 0 && value_ > max_value / rhs.value_)
            throw std::overflow_error("Natural: multiplication overflow");
        value_ *= rhs.value_;
        return *this;
    }

    friend constexpr Natural operator+(Natural a, Natural b) { return a += b; }
    friend constexpr Natural operator-(Natural a, Natural b) { return a -= b; }
    friend constexpr Natural operator*(Natural a, Natural b) { return a *= b; }

    friend constexpr bool operator==(Natural, Natural) noexcept = default;
    friend constexpr auto operator<=>(Natural, Natural) noexcept = default;

    friend std::ostream& operator<<(std::ostream& os, Natural n) { return os << n.value_; }

private:
    value_type value_ = 0;
};

/// Checked power base^exp.
constexpr Natural checked_pow(Natural base, unsigned exp) {
    Natural result{1u};
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
}

}  // namespace catmod
