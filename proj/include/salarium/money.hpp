#pragma once

#include <cmath>
#include <compare>

#include "salarium/errors.hpp"

namespace salarium {

// Non-negative amount of KZT (Kazakh tenge). Arithmetic stays at full double
// precision; rounding to whole tenge happens only when a value is displayed
// or serialized (half-up, see rounded_kzt).
class Money {
public:
    constexpr Money() = default;

    explicit Money(double amount) : amount_(amount) {
        if (!(amount >= 0.0) || !std::isfinite(amount)) {
            throw ValidationError("Money amount must be a finite non-negative number");
        }
    }

    double amount() const { return amount_; }

    // Half-up to whole KZT. Amounts are non-negative, so rounding half away
    // from zero is exactly half-up.
    long long rounded_kzt() const { return std::llround(amount_); }

    Money& operator+=(Money other) {
        amount_ += other.amount_;
        return *this;
    }

    friend Money operator+(Money a, Money b) { return Money(a.amount_ + b.amount_); }
    friend Money operator*(Money a, double k) { return Money(a.amount_ * k); }
    friend Money operator*(double k, Money a) { return Money(k * a.amount_); }

    friend auto operator<=>(Money a, Money b) { return a.amount_ <=> b.amount_; }
    friend bool operator==(Money a, Money b) { return a.amount_ == b.amount_; }

private:
    double amount_ = 0.0;
};

} // namespace salarium
