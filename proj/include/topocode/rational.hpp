#pragma once

#include <string>

namespace topocode {

/// Exact fraction with a normalized (coprime, positive-denominator) form.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long numerator, long long denominator);

    bool operator==(const Rational&) const = default;
    bool operator<(const Rational& other) const;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// Fixed-point decimal with the given number of places, rounded half up.
    std::string decimal(int places) const;

    /// "p/q" form.
    std::string fraction() const;
};

}  // namespace topocode
