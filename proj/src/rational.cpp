#include "topocode/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace topocode {

Rational::Rational(long long numerator, long long denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const long long g = std::gcd(numerator < 0 ? -numerator : numerator, denominator);
    num = g ? numerator / g : numerator;
    den = g ? denominator / g : denominator;
}

bool Rational::operator<(const Rational& other) const {
    return static_cast<__int128>(num) * other.den < static_cast<__int128>(other.num) * den;
}

std::string Rational::decimal(int places) const {
    const bool negative = num < 0;
    __int128 scaled = negative ? -static_cast<__int128>(num) : num;
    for (int i = 0; i < places; ++i) {
        scaled *= 10;
    }
    scaled = (scaled + den / 2) / den;
    __int128 whole = scaled;
    __int128 frac = 0;
    __int128 pow10 = 1;
    for (int i = 0; i < places; ++i) {
        pow10 *= 10;
    }
    whole = scaled / pow10;
    frac = scaled % pow10;

    std::string digits;
    if (places > 0) {
        digits.assign(places, '0');
        for (int i = places - 1; i >= 0 && frac > 0; --i) {
            digits[i] = static_cast<char>('0' + static_cast<int>(frac % 10));
            frac /= 10;
        }
    }
    std::string head = whole == 0 ? "0" : "";
    while (whole > 0) {
        head.insert(head.begin(), static_cast<char>('0' + static_cast<int>(whole % 10)));
        whole /= 10;
    }
    std::string out = (negative ? "-" : "") + head;
    if (places > 0) {
        out += "." + digits;
    }
    return out;
}

std::string Rational::fraction() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace topocode
