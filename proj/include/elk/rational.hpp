#pragma once
#ifndef ELK_RATIONAL_HPP
#define ELK_RATIONAL_HPP

// Exact rational helpers: decimal-string parsing/printing and floor.
// Reports never emit binary floating point; a rational renders as an exact
// decimal when its reduced denominator is of the form 2^a 5^b and as
// "num/den" otherwise.

#include <elk/zlinalg.hpp>

#include <cctype>
#include <optional>
#include <string>

namespace elk {

/// Parse a plain decimal literal ("0.5624", "3", "12.000") exactly.
inline Rat parse_decimal(const std::string& s) {
    require(!s.empty(), "decimal: empty string");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    require(i < s.size(), "decimal: no digits");
    Int num = 0;
    Int den = 1;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            require(!seen_dot, "decimal: repeated dot");
            seen_dot = true;
            continue;
        }
        require(std::isdigit(static_cast<unsigned char>(c)), "decimal: invalid character");
        seen_digit = true;
        num = num * 10 + (c - '0');
        if (seen_dot) den *= 10;
    }
    require(seen_digit, "decimal: no digits");
    Rat r(num, den);
    return neg ? -r : r;
}

inline Int floor_rat(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);  // > 0
    Int q = num / den;
    if (num % den != 0 && num < 0) q -= 1;
    return q;
}

/// Exact decimal rendering when the reduced denominator is 2^a 5^b.
inline std::optional<std::string> rat_to_decimal(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    Int d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return std::nullopt;
    int k = std::max(twos, fives);
    Int scale = 1;
    for (int i = 0; i < k; ++i) scale *= 10;
    Int scaled = num * (scale / den);  // exact by construction
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string digits = scaled.str();
    std::string out;
    if (k == 0) {
        out = digits;
    } else {
        while (static_cast<int>(digits.size()) <= k) digits.insert(digits.begin(), '0');
        std::string frac = digits.substr(digits.size() - k);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        out = digits.substr(0, digits.size() - k);
        if (!frac.empty()) out += "." + frac;
    }
    return neg ? "-" + out : out;
}

/// Canonical exact rendering: decimal when finite, "num/den" otherwise.
inline std::string rat_to_string(const Rat& r) {
    if (auto dec = rat_to_decimal(r)) return *dec;
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

}  // namespace elk

#endif  // ELK_RATIONAL_HPP
