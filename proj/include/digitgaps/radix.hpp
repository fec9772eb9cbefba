#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace digitgaps {

/// Exact arbitrary-precision integer used for all sequence values.
using Int = boost::multiprecision::cpp_int;

/// Radix of a positional numbering system, restricted to [2, 36]
/// (digit alphabet 0-9A-Z).
class Base {
public:
    static constexpr int min_radix = 2;
    static constexpr int max_radix = 36;

    explicit Base(int radix) : radix_(radix) {
        if (radix < min_radix || radix > max_radix) {
            throw std::out_of_range("base must be in [2, 36], got " +
                                    std::to_string(radix));
        }
    }

    int value() const { return radix_; }

    friend bool operator==(Base, Base) = default;

private:
    int radix_;
};

inline char digit_symbol(int d) {
    return d < 10 ? static_cast<char>('0' + d)
                  : static_cast<char>('A' + (d - 10));
}

/// Value of a digit character; accepts lowercase. Returns -1 if the
/// character is not in the 0-9A-Z alphabet.
inline int symbol_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

/// A single digit 0 <= d < L of its associated base.
class Digit {
public:
    Digit(int value, Base base) : value_(value), base_(base) {
        if (value < 0 || value >= base.value()) {
            throw std::out_of_range("digit " + std::to_string(value) +
                                    " out of range for base " +
                                    std::to_string(base.value()));
        }
    }

    int value() const { return value_; }
    Base base() const { return base_; }
    char symbol() const { return digit_symbol(value_); }

    friend bool operator==(const Digit&, const Digit&) = default;

private:
    int value_;
    Base base_;
};

/// Unit's digit of a nonnegative value in the given base: value mod L.
inline Digit unit_digit(const Int& value, Base base) {
    if (value < 0) {
        throw std::invalid_argument("unit_digit requires a nonnegative value");
    }
    return Digit(static_cast<int>(value % base.value()), base);
}

/// Positional rendering, most significant digit first; "0" for zero.
inline std::string render(Int value, Base base) {
    if (value < 0) {
        throw std::invalid_argument("render requires a nonnegative value");
    }
    if (value == 0) return "0";
    const int radix = base.value();
    std::string out;
    while (value != 0) {
        out.push_back(digit_symbol(static_cast<int>(value % radix)));
        value /= radix;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

/// Inverse of render. Accepts lowercase digits and leading zeros.
inline Int parse(std::string_view text, Base base) {
    if (text.empty()) {
        throw std::invalid_argument("parse: empty digit string");
    }
    Int value = 0;
    for (char c : text) {
        const int d = symbol_value(c);
        if (d < 0 || d >= base.value()) {
            throw std::invalid_argument(std::string("parse: invalid digit '") +
                                        c + "' for base " +
                                        std::to_string(base.value()));
        }
        value = value * base.value() + d;
    }
    return value;
}

}  // namespace digitgaps
