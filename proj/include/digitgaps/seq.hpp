#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "radix.hpp"

namespace digitgaps {

/// The integer sequences whose running totals are studied.
enum class SequenceKind {
    natural,  // 1, 2, 3, ...
    even,     // 2, 4, 6, ...
    odd,      // 1, 3, 5, ...
    squares,  // 1, 4, 9, ...  (second-power Faulhaber sums)
    primes,   // 2, 3, 5, ...  (no closed-form total)
};

/// Identity of a sequence: kind plus the facts that drive dispatch.
class SequenceId {
public:
    explicit SequenceId(SequenceKind kind) : kind_(kind) {}

    SequenceKind kind() const { return kind_; }

    /// Whether the running total has a polynomial closed form.
    bool has_closed_form() const { return kind_ != SequenceKind::primes; }

    /// Smallest d with d * total(n) a polynomial in n with integer
    /// coefficients. Drives the period window d*L used by the oracle.
    int denominator() const {
        switch (kind_) {
            case SequenceKind::natural: return 2;
            case SequenceKind::even:    return 1;
            case SequenceKind::odd:     return 1;
            case SequenceKind::squares: return 6;
            case SequenceKind::primes:
                throw std::invalid_argument(
                    "primes have no closed-form total, so no denominator");
        }
        throw std::logic_error("unreachable sequence kind");
    }

    std::string name() const {
        switch (kind_) {
            case SequenceKind::natural: return "natural";
            case SequenceKind::even:    return "even";
            case SequenceKind::odd:     return "odd";
            case SequenceKind::squares: return "squares";
            case SequenceKind::primes:  return "primes";
        }
        throw std::logic_error("unreachable sequence kind");
    }

    static SequenceId from_name(std::string_view name) {
        if (name == "natural") return SequenceId(SequenceKind::natural);
        if (name == "even") return SequenceId(SequenceKind::even);
        if (name == "odd") return SequenceId(SequenceKind::odd);
        if (name == "squares" || name == "faulhaber2")
            return SequenceId(SequenceKind::squares);
        if (name == "primes") return SequenceId(SequenceKind::primes);
        throw std::invalid_argument("unknown sequence '" + std::string(name) +
                                    "'");
    }

    friend bool operator==(SequenceId, SequenceId) = default;

private:
    SequenceKind kind_;
};

/// A running total: the sum of the first n terms of a sequence.
struct MinorTotal {
    Int value;
    std::int64_t n;

    friend bool operator==(const MinorTotal&, const MinorTotal&) = default;
};

/// Eratosthenes sieve with 1-based indexed access to primes.
class PrimeSieve {
public:
    static constexpr std::int64_t default_bound = 120000;

    explicit PrimeSieve(std::int64_t bound = default_bound) : bound_(bound) {
        if (bound < 2) {
            throw std::invalid_argument("sieve bound must be at least 2");
        }
        std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
        for (std::int64_t p = 2; p * p <= bound; ++p) {
            if (composite[static_cast<std::size_t>(p)]) continue;
            for (std::int64_t m = p * p; m <= bound; m += p) {
                composite[static_cast<std::size_t>(m)] = true;
            }
        }
        for (std::int64_t v = 2; v <= bound; ++v) {
            if (!composite[static_cast<std::size_t>(v)]) primes_.push_back(v);
        }
    }

    std::int64_t bound() const { return bound_; }
    std::int64_t count() const {
        return static_cast<std::int64_t>(primes_.size());
    }

    /// nth prime, 1-based: nth(1) == 2.
    std::int64_t nth(std::int64_t n) const {
        if (n < 1 || n > count()) {
            throw std::out_of_range("prime index " + std::to_string(n) +
                                    " outside sieve capacity (have " +
                                    std::to_string(count()) + " primes up to " +
                                    std::to_string(bound_) + ")");
        }
        return primes_[static_cast<std::size_t>(n - 1)];
    }

private:
    std::int64_t bound_;
    std::vector<std::int64_t> primes_;
};

/// Process-wide sieve; big enough for the first 10^4 primes.
inline const PrimeSieve& shared_sieve() {
    static const PrimeSieve sieve;
    return sieve;
}

/// nth term of a sequence, 1-based.
inline Int term(SequenceId seq, std::int64_t n,
                const PrimeSieve& sieve = shared_sieve()) {
    if (n < 1) {
        throw std::invalid_argument("term index must be >= 1, got " +
                                    std::to_string(n));
    }
    switch (seq.kind()) {
        case SequenceKind::natural: return Int(n);
        case SequenceKind::even:    return Int(2) * n;
        case SequenceKind::odd:     return Int(2) * n - 1;
        case SequenceKind::squares: return Int(n) * n;
        case SequenceKind::primes:  return Int(sieve.nth(n));
    }
    throw std::logic_error("unreachable sequence kind");
}

namespace detail {

/// num / den with a divisibility check; the closed forms below are exact
/// by construction, so a remainder means a broken formula.
inline Int exact_div(const Int& num, int den) {
    if (num % den != 0) {
        throw std::logic_error("closed-form product not divisible by " +
                               std::to_string(den));
    }
    return num / den;
}

}  // namespace detail

/// Total of the first n terms by polynomial closed form. n == 0 gives the
/// empty sum. Throws invalid_argument for sequences without a closed form.
inline Int minor_total_closed(SequenceId seq, std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("total length must be >= 0, got " +
                                    std::to_string(n));
    }
    const Int m(n);
    switch (seq.kind()) {
        case SequenceKind::natural:
            return detail::exact_div(m * (m + 1), 2);
        case SequenceKind::even:
            return m * (m + 1);
        case SequenceKind::odd:
            return m * m;
        case SequenceKind::squares:
            return detail::exact_div(m * (m + 1) * (2 * m + 1), 6);
        case SequenceKind::primes:
            throw std::invalid_argument(
                "primes have no closed-form total; accumulate terms instead");
    }
    throw std::logic_error("unreachable sequence kind");
}

/// Total of the first n terms by direct accumulation. Works for every
/// sequence, including primes.
inline Int minor_total_accumulated(SequenceId seq, std::int64_t n,
                                   const PrimeSieve& sieve = shared_sieve()) {
    if (n < 0) {
        throw std::invalid_argument("total length must be >= 0, got " +
                                    std::to_string(n));
    }
    Int sum = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
        sum += term(seq, i, sieve);
    }
    return sum;
}

}  // namespace digitgaps
