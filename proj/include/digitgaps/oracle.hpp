#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "difftab.hpp"
#include "radix.hpp"
#include "seq.hpp"

namespace digitgaps {

/// One full period of a closed-form total mod L. The total is a degree-3
/// polynomial with denominator d, so d*L steps always repeat; the
/// constructor checks that exhaustively and refuses to exist otherwise.
class PeriodWindow {
public:
    PeriodWindow(SequenceId seq, Base base) : seq_(seq), base_(base) {
        if (!seq.has_closed_form()) {
            throw std::invalid_argument(
                "primes have no period mod L; use empirical_histogram");
        }
        const int L = base.value();
        length_ = static_cast<std::int64_t>(seq.denominator()) * L;
        for (std::int64_t n = 0; n < length_; ++n) {
            const Int here = minor_total_closed(seq, n);
            const Int next = minor_total_closed(seq, n + length_);
            if ((next - here) % L != 0) {
                throw std::logic_error("period violation at n=" +
                                       std::to_string(n));
            }
            residues_.insert(static_cast<int>(here % L));
        }
    }

    SequenceId seq() const { return seq_; }
    Base base() const { return base_; }
    std::int64_t length() const { return length_; }
    const std::set<int>& residues() const { return residues_; }
    bool contains(int j) const { return residues_.count(j) > 0; }

private:
    SequenceId seq_;
    Base base_;
    std::int64_t length_;
    std::set<int> residues_;
};

/// Ground-truth digit profile by exhausting one full period.
inline ResidueProfile oracle_profile(SequenceId seq, Base base) {
    const PeriodWindow window(seq, base);
    ResidueProfile profile{seq, base, {}, {}, ProfileMethod::oracle};
    for (int j = 0; j < base.value(); ++j) {
        if (window.contains(j)) {
            profile.admissible.insert(j);
        } else {
            profile.gaps.insert(j);
        }
    }
    return profile;
}

/// Unit's-digit counts of the first n_terms running totals.
struct DigitHistogram {
    SequenceId seq;
    Base base;
    std::int64_t n_terms;
    std::vector<std::int64_t> counts;  // counts[d] for d = 0..L-1
};

/// Count the unit's digit of every total S_1..S_N. Works for every
/// sequence, including primes (bounded by the sieve's capacity).
inline DigitHistogram empirical_histogram(SequenceId seq, Base base,
                                          std::int64_t n_terms,
                                          const PrimeSieve& sieve =
                                              shared_sieve()) {
    if (n_terms < 1) {
        throw std::invalid_argument("histogram needs at least 1 term, got " +
                                    std::to_string(n_terms));
    }
    DigitHistogram hist{seq, base, n_terms,
                        std::vector<std::int64_t>(
                            static_cast<std::size_t>(base.value()), 0)};
    Int sum = 0;
    for (std::int64_t n = 1; n <= n_terms; ++n) {
        sum += term(seq, n, sieve);
        ++hist.counts[static_cast<std::size_t>(
            unit_digit(sum, base).value())];
    }
    return hist;
}

/// Smallest n >= 1 whose total ends in digit j, or nullopt if none.
/// One full period bounds the search, so absence is a proof, not a
/// timeout. Rejects primes: no finite window settles them.
inline std::optional<MinorTotal> witness(SequenceId seq, Base base, int j) {
    if (!seq.has_closed_form()) {
        throw std::invalid_argument(
            "witness search needs a period; primes have none");
    }
    const int L = base.value();
    if (j < 0 || j >= L) {
        throw std::out_of_range("digit " + std::to_string(j) +
                                " out of range for base " + std::to_string(L));
    }
    const std::int64_t window =
        static_cast<std::int64_t>(seq.denominator()) * L;
    for (std::int64_t n = 1; n <= window; ++n) {
        Int total = minor_total_closed(seq, n);
        if (total % L == j) {
            return MinorTotal{std::move(total), n};
        }
    }
    return std::nullopt;
}

}  // namespace digitgaps
