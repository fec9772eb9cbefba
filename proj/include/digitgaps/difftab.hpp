#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "radix.hpp"
#include "seq.hpp"

namespace digitgaps {

/// How a digit profile was obtained.
enum class ProfileMethod {
    difference_table,  // predicted from an L x L difference table
    oracle,            // exhaustive residues over one full period
    empirical,         // counted over a finite prefix of totals
};

inline std::string method_name(ProfileMethod m) {
    switch (m) {
        case ProfileMethod::difference_table: return "difference-table";
        case ProfileMethod::oracle:           return "oracle";
        case ProfileMethod::empirical:        return "empirical";
    }
    throw std::logic_error("unreachable profile method");
}

/// Which digits 0..L-1 occur as unit's digits of a sequence's running
/// totals, and which never do (the gaps).
struct ResidueProfile {
    SequenceId seq;
    Base base;
    std::set<int> admissible;
    std::set<int> gaps;
    ProfileMethod method;
};

/// Closed-form label of the running total, for display.
inline std::string closed_form_label(SequenceId seq) {
    switch (seq.kind()) {
        case SequenceKind::natural: return "i(i+1)/2";
        case SequenceKind::even:    return "i(i+1)";
        case SequenceKind::odd:     return "i^2";
        case SequenceKind::squares: return "i(i+1)(2i+1)/6";
        case SequenceKind::primes:
            throw std::invalid_argument("primes have no closed-form total");
    }
    throw std::logic_error("unreachable sequence kind");
}

namespace detail {

inline int nonneg_mod(std::int64_t v, std::int64_t m) {
    const std::int64_t r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

/// Does column i certify digit j, given the cell value f(i) - j?
/// Certification means some n == i (mod L) has total(n) == j (mod L).
inline bool cell_certifies(SequenceKind kind, int L, int i, std::int64_t cell) {
    const int r = nonneg_mod(cell, L);
    switch (kind) {
        case SequenceKind::even:
        case SequenceKind::odd:
            // f(i + Lm) - f(i) is always a multiple of L, so the column
            // certifies exactly when L divides the cell.
            return r == 0;
        case SequenceKind::natural:
            // f(i + Lm) - f(i) = Lm(Lm + 2i + 1)/2. For odd L this is a
            // multiple of L; for even L it reaches exactly the residues
            // 0 and L/2, depending on the parity of m.
            if (r == 0) return true;
            return L % 2 == 0 && r == L / 2;
        case SequenceKind::squares: {
            // 6(f(i + Lm) - f(i)) = LmA + 3L^2 m^2 (2i+1) + 2L^3 m^3
            // with A = (2i+1)^2 + 2i(i+1). Multiplying the target
            // congruence f(n) == j (mod L) by 6 reduces it to
            // 6r + Ls == 0 (mod 6L), where s is the bracketed factor
            // mod 6 and depends only on k = m mod 6. Both sides lie in
            // [0, 11L), so only the values 0 and 6L can occur. Each
            // residue class k contains arbitrarily large nonnegative m,
            // so class feasibility gives a genuine witness with m >= 0.
            const std::int64_t A =
                static_cast<std::int64_t>(2 * i + 1) * (2 * i + 1) +
                std::int64_t{2} * i * (i + 1);
            for (std::int64_t k = 0; k < 6; ++k) {
                const int s = nonneg_mod(
                    k * A + 3 * L * k * k * (2 * i + 1) +
                        std::int64_t{2} * L * L * k * k * k,
                    6);
                const std::int64_t lhs = 6 * r + std::int64_t{s} * L;
                if (lhs == 0 || lhs == 6 * L) return true;
            }
            return false;
        }
        case SequenceKind::primes:
            throw std::invalid_argument(
                "primes have no difference table; use empirical counts");
    }
    throw std::logic_error("unreachable sequence kind");
}

}  // namespace detail

/// L x L difference table for a closed-form sequence in base L.
/// Row j holds f(i) - j for i = 0..L-1; a cell is marked when its column
/// certifies digit j, and a digit is admissible iff its row has a mark.
class DifferenceTable {
public:
    DifferenceTable(SequenceId seq, Base base) : seq_(seq), base_(base) {
        if (!seq.has_closed_form()) {
            throw std::invalid_argument(
                "difference tables need a closed-form total; primes have "
                "none (use empirical counts)");
        }
        const int L = base.value();
        header_.reserve(static_cast<std::size_t>(L));
        for (int i = 0; i < L; ++i) {
            header_.push_back(
                static_cast<std::int64_t>(minor_total_closed(seq, i)));
        }
        cells_.assign(static_cast<std::size_t>(L),
                      std::vector<std::int64_t>(static_cast<std::size_t>(L)));
        marks_.assign(static_cast<std::size_t>(L),
                      std::vector<bool>(static_cast<std::size_t>(L), false));
        for (int j = 0; j < L; ++j) {
            for (int i = 0; i < L; ++i) {
                const std::int64_t cell = header_[static_cast<std::size_t>(i)] - j;
                cells_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                    cell;
                marks_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                    detail::cell_certifies(seq.kind(), L, i, cell);
            }
        }
    }

    SequenceId seq() const { return seq_; }
    Base base() const { return base_; }
    int size() const { return base_.value(); }

    /// f(i): the running total after i terms.
    std::int64_t header(int i) const { return header_.at(static_cast<std::size_t>(i)); }

    /// f(i) - j.
    std::int64_t cell(int j, int i) const {
        return cells_.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(i));
    }

    bool mark(int j, int i) const {
        return marks_.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(i));
    }

    /// Whether any column certifies digit j.
    bool row_certified(int j) const {
        const auto& row = marks_.at(static_cast<std::size_t>(j));
        for (bool m : row) {
            if (m) return true;
        }
        return false;
    }

private:
    SequenceId seq_;
    Base base_;
    std::vector<std::int64_t> header_;
    std::vector<std::vector<std::int64_t>> cells_;
    std::vector<std::vector<bool>> marks_;
};

inline DifferenceTable build_table(SequenceId seq, Base base) {
    return DifferenceTable(seq, base);
}

/// Direct certification for the sequences whose rule needs no k-scan.
/// Natural totals are enumerated over a full period 0..2L-1, a route
/// independent of the table's cell rule; even and odd totals certify by
/// plain divisibility of some cell.
inline bool certify_simple(SequenceId seq, Base base, int j) {
    const int L = base.value();
    if (j < 0 || j >= L) {
        throw std::out_of_range("digit " + std::to_string(j) +
                                " out of range for base " + std::to_string(L));
    }
    switch (seq.kind()) {
        case SequenceKind::natural: {
            for (std::int64_t n = 0; n < 2 * L; ++n) {
                if (minor_total_closed(seq, n) % L == j) return true;
            }
            return false;
        }
        case SequenceKind::even:
        case SequenceKind::odd: {
            for (int i = 0; i < L; ++i) {
                const std::int64_t cell =
                    static_cast<std::int64_t>(minor_total_closed(seq, i)) - j;
                if (detail::nonneg_mod(cell, L) == 0) return true;
            }
            return false;
        }
        case SequenceKind::squares:
            throw std::invalid_argument(
                "squares need the k-scan rule; use certify_faulhaber");
        case SequenceKind::primes:
            throw std::invalid_argument(
                "primes have no difference table; use empirical counts");
    }
    throw std::logic_error("unreachable sequence kind");
}

/// Certification for second-power Faulhaber totals via the k-scan rule.
inline bool certify_faulhaber(Base base, int j) {
    const int L = base.value();
    if (j < 0 || j >= L) {
        throw std::out_of_range("digit " + std::to_string(j) +
                                " out of range for base " + std::to_string(L));
    }
    const SequenceId seq(SequenceKind::squares);
    for (int i = 0; i < L; ++i) {
        const std::int64_t cell =
            static_cast<std::int64_t>(minor_total_closed(seq, i)) - j;
        if (detail::cell_certifies(SequenceKind::squares, L, i, cell)) {
            return true;
        }
    }
    return false;
}

/// Predicted digit profile from the difference table.
inline ResidueProfile predict_profile(SequenceId seq, Base base) {
    if (!seq.has_closed_form()) {
        throw std::invalid_argument(
            "cannot predict a profile for primes; use empirical_histogram");
    }
    const DifferenceTable table(seq, base);
    ResidueProfile profile{seq, base, {}, {}, ProfileMethod::difference_table};
    for (int j = 0; j < base.value(); ++j) {
        if (table.row_certified(j)) {
            profile.admissible.insert(j);
        } else {
            profile.gaps.insert(j);
        }
    }
    return profile;
}

}  // namespace digitgaps
