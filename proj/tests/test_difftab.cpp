#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <digitgaps/difftab.hpp>

using digitgaps::Base;
using digitgaps::DifferenceTable;
using digitgaps::Int;
using digitgaps::ProfileMethod;
using digitgaps::SequenceId;
using digitgaps::SequenceKind;

namespace {

const SequenceId kNatural{SequenceKind::natural};
const SequenceId kEven{SequenceKind::even};
const SequenceId kOdd{SequenceKind::odd};
const SequenceId kSquares{SequenceKind::squares};
const SequenceId kPrimes{SequenceKind::primes};

std::set<int> certified_rows(const DifferenceTable& table) {
    std::set<int> rows;
    for (int j = 0; j < table.size(); ++j) {
        if (table.row_certified(j)) rows.insert(j);
    }
    return rows;
}

std::set<int> marked_columns(const DifferenceTable& table, int j) {
    std::set<int> cols;
    for (int i = 0; i < table.size(); ++i) {
        if (table.mark(j, i)) cols.insert(i);
    }
    return cols;
}

}  // namespace

TEST_CASE("table headers hold the running totals at 0..L-1") {
    const DifferenceTable even10(kEven, Base(10));
    const std::vector<std::int64_t> expected_even = {0,  2,  6,  12, 20,
                                                     30, 42, 56, 72, 90};
    for (int i = 0; i < 10; ++i) {
        CHECK(even10.header(i) == expected_even[static_cast<std::size_t>(i)]);
    }

    const DifferenceTable squares10(kSquares, Base(10));
    const std::vector<std::int64_t> expected_squares = {0,  1,   5,   14,  30,
                                                        55, 91, 140, 204, 285};
    for (int i = 0; i < 10; ++i) {
        CHECK(squares10.header(i) ==
              expected_squares[static_cast<std::size_t>(i)]);
    }

    const DifferenceTable odd10(kOdd, Base(10));
    CHECK(odd10.cell(9, 3) == 0);  // 3^2 - 9
}

TEST_CASE("cells are header minus digit, stepping by one down a column") {
    for (SequenceId seq : {kNatural, kEven, kOdd, kSquares}) {
        for (int L : {2, 5, 10, 16, 36}) {
            const DifferenceTable table(seq, Base(L));
            for (int i = 0; i < L; ++i) {
                if (i > 0) CHECK(table.header(i) >= table.header(i - 1));
                for (int j = 0; j < L; ++j) {
                    CHECK(table.cell(j, i) == table.header(i) - j);
                    if (j > 0) {
                        CHECK(table.cell(j, i) == table.cell(j - 1, i) - 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("even base-10 marks sit where the table divides evenly") {
    const DifferenceTable table(kEven, Base(10));
    CHECK(marked_columns(table, 0) == std::set<int>{0, 4, 5, 9});
    CHECK(marked_columns(table, 6) == std::set<int>{2, 7});
    CHECK(marked_columns(table, 4).empty());
    CHECK(certified_rows(table) == std::set<int>{0, 2, 6});
}

TEST_CASE("odd base-10 marks include the zero cell in row 4") {
    const DifferenceTable table(kOdd, Base(10));
    CHECK(table.mark(4, 2));  // cell value 2^2 - 4 = 0
    CHECK(certified_rows(table) == std::set<int>{0, 1, 4, 5, 6, 9});
}

TEST_CASE("tables reject primes") {
    CHECK_THROWS_AS(DifferenceTable(kPrimes, Base(10)), std::invalid_argument);
    CHECK_THROWS_AS(digitgaps::build_table(kPrimes, Base(8)),
                    std::invalid_argument);
    CHECK_THROWS_AS(digitgaps::predict_profile(kPrimes, Base(10)),
                    std::invalid_argument);
    CHECK_THROWS_WITH(digitgaps::predict_profile(kPrimes, Base(10)),
                      Catch::Matchers::ContainsSubstring("empirical"));
}

TEST_CASE("simple certification matches the published truth values") {
    CHECK(digitgaps::certify_simple(kEven, Base(10), 6));
    CHECK_FALSE(digitgaps::certify_simple(kEven, Base(10), 4));
    CHECK_FALSE(digitgaps::certify_simple(kOdd, Base(10), 7));
    CHECK_FALSE(digitgaps::certify_simple(kOdd, Base(3), 2));
    CHECK(digitgaps::certify_simple(kNatural, Base(10), 0));
    CHECK_FALSE(digitgaps::certify_simple(kNatural, Base(10), 2));
    CHECK_THROWS_AS(digitgaps::certify_simple(kSquares, Base(10), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(digitgaps::certify_simple(kPrimes, Base(10), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(digitgaps::certify_simple(kEven, Base(10), 10),
                    std::out_of_range);
    CHECK_THROWS_AS(digitgaps::certify_simple(kEven, Base(10), -1),
                    std::out_of_range);
}

TEST_CASE("k-scan certification matches the published truth values") {
    CHECK(digitgaps::certify_faulhaber(Base(10), 5));
    CHECK_FALSE(digitgaps::certify_faulhaber(Base(10), 8));
    for (int j = 0; j < 6; ++j) {
        CHECK(digitgaps::certify_faulhaber(Base(6), j));
    }
    CHECK(digitgaps::certify_faulhaber(Base(8), 7));
    CHECK_THROWS_AS(digitgaps::certify_faulhaber(Base(10), 10),
                    std::out_of_range);
}

TEST_CASE("certify routes agree with table rows for every base") {
    for (int L = 2; L <= 36; ++L) {
        const Base base(L);
        // natural: period enumeration vs the table's cell rule
        const DifferenceTable nat(kNatural, base);
        for (int j = 0; j < L; ++j) {
            CHECK(digitgaps::certify_simple(kNatural, base, j) ==
                  nat.row_certified(j));
        }
        for (SequenceId seq : {kEven, kOdd}) {
            const DifferenceTable table(seq, base);
            for (int j = 0; j < L; ++j) {
                CHECK(digitgaps::certify_simple(seq, base, j) ==
                      table.row_certified(j));
            }
        }
        const DifferenceTable sq(kSquares, base);
        for (int j = 0; j < L; ++j) {
            CHECK(digitgaps::certify_faulhaber(base, j) ==
                  sq.row_certified(j));
        }
    }
}

TEST_CASE("predicted profiles carry the expected gap sets") {
    const auto natural10 = digitgaps::predict_profile(kNatural, Base(10));
    CHECK(natural10.gaps == std::set<int>{2, 4, 7, 9});
    CHECK(natural10.admissible == std::set<int>{0, 1, 3, 5, 6, 8});
    CHECK(natural10.method == ProfileMethod::difference_table);

    CHECK(digitgaps::predict_profile(kEven, Base(10)).admissible ==
          std::set<int>{0, 2, 6});
    CHECK(digitgaps::predict_profile(kOdd, Base(8)).gaps ==
          std::set<int>{2, 3, 5, 6, 7});
    CHECK(digitgaps::predict_profile(kEven, Base(5)).admissible.count(1) == 1);
    CHECK(digitgaps::predict_profile(kSquares, Base(10)).gaps ==
          std::set<int>{2, 3, 7, 8});
    CHECK(digitgaps::predict_profile(kSquares, Base(8)).gaps.empty());
}

TEST_CASE("profiles partition the digits and always admit zero") {
    for (SequenceId seq : {kNatural, kEven, kOdd, kSquares}) {
        for (int L = 2; L <= 36; ++L) {
            const auto profile = digitgaps::predict_profile(seq, Base(L));
            std::set<int> all;
            for (int j = 0; j < L; ++j) all.insert(j);
            std::set<int> joined = profile.admissible;
            joined.insert(profile.gaps.begin(), profile.gaps.end());
            CHECK(joined == all);
            CHECK(profile.admissible.size() + profile.gaps.size() ==
                  static_cast<std::size_t>(L));
            CHECK(profile.admissible.count(0) == 1);
        }
    }
}

TEST_CASE("even-base even totals admit only even digits") {
    for (int L = 2; L <= 36; L += 2) {
        const auto profile = digitgaps::predict_profile(kEven, Base(L));
        for (int j : profile.admissible) {
            CHECK(j % 2 == 0);
        }
    }
}

TEST_CASE("every squares mark reconstructs a concrete total") {
    // A mark at (j, i) promises some n == i (mod L) with total(n) ending
    // in j. The k-scan argument fixes m mod 6 only; this rebuilds a real
    // witness with m in 0..5 and, for unmarked cells, confirms that no m
    // in a window twice that size works either.
    for (int L = 2; L <= 16; ++L) {
        const Base base(L);
        const DifferenceTable table(kSquares, base);
        for (int j = 0; j < L; ++j) {
            for (int i = 0; i < L; ++i) {
                bool found = false;
                std::int64_t found_n = -1;
                for (std::int64_t m = 0; m <= 5 && !found; ++m) {
                    const std::int64_t n = i + static_cast<std::int64_t>(L) * m;
                    if (digitgaps::minor_total_closed(kSquares, n) % L == j) {
                        found = true;
                        found_n = n;
                    }
                }
                if (table.mark(j, i)) {
                    REQUIRE(found);
                    REQUIRE(found_n % L == i);
                    REQUIRE(digitgaps::minor_total_closed(kSquares, found_n) %
                                L ==
                            j);
                } else {
                    for (std::int64_t m = 0; m <= 11; ++m) {
                        const std::int64_t n =
                            i + static_cast<std::int64_t>(L) * m;
                        REQUIRE(digitgaps::minor_total_closed(kSquares, n) %
                                    L !=
                                j);
                    }
                }
            }
        }
    }
}

TEST_CASE("every natural mark reconstructs a concrete total") {
    for (int L = 2; L <= 16; ++L) {
        const Base base(L);
        const DifferenceTable table(kNatural, base);
        for (int j = 0; j < L; ++j) {
            for (int i = 0; i < L; ++i) {
                bool found = false;
                for (std::int64_t m = 0; m <= 1 && !found; ++m) {
                    const std::int64_t n = i + static_cast<std::int64_t>(L) * m;
                    if (digitgaps::minor_total_closed(kNatural, n) % L == j) {
                        found = true;
                    }
                }
                if (table.mark(j, i)) {
                    REQUIRE(found);
                } else {
                    for (std::int64_t m = 0; m <= 3; ++m) {
                        const std::int64_t n =
                            i + static_cast<std::int64_t>(L) * m;
                        REQUIRE(digitgaps::minor_total_closed(kNatural, n) %
                                    L !=
                                j);
                    }
                }
            }
        }
    }
}

TEST_CASE("even and odd marks are exactly the zero-residue cells") {
    for (SequenceId seq : {kEven, kOdd}) {
        for (int L = 2; L <= 16; ++L) {
            const DifferenceTable table(seq, Base(L));
            for (int j = 0; j < L; ++j) {
                for (int i = 0; i < L; ++i) {
                    const bool divides =
                        ((table.cell(j, i) % L) + L) % L == 0;
                    CHECK(table.mark(j, i) == divides);
                }
            }
        }
    }
}

TEST_CASE("closed-form labels name the totals") {
    CHECK(digitgaps::closed_form_label(kNatural) == "i(i+1)/2");
    CHECK(digitgaps::closed_form_label(kEven) == "i(i+1)");
    CHECK(digitgaps::closed_form_label(kOdd) == "i^2");
    CHECK(digitgaps::closed_form_label(kSquares) == "i(i+1)(2i+1)/6");
    CHECK_THROWS_AS(digitgaps::closed_form_label(kPrimes),
                    std::invalid_argument);
}
