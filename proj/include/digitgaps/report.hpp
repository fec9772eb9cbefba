#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "difftab.hpp"
#include "oracle.hpp"
#include "radix.hpp"
#include "seq.hpp"

namespace digitgaps {

/// Predicted vs ground-truth profiles across a set of bases.
struct GapReport {
    struct Entry {
        int base;
        ResidueProfile predicted;
        ResidueProfile oracle;
        bool agreement;
    };

    SequenceId seq;
    std::vector<Entry> entries;
};

inline GapReport make_gap_report(SequenceId seq,
                                 const std::vector<int>& bases) {
    if (!seq.has_closed_form()) {
        throw std::invalid_argument(
            "gap reports need a closed-form total; primes have none");
    }
    GapReport report{seq, {}};
    for (int b : bases) {
        const Base base(b);
        ResidueProfile predicted = predict_profile(seq, base);
        ResidueProfile truth = oracle_profile(seq, base);
        const bool agree = predicted.admissible == truth.admissible;
        report.entries.push_back(
            {b, std::move(predicted), std::move(truth), agree});
    }
    return report;
}

namespace detail {

inline std::string digits_spaced(const std::set<int>& digits) {
    std::string out;
    for (int d : digits) {
        if (!out.empty()) out.push_back(' ');
        out.push_back(digit_symbol(d));
    }
    return out;
}

inline std::string digits_braced(const std::set<int>& digits) {
    return "{" + digits_spaced(digits) + "}";
}

inline std::string rstrip(std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line;
}

}  // namespace detail

inline std::string render_table_ascii(const DifferenceTable& table) {
    const int L = table.size();
    std::size_t w = 1;
    for (int i = 0; i < L; ++i) {
        w = std::max(w, std::to_string(table.header(i)).size());
        for (int j = 0; j < L; ++j) {
            w = std::max(w, std::to_string(table.cell(j, i)).size());
        }
    }
    std::ostringstream out;
    out << "f(i) = " << closed_form_label(table.seq()) << "  base=" << L
        << "\n";
    {
        std::ostringstream line;
        line << "    j |";
        for (int i = 0; i < L; ++i) {
            line << ' ' << std::setw(static_cast<int>(w)) << table.header(i)
                 << ' ';
        }
        out << detail::rstrip(line.str()) << "\n";
    }
    out << "------+" << std::string(static_cast<std::size_t>(L) * (w + 2), '-')
        << "\n";
    for (int j = 0; j < L; ++j) {
        std::ostringstream line;
        line << (table.row_certified(j) ? '!' : ' ') << "   "
             << digit_symbol(j) << " |";
        for (int i = 0; i < L; ++i) {
            line << ' ' << std::setw(static_cast<int>(w)) << table.cell(j, i)
                 << (table.mark(j, i) ? '*' : ' ');
        }
        out << detail::rstrip(line.str()) << "\n";
    }
    return out.str();
}

inline std::string render_profile_ascii(const ResidueProfile& profile) {
    std::ostringstream out;
    out << profile.seq.name() << " base " << profile.base.value() << " ("
        << method_name(profile.method) << ")\n";
    const std::string adm = detail::digits_spaced(profile.admissible);
    const std::string gap = detail::digits_spaced(profile.gaps);
    out << "admissible: " << (adm.empty() ? "(none)" : adm) << "\n";
    out << "gaps: " << (gap.empty() ? "(none)" : gap) << "\n";
    return out.str();
}

inline std::string render_report_ascii(const GapReport& report) {
    std::ostringstream out;
    out << "gap report: " << report.seq.name() << "\n";
    for (const auto& entry : report.entries) {
        out << "  base " << std::setw(2) << entry.base << ": predicted "
            << detail::digits_braced(entry.predicted.gaps) << " oracle "
            << detail::digits_braced(entry.oracle.gaps)
            << (entry.agreement ? " agree" : " DISAGREE") << "\n";
    }
    return out.str();
}

inline std::string render_scan_ascii(
    const std::vector<ResidueProfile>& profiles) {
    std::ostringstream out;
    if (!profiles.empty()) {
        out << "scan: " << profiles.front().seq.name() << "\n";
    }
    for (const auto& profile : profiles) {
        out << "  base " << std::setw(2) << profile.base.value() << ": gaps "
            << detail::digits_braced(profile.gaps) << "\n";
    }
    return out.str();
}

inline std::string render_histogram_ascii(const DigitHistogram& hist) {
    const int L = hist.base.value();
    std::int64_t maxc = 0;
    for (std::int64_t c : hist.counts) maxc = std::max(maxc, c);
    const std::size_t cw = std::to_string(maxc).size();
    std::ostringstream out;
    out << "histogram: " << hist.seq.name() << " base " << L << " ("
        << hist.n_terms << " terms)\n";
    for (int d = 0; d < L; ++d) {
        const std::int64_t count = hist.counts[static_cast<std::size_t>(d)];
        std::ostringstream line;
        line << digit_symbol(d) << " | " << std::setw(static_cast<int>(cw))
             << count << ' ';
        if (count > 0) {
            const auto bar = std::max<std::int64_t>(1, count * 40 / maxc);
            line << std::string(static_cast<std::size_t>(bar), '#');
        }
        out << detail::rstrip(line.str()) << "\n";
    }
    return out.str();
}

inline std::string render_witness_ascii(
    Base base, int j, const std::optional<MinorTotal>& result) {
    std::ostringstream out;
    if (result) {
        out << "n=" << result->n << " total=" << result->value << " ("
            << render(result->value, base) << " in base " << base.value()
            << ")\n";
    } else {
        out << "absent (digit " << j << " is a gap in base " << base.value()
            << ")\n";
    }
    return out.str();
}

inline nlohmann::ordered_json profile_json(const ResidueProfile& profile) {
    nlohmann::ordered_json doc;
    doc["sequence"] = profile.seq.name();
    doc["base"] = profile.base.value();
    doc["method"] = method_name(profile.method);
    doc["admissible"] = profile.admissible;
    doc["gaps"] = profile.gaps;
    return doc;
}

inline std::string emit_json(const ResidueProfile& profile) {
    return profile_json(profile).dump(2) + "\n";
}

inline nlohmann::ordered_json table_json(const DifferenceTable& table) {
    const int L = table.size();
    nlohmann::ordered_json doc;
    doc["sequence"] = table.seq().name();
    doc["base"] = L;
    doc["closed_form"] = closed_form_label(table.seq());
    auto header = nlohmann::ordered_json::array();
    for (int i = 0; i < L; ++i) header.push_back(table.header(i));
    doc["header"] = std::move(header);
    auto rows = nlohmann::ordered_json::array();
    for (int j = 0; j < L; ++j) {
        nlohmann::ordered_json row;
        row["j"] = j;
        row["certified"] = table.row_certified(j);
        auto cells = nlohmann::ordered_json::array();
        auto marked = nlohmann::ordered_json::array();
        for (int i = 0; i < L; ++i) {
            cells.push_back(table.cell(j, i));
            if (table.mark(j, i)) marked.push_back(i);
        }
        row["cells"] = std::move(cells);
        row["marked_columns"] = std::move(marked);
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

inline std::string emit_json(const DifferenceTable& table) {
    return table_json(table).dump(2) + "\n";
}

inline nlohmann::ordered_json histogram_json(const DigitHistogram& hist) {
    nlohmann::ordered_json doc;
    doc["sequence"] = hist.seq.name();
    doc["base"] = hist.base.value();
    doc["terms"] = hist.n_terms;
    doc["counts"] = hist.counts;
    return doc;
}

inline std::string emit_json(const DigitHistogram& hist) {
    return histogram_json(hist).dump(2) + "\n";
}

inline nlohmann::ordered_json report_json(const GapReport& report) {
    nlohmann::ordered_json doc;
    doc["sequence"] = report.seq.name();
    auto bases = nlohmann::ordered_json::array();
    for (const auto& entry : report.entries) {
        nlohmann::ordered_json item;
        item["base"] = entry.base;
        item["predicted"] = {{"admissible", entry.predicted.admissible},
                             {"gaps", entry.predicted.gaps}};
        item["oracle"] = {{"admissible", entry.oracle.admissible},
                          {"gaps", entry.oracle.gaps}};
        item["agreement"] = entry.agreement;
        bases.push_back(std::move(item));
    }
    doc["bases"] = std::move(bases);
    return doc;
}

inline std::string emit_json(const GapReport& report) {
    return report_json(report).dump(2) + "\n";
}

inline nlohmann::ordered_json scan_json(
    const std::vector<ResidueProfile>& profiles) {
    nlohmann::ordered_json doc;
    if (!profiles.empty()) doc["sequence"] = profiles.front().seq.name();
    auto bases = nlohmann::ordered_json::array();
    for (const auto& profile : profiles) {
        nlohmann::ordered_json item;
        item["base"] = profile.base.value();
        item["admissible"] = profile.admissible;
        item["gaps"] = profile.gaps;
        bases.push_back(std::move(item));
    }
    doc["bases"] = std::move(bases);
    return doc;
}

inline std::string emit_scan_json(const std::vector<ResidueProfile>& profiles) {
    return scan_json(profiles).dump(2) + "\n";
}

inline std::string emit_witness_json(SequenceId seq, Base base, int j,
                                     const std::optional<MinorTotal>& result) {
    nlohmann::ordered_json doc;
    doc["sequence"] = seq.name();
    doc["base"] = base.value();
    doc["digit"] = j;
    doc["found"] = result.has_value();
    if (result) {
        doc["n"] = result->n;
        doc["total"] = result->value.str();
        doc["rendered"] = render(result->value, base);
    }
    return doc.dump(2) + "\n";
}

/// Two-column CSV of a histogram, one row per digit value.
inline std::string emit_csv(const DigitHistogram& hist) {
    std::ostringstream out;
    out << "digit,count\n";
    for (int d = 0; d < hist.base.value(); ++d) {
        out << d << ',' << hist.counts[static_cast<std::size_t>(d)] << "\n";
    }
    return out.str();
}

/// Standalone SVG bar chart of a histogram. Integer geometry only, so
/// identical inputs give byte-identical output.
inline std::string emit_histogram_svg(const DigitHistogram& hist) {
    const int L = hist.base.value();
    const int x0 = 40;
    const int y1 = 324;
    const int plot_w = 584;
    const int plot_h = 300;
    const int slot = plot_w / L;
    const int bar_w = std::max(1, slot * 2 / 3);
    std::int64_t maxc = 0;
    for (std::int64_t c : hist.counts) maxc = std::max(maxc, c);
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "viewBox=\"0 0 640 360\">\n"
        << "  <style>\n"
        << "    .bar { fill: #4477aa; }\n"
        << "    .tick { fill: #99aabb; }\n"
        << "    .label { font: 12px sans-serif; text-anchor: middle; }\n"
        << "    .title { font: 14px sans-serif; text-anchor: middle; }\n"
        << "  </style>\n"
        << "  <text class=\"title\" x=\"320\" y=\"16\">" << hist.seq.name()
        << " base " << L << " (" << hist.n_terms << " terms)</text>\n";
    for (int d = 0; d < L; ++d) {
        const std::int64_t count = hist.counts[static_cast<std::size_t>(d)];
        const int x = x0 + d * slot + (slot - bar_w) / 2;
        if (count > 0) {
            const int h = static_cast<int>(
                std::max<std::int64_t>(1, count * plot_h / maxc));
            svg << "  <rect class=\"bar\" x=\"" << x << "\" y=\"" << (y1 - h)
                << "\" width=\"" << bar_w << "\" height=\"" << h << "\"/>\n";
        } else {
            svg << "  <rect class=\"tick\" x=\"" << x << "\" y=\"" << (y1 - 2)
                << "\" width=\"" << bar_w << "\" height=\"2\"/>\n";
        }
        svg << "  <text class=\"label\" x=\"" << (x + bar_w / 2) << "\" y=\""
            << (y1 + 16) << "\">" << digit_symbol(d) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace digitgaps
