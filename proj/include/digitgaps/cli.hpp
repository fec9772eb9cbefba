#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "difftab.hpp"
#include "oracle.hpp"
#include "radix.hpp"
#include "report.hpp"
#include "seq.hpp"

namespace digitgaps {

enum class Command { hist, table, predict, verify, scan, witness };

enum class OutputFormat { ascii, csv, json, svg };

struct CliConfig {
    Command command;
    std::optional<SequenceId> seq;  // absent only for `verify --all`
    std::vector<int> bases;
    std::int64_t n_terms = 100;
    OutputFormat format = OutputFormat::ascii;
    std::optional<int> digit;  // witness target
    std::optional<std::string> output_path;
    bool all = false;  // verify every closed-form sequence
};

/// Base list syntax: comma-separated items, each "n" or "lo..hi".
inline std::vector<int> parse_base_list(std::string_view spec) {
    std::vector<int> bases;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string_view::npos) comma = spec.size();
        const std::string_view item = spec.substr(pos, comma - pos);
        const std::size_t dots = item.find("..");
        const auto to_int = [](std::string_view text) {
            if (text.empty()) {
                throw std::invalid_argument("empty base in list");
            }
            int value = 0;
            for (char c : text) {
                if (c < '0' || c > '9') {
                    throw std::invalid_argument(
                        "invalid base '" + std::string(text) +
                        "'; expected n or lo..hi");
                }
                value = value * 10 + (c - '0');
                if (value > 1000) break;
            }
            return value;
        };
        if (dots == std::string_view::npos) {
            bases.push_back(to_int(item));
        } else {
            const int lo = to_int(item.substr(0, dots));
            const int hi = to_int(item.substr(dots + 2));
            if (lo > hi) {
                throw std::invalid_argument("base range " + std::string(item) +
                                            " is empty");
            }
            for (int b = lo; b <= hi; ++b) bases.push_back(b);
        }
        pos = comma + 1;
    }
    if (bases.empty()) {
        throw std::invalid_argument("no bases given");
    }
    for (int b : bases) Base{b};  // range check, throws out_of_range
    return bases;
}

/// Digit argument: a decimal value or a single 0-9A-Z symbol.
inline int parse_digit_arg(std::string_view text) {
    if (!text.empty() &&
        std::all_of(text.begin(), text.end(),
                    [](char c) { return c >= '0' && c <= '9'; })) {
        int value = 0;
        for (char c : text) {
            value = value * 10 + (c - '0');
            if (value > 1000) break;
        }
        return value;
    }
    if (text.size() == 1) {
        const int value = symbol_value(text[0]);
        if (value >= 0) return value;
    }
    throw std::invalid_argument("invalid digit '" + std::string(text) + "'");
}

namespace detail {

inline OutputFormat parse_format(std::string_view name) {
    if (name == "ascii") return OutputFormat::ascii;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    if (name == "svg") return OutputFormat::svg;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

inline void require_format(Command, OutputFormat format,
                           std::initializer_list<OutputFormat> allowed,
                           const char* what) {
    for (OutputFormat f : allowed) {
        if (format == f) return;
    }
    throw std::invalid_argument(std::string("format not supported for ") +
                                what);
}

inline Base single_base(const CliConfig& config) {
    if (config.bases.size() != 1) {
        throw std::invalid_argument("expected exactly one base");
    }
    return Base(config.bases.front());
}

inline SequenceId required_seq(const CliConfig& config) {
    if (!config.seq) {
        throw std::invalid_argument("a sequence is required");
    }
    return *config.seq;
}

inline void deliver(const std::string& text,
                    const std::optional<std::string>& path,
                    std::ostream& out) {
    if (path) {
        std::ofstream file(*path, std::ios::binary);
        if (!file) {
            throw std::invalid_argument("cannot open output file '" + *path +
                                        "'");
        }
        file << text;
        if (!file) {
            throw std::invalid_argument("failed writing output file '" +
                                        *path + "'");
        }
    } else {
        out << text;
    }
}

}  // namespace detail

/// Execute a parsed command. Returns the process exit code: 0 on
/// success, 1 when verification finds a disagreement. Usage errors
/// throw invalid_argument or out_of_range.
inline int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    switch (config.command) {
        case Command::predict: {
            detail::require_format(config.command, config.format,
                                   {OutputFormat::ascii, OutputFormat::json},
                                   "predict");
            const SequenceId seq = detail::required_seq(config);
            const Base base = detail::single_base(config);
            const ResidueProfile profile = predict_profile(seq, base);
            detail::deliver(config.format == OutputFormat::json
                                ? emit_json(profile)
                                : render_profile_ascii(profile),
                            config.output_path, out);
            return 0;
        }
        case Command::table: {
            detail::require_format(config.command, config.format,
                                   {OutputFormat::ascii, OutputFormat::json},
                                   "table");
            const SequenceId seq = detail::required_seq(config);
            const Base base = detail::single_base(config);
            const DifferenceTable table(seq, base);
            detail::deliver(config.format == OutputFormat::json
                                ? emit_json(table)
                                : render_table_ascii(table),
                            config.output_path, out);
            return 0;
        }
        case Command::hist: {
            const SequenceId seq = detail::required_seq(config);
            const Base base = detail::single_base(config);
            const DigitHistogram hist =
                empirical_histogram(seq, base, config.n_terms);
            std::string text;
            switch (config.format) {
                case OutputFormat::ascii:
                    text = render_histogram_ascii(hist);
                    break;
                case OutputFormat::csv:
                    text = emit_csv(hist);
                    break;
                case OutputFormat::json:
                    text = emit_json(hist);
                    break;
                case OutputFormat::svg:
                    text = emit_histogram_svg(hist);
                    break;
            }
            detail::deliver(text, config.output_path, out);
            return 0;
        }
        case Command::witness: {
            detail::require_format(config.command, config.format,
                                   {OutputFormat::ascii, OutputFormat::json},
                                   "witness");
            const SequenceId seq = detail::required_seq(config);
            const Base base = detail::single_base(config);
            if (!config.digit) {
                throw std::invalid_argument("witness needs --digit");
            }
            const int j = *config.digit;
            if (j < 0 || j >= base.value()) {
                throw std::out_of_range("digit " + std::to_string(j) +
                                        " out of range for base " +
                                        std::to_string(base.value()));
            }
            const auto result = witness(seq, base, j);
            detail::deliver(config.format == OutputFormat::json
                                ? emit_witness_json(seq, base, j, result)
                                : render_witness_ascii(base, j, result),
                            config.output_path, out);
            return 0;
        }
        case Command::scan: {
            detail::require_format(config.command, config.format,
                                   {OutputFormat::ascii, OutputFormat::json},
                                   "scan");
            const SequenceId seq = detail::required_seq(config);
            std::vector<ResidueProfile> profiles;
            profiles.reserve(config.bases.size());
            for (int b : config.bases) {
                profiles.push_back(predict_profile(seq, Base(b)));
            }
            detail::deliver(config.format == OutputFormat::json
                                ? emit_scan_json(profiles)
                                : render_scan_ascii(profiles),
                            config.output_path, out);
            return 0;
        }
        case Command::verify: {
            detail::require_format(config.command, config.format,
                                   {OutputFormat::ascii, OutputFormat::json},
                                   "verify");
            std::vector<SequenceId> seqs;
            if (config.all) {
                seqs = {SequenceId(SequenceKind::natural),
                        SequenceId(SequenceKind::even),
                        SequenceId(SequenceKind::odd),
                        SequenceId(SequenceKind::squares)};
            } else {
                seqs = {detail::required_seq(config)};
            }
            std::vector<GapReport> reports;
            reports.reserve(seqs.size());
            int disagreements = 0;
            int checked = 0;
            for (SequenceId seq : seqs) {
                reports.push_back(make_gap_report(seq, config.bases));
                for (const auto& entry : reports.back().entries) {
                    ++checked;
                    if (!entry.agreement) ++disagreements;
                }
            }
            std::string text;
            if (config.format == OutputFormat::json) {
                if (config.all) {
                    auto doc = nlohmann::ordered_json::array();
                    for (const auto& report : reports) {
                        doc.push_back(report_json(report));
                    }
                    text = doc.dump(2) + "\n";
                } else {
                    text = emit_json(reports.front());
                }
            } else {
                std::ostringstream ascii;
                for (std::size_t k = 0; k < reports.size(); ++k) {
                    if (k > 0) ascii << "\n";
                    ascii << render_report_ascii(reports[k]);
                }
                ascii << "verified " << checked << " profiles: ";
                if (disagreements == 0) {
                    ascii << "all agree\n";
                } else {
                    ascii << disagreements << " disagreements\n";
                }
                text = ascii.str();
            }
            detail::deliver(text, config.output_path, out);
            if (disagreements > 0) {
                err << "verification failed: " << disagreements
                    << " profile(s) disagree\n";
                return 1;
            }
            return 0;
        }
    }
    throw std::logic_error("unreachable command");
}

/// Parse argv and run. Exit codes: 0 success (including --help),
/// 1 verification disagreement, 2 usage error.
inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"unit's-digit profiles of running totals"};
    app.require_subcommand(1);

    struct Raw {
        std::string seq;
        std::string base;
        std::string bases;
        std::string digit;
        std::string format = "ascii";
        std::string output;
        std::int64_t terms = 100;
        bool all = false;
    };
    Raw raw;

    const auto add_common = [&raw](CLI::App* sub) {
        sub->add_option("--format,-f", raw.format,
                        "output format (ascii, csv, json, svg)");
        sub->add_option("--output,-o", raw.output, "write to a file");
    };
    const auto add_seq = [&raw](CLI::App* sub, bool required) {
        auto* opt = sub->add_option(
            "--seq,-s", raw.seq,
            "sequence (natural, even, odd, squares, primes)");
        if (required) opt->required();
    };
    const auto add_base = [&raw](CLI::App* sub) {
        sub->add_option("--base,-b", raw.base, "radix, 2..36")->required();
    };

    CLI::App* hist = app.add_subcommand(
        "hist", "count unit's digits over the first N totals");
    add_seq(hist, true);
    add_base(hist);
    hist->add_option("--terms,--n,-n", raw.terms, "how many totals to count");
    add_common(hist);

    CLI::App* table =
        app.add_subcommand("table", "show the difference table for a base");
    add_seq(table, true);
    add_base(table);
    add_common(table);

    CLI::App* predict = app.add_subcommand(
        "predict", "predict admissible digits and gaps for a base");
    add_seq(predict, true);
    add_base(predict);
    add_common(predict);

    CLI::App* verify = app.add_subcommand(
        "verify", "check predictions against the period oracle");
    add_seq(verify, false);
    verify->add_option("--bases,-B", raw.bases,
                       "bases to check (n, lo..hi, comma list)");
    verify->add_flag("--all", raw.all, "verify every closed-form sequence");
    add_common(verify);

    CLI::App* scan = app.add_subcommand(
        "scan", "predict gaps across a range of bases");
    add_seq(scan, true);
    scan->add_option("--bases,-B", raw.bases,
                     "bases to scan (n, lo..hi, comma list)");
    add_common(scan);

    CLI::App* witness = app.add_subcommand(
        "witness", "find the smallest total ending in a digit");
    add_seq(witness, true);
    add_base(witness);
    witness->add_option("--digit,-d", raw.digit, "target digit")->required();
    add_common(witness);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        CliConfig config;
        if (app.got_subcommand(hist)) config.command = Command::hist;
        else if (app.got_subcommand(table)) config.command = Command::table;
        else if (app.got_subcommand(predict)) config.command = Command::predict;
        else if (app.got_subcommand(verify)) config.command = Command::verify;
        else if (app.got_subcommand(scan)) config.command = Command::scan;
        else config.command = Command::witness;

        if (!raw.seq.empty()) config.seq = SequenceId::from_name(raw.seq);
        if (!raw.base.empty()) {
            config.bases = parse_base_list(raw.base);
            if (config.bases.size() != 1) {
                throw std::invalid_argument("--base takes a single radix");
            }
        }
        if (!raw.bases.empty()) config.bases = parse_base_list(raw.bases);
        if (config.bases.empty() &&
            (config.command == Command::verify ||
             config.command == Command::scan)) {
            for (int b = 2; b <= 16; ++b) config.bases.push_back(b);
        }
        config.n_terms = raw.terms;
        config.format = detail::parse_format(raw.format);
        if (!raw.digit.empty()) config.digit = parse_digit_arg(raw.digit);
        if (!raw.output.empty()) config.output_path = raw.output;
        config.all = raw.all;

        return run(config, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace digitgaps
