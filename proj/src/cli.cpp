#include "maksarum/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "maksarum/circle.hpp"
#include "maksarum/errors.hpp"
#include "maksarum/partitions.hpp"
#include "maksarum/survey.hpp"
#include "maksarum/tablet.hpp"

namespace maksarum::cli {

int decimal_precision() {
    const char* env = std::getenv("MAKSARUM_PRECISION");
    if (env == nullptr) return 30;
    int digits = 0;
    const char* end = env + std::strlen(env);
    auto [stop, ec] = std::from_chars(env, end, digits);
    if (ec != std::errc{} || stop != end) return 30;
    return std::clamp(digits, 15, 100);
}

namespace {

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { table, csv, tsv };

struct RunConfig {
    std::uint64_t M = 12;
    std::optional<std::uint64_t> Q;
    std::string Q_range;
    std::string Q_set;
    bool multiset = false;
    std::string band = "full";
    std::string interval = "closed";
    std::optional<unsigned> bounded;
    std::string X_min = "0";
    std::string X_max = "12";
    Format format = Format::table;
    std::string out_path;
    std::optional<double> histogram_width;
    std::string csv_path;
    unsigned jobs = 1;
    unsigned digits = 8;
    bool decimal = false;
    bool report = false;
    bool show_errors = false;
    bool congruence = false;
    bool primes = false;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void emit(std::ostream& os, const Table& t, Format format) {
    if (format != Format::table) {
        const char sep = format == Format::csv ? ',' : '\t';
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? std::string(1, sep) : "") << cells[i];
            os << '\n';
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
        return;
    }
    std::vector<std::size_t> width(t.header.size());
    auto widen = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
    };
    widen(t.header);
    for (const auto& r : t.rows) widen(r);
    auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) text += "  ";
            text += cells[i];
            if (i + 1 < cells.size()) text.append(width[i] - cells[i].size(), ' ');
        }
        os << text << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
}

// Standard output unless a path was given.
class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw error("cannot open '" + path + "' for writing");
    }

    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

    void finish() {
        stream().flush();
        if (!stream()) throw error("write failed");
    }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

std::string num(const Integer& n, bool decimal) {
    return decimal ? n.str() : format(Sexagesimal::from_integer(n));
}

std::string num(const ExactRatio& r, bool decimal) {
    if (!decimal) return format(Sexagesimal::from_ratio(r));
    return r.is_integer() ? r.whole().str() : to_decimal_rounded(r, 15);
}

std::string triple_text(const Triple& t, bool decimal) {
    return "(" + num(t.a, decimal) + ", " + num(t.b, decimal) + ", " + num(t.d, decimal) + ")";
}

// Sexagesimal when the text carries a sexagesimal separator, otherwise an
// integer, a fraction n/d or a decimal fraction.
ExactRatio parse_number(const std::string& text) {
    try {
        if (text.find_first_of("~;: ") != std::string::npos) return parse_sexagesimal(text).value();
        return parse_ratio(text);
    } catch (const error& e) {
        throw usage_error(e.what());
    }
}

std::uint64_t parse_count(const std::string& text) {
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    auto [stop, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || stop != end) throw usage_error("'" + text + "' is not a whole number");
    return v;
}

std::vector<std::uint64_t> survey_scope(const RunConfig& c) {
    if (!c.Q_range.empty()) {
        const auto colon = c.Q_range.find(':');
        if (colon == std::string::npos) throw usage_error("--Q-range takes first:last");
        const auto first = parse_count(c.Q_range.substr(0, colon));
        const auto last = parse_count(c.Q_range.substr(colon + 1));
        if (first < 1 || first > last) throw usage_error("--Q-range needs 1 <= first <= last");
        return q_range(first, last);
    }
    if (c.Q) return {*c.Q};
    return c.multiset ? p322_q_multiset() : p322_q_set();
}

IntervalMode interval_mode(const RunConfig& c) {
    return c.interval == "open" ? IntervalMode::open : IntervalMode::closed;
}

Band band_of(const RunConfig& c) {
    if (c.band == "pi6_pi4") return Band::pi6_pi4;
    if (c.band == "p322") return Band::p322;
    return Band::full;
}

std::string ratio_text(std::uint64_t part, std::uint64_t whole) {
    if (whole == 0) return "n/a";
    return to_decimal_rounded(ExactRatio(Integer(part), Integer(whole)), 6);
}

int cmd_reconstruct(const RunConfig& c, std::ostream& os) {
    int verified = 0;
    std::vector<Reconstruction> results;
    for (const auto& row : corrected_table()) {
        results.push_back(reconstruct(row));
        if (results.back().passed()) ++verified;
    }
    const bool all = verified == static_cast<int>(results.size());

    if (c.format != Format::table) {
        std::string tsv = tablet_tsv();
        if (c.format == Format::csv) std::ranges::replace(tsv, '\t', ',');
        os << tsv;
        return all ? 0 : 1;
    }

    const auto& table = corrected_table();
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        const auto& row = table[i];
        os << "row " << row.index << ": " << (r.passed() ? "PASS" : "FAIL") << "  x=" << num(r.x, c.decimal)
           << "  Q=" << num(row.Q, c.decimal) << "  " << triple_text(row.triple, c.decimal)
           << "  fourth=" << format(fourth_column(row.triple).place_value()) << '\n';
        for (const auto& check : r.checks)
            if (!check.pass)
                os << "  " << check.field << ": expected " << check.expected << ", got " << check.actual << '\n';
    }
    os << verified << "/" << results.size() << " rows verified\n";

    if (c.show_errors) {
        os << "\nscribal errors\n";
        for (const auto& e : explain_errors()) {
            os << "row " << e.row << ": " << e.derivation << "  [" << to_string(e.kind) << ", carved "
               << e.field << " = " << num(e.carved, c.decimal) << ", "
               << (e.matches() ? "reproduced" : "not reproduced") << "]\n";
            for (const auto& repair : e.repairs)
                os << "  repair by " << repair.method << ": " << triple_text(repair.triple, c.decimal) << '\n';
        }
        for (const auto& row : table)
            if (!row.note.empty()) os << "row " << row.index << " note: " << row.note << '\n';
    }

    if (c.congruence) {
        const auto report = congruence_report();
        os << "\nresidues mod 60\n";
        for (const auto& l : report.lines)
            os << "row " << l.row << ": a=" << l.a << " b=" << l.b << " d=" << l.d
               << (l.identity ? "  a²+b²≡d²" : "  identity fails") << (l.a_in_set ? "  a in C" : "")
               << (l.d_in_set ? "  d in C" : "") << '\n';
        os << report.members << " of " << report.total << " residues in C\n";
    }

    if (c.primes) {
        const auto report = prime_report();
        os << "\nprimality\n";
        for (const auto& l : report.lines)
            os << "row " << l.row << ": a=" << l.a << (l.a_prime ? " prime" : "") << "  d=" << l.d
               << (l.d_prime ? " prime" : "") << '\n';
        os << report.d_primes << " prime diagonals, " << report.a_primes << " prime short sides\n";
    }
    return all ? 0 : 1;
}

int cmd_generate(const RunConfig& c, std::ostream& os) {
    if (c.bounded) {
        const Interval range{parse_number(c.X_min), parse_number(c.X_max)};
        if (range.high < range.low) throw usage_error("--Xmin exceeds --Xmax");
        const auto rows = enumerate_bounded(c.M, *c.bounded, range);
        Table t;
        if (c.decimal) t.header = {"place", "b", "d", "a", "short_ratio"};
        else t.header = {"place", "X", "Y", "A", "D", "Q", "a", "b", "d"};
        int place = 0;
        for (const auto& r : rows) {
            const Triple& tr = r.scale.triple;
            const std::string p = std::to_string(++place);
            if (c.decimal)
                t.rows.push_back({p, tr.b.str(), tr.d.str(), tr.a.str(),
                                  to_decimal_rounded(ExactRatio(tr.a * tr.a, tr.b * tr.b), 15)});
            else
                t.rows.push_back({p, num(r.pair.X(), false), num(r.pair.Y(), false), num(r.sides.A, false),
                                  num(r.sides.D, false), num(r.scale.Q, false), num(tr.a, false), num(tr.b, false),
                                  num(tr.d, false)});
        }
        emit(os, t, c.format);
        return 0;
    }
    if (!c.Q) throw usage_error("generate needs --Q or --bounded");

    Table t{{"x", "y", "b", "a", "d", "a_squared", "fourth"}, {}};
    for (const auto& r : enumerate({*c.Q}, c.M)) {
        const auto& s = r.solution;
        std::string fourth;
        if (c.decimal) {
            if (auto f = reciprocal_fourth(s.triple)) fourth = f->coefficient.str() + "S-" + std::to_string(f->shift);
        } else if (s.fourth) {
            fourth = format(s.fourth->place_value().to_sexagesimal());
        }
        t.rows.push_back({num(s.x, c.decimal), num(s.y, c.decimal), num(s.triple.b, c.decimal),
                          num(s.triple.a, c.decimal), num(s.triple.d, c.decimal),
                          num(Integer(s.triple.a * s.triple.a), c.decimal), fourth});
    }
    emit(os, t, c.format);
    return 0;
}

int cmd_survey(const RunConfig& c, std::ostream& out) {
    const auto records = enumerate(survey_scope(c), c.M, c.jobs);
    const IntervalMode mode = interval_mode(c);

    const bool exporting = c.histogram_width || !c.csv_path.empty();
    if (c.report || !exporting) {
        const SurveyStats s = stats(records, mode);
        out << s.total << ' ' << s.pi6_pi4 << ' ' << s.p322 << " / " << s.distinct_total << ' ' << s.distinct_pi6_pi4
            << ' ' << s.distinct_p322 << '\n';
        out << "band/total " << ratio_text(s.pi6_pi4, s.total) << '\n';
        out << "window/total " << ratio_text(s.p322, s.total) << '\n';
        out << "window/band " << ratio_text(s.p322, s.pi6_pi4) << '\n';
    }

    const auto selected = band_filter(records, band_of(c), mode);
    if (!c.csv_path.empty()) {
        Output csv(c.csv_path, out);
        csv.stream() << survey_csv_header() << '\n';
        for (const auto& r : selected) csv.stream() << survey_csv_line(r) << '\n';
        csv.finish();
    }
    if (c.histogram_width) {
        Output hist(c.out_path, out);
        hist.stream() << histogram(selected, *c.histogram_width).csv();
        hist.finish();
    }
    return 0;
}

int cmd_partitions(const RunConfig& c, std::ostream& os) {
    const ExactRatio square(Integer(c.M) * c.M);
    Table t{{"n", "nbar", "X", "Y"}, {}};
    for (const auto& p : standard_table()) {
        const ExactRatio X = p.n.value();
        t.rows.push_back({num(X, c.decimal), num(p.nbar.value(), c.decimal), num(X, c.decimal),
                          num(square / X, c.decimal)});
    }
    emit(os, t, c.format);
    return 0;
}

int cmd_pi(const RunConfig& c, std::ostream& os) {
    const int precision = decimal_precision();
    Table t{{"k", "truncation", "colon", "fraction", "error"}, {}};
    for (unsigned k = 1; k <= c.digits; ++k) {
        const PiApproximation p = pi_digits(k);
        // Normalization drops trailing zero places; a truncation shows all k.
        const auto padding = static_cast<std::size_t>(static_cast<int>(k) - p.digits.frac_len());
        std::string paper = format(p.digits);
        std::string colon = format(p.digits, Style::colon);
        for (std::size_t i = 0; i < padding; ++i) {
            paper += "~00";
            colon += ":00";
        }
        t.rows.push_back({std::to_string(k), paper, colon, p.value().str(), decimal_string(p.error, precision)});
    }
    emit(os, t, c.format);
    if (c.format == Format::table) {
        const RingRatio ring = outer_ring_ratio();
        os << "pi = " << decimal_string(pi_decimal(), precision) << '\n';
        os << "area correction 3/pi = " << decimal_string(area_correction(), precision) << '\n';
        os << "outer ring sqrt(pi/3) = " << decimal_string(ring.ratio, precision) << "  truncated "
           << format(ring.truncation) << '\n';
    }
    return 0;
}

int cmd_giza(const RunConfig& c, std::ostream& os) {
    const ExactRatio X = parse_sexagesimal("05.~49~55~12").value();
    const auto rows = enumerate_bounded(12, 4, Interval{X, X});
    if (rows.size() != 1) throw error("the four-place enumeration does not contain the Giza generator");
    const BoundedSolution& g = rows.front();
    const Triple& t = g.scale.triple;
    const Decimal angle =
        atan(Decimal(t.b.str()) / Decimal(t.a.str())) * Decimal(180) / pi_decimal();
    os << "X = " << num(g.pair.X(), c.decimal) << '\n';
    os << "Y = " << num(g.pair.Y(), c.decimal) << '\n';
    os << "A = " << num(g.sides.A, c.decimal) << '\n';
    os << "D = " << num(g.sides.D, c.decimal) << '\n';
    os << "Q = " << num(g.scale.Q, c.decimal) << '\n';
    os << "triple = " << triple_text(t, c.decimal) << '\n';
    os << "angle_deg = " << decimal_string(angle, decimal_precision()) << '\n';
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact base-60 toolkit for the factor-12 triple algorithm and Plimpton 322", "maksarum"};
    app.require_subcommand(1);

    RunConfig c;
    std::string format_name = "table";
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "table, csv or tsv")
            ->check(CLI::IsMember({"table", "csv", "tsv"}));
        sub->add_option("--out", c.out_path, "Write to this file instead of standard output");
        sub->add_flag("--decimal", c.decimal, "Decimal numbers instead of sexagesimal");
    };

    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Verify the 15 corrected tablet rows");
    reconstruct_cmd->add_flag("--show-errors", c.show_errors, "Reproduce the scribal errors");
    reconstruct_cmd->add_flag("--congruence", c.congruence, "Residues mod 60 of a, b, d");
    reconstruct_cmd->add_flag("--primes", c.primes, "Primality of a and d");
    add_output(reconstruct_cmd);

    auto* generate_cmd = app.add_subcommand("generate", "Integer solutions for one Q, or bounded generators");
    auto* q_opt = generate_cmd->add_option("--Q", c.Q, "Scale generator")->check(CLI::PositiveNumber);
    generate_cmd->add_option("--M", c.M, "Bundling factor")->check(CLI::PositiveNumber);
    auto* bounded_opt =
        generate_cmd->add_option("--bounded", c.bounded, "Fractional places of X")->check(CLI::Range(0u, 12u));
    generate_cmd->add_option("--Xmin", c.X_min, "Lowest X (closed)");
    generate_cmd->add_option("--Xmax", c.X_max, "Highest X (closed)");
    q_opt->excludes(bounded_opt);
    add_output(generate_cmd);

    auto* survey_cmd = app.add_subcommand("survey", "Counts over a range or set of Q");
    auto* range_opt = survey_cmd->add_option("--Q-range", c.Q_range, "first:last");
    auto* set_opt = survey_cmd->add_option("--Q-set", c.Q_set, "Named set")->check(CLI::IsMember({"p322"}));
    auto* single_opt = survey_cmd->add_option("--Q", c.Q, "One scale generator")->check(CLI::PositiveNumber);
    auto* multi_opt = survey_cmd->add_flag("--multiset", c.multiset, "Tablet Q once per row");
    range_opt->excludes(set_opt)->excludes(single_opt)->excludes(multi_opt);
    single_opt->excludes(set_opt)->excludes(multi_opt);
    survey_cmd->add_option("--M", c.M, "Bundling factor")->check(CLI::PositiveNumber);
    survey_cmd->add_option("--band", c.band, "Filter for exports")->check(CLI::IsMember({"full", "pi6_pi4", "p322"}));
    survey_cmd->add_option("--interval", c.interval, "Tablet window ends")->check(CLI::IsMember({"closed", "open"}));
    survey_cmd->add_flag("--report", c.report, "Print the counts");
    survey_cmd->add_option("--histogram", c.histogram_width, "Angle histogram bin width in degrees")
        ->check(CLI::PositiveNumber);
    survey_cmd->add_option("--csv", c.csv_path, "Write every selected solution to this CSV file");
    survey_cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    survey_cmd->add_option("--out", c.out_path, "Histogram destination");

    auto* partitions_cmd = app.add_subcommand("partitions", "Reciprocal table and its generator pairs");
    partitions_cmd->add_option("--M", c.M, "Bundling factor")->check(CLI::PositiveNumber);
    add_output(partitions_cmd);

    auto* pi_cmd = app.add_subcommand("pi", "Sexagesimal truncations of pi and circle ratios");
    pi_cmd->add_option("--digits", c.digits, "Deepest truncation")->check(CLI::Range(1u, 8u));
    pi_cmd->add_option("--format", format_name, "table, csv or tsv")->check(CLI::IsMember({"table", "csv", "tsv"}));
    pi_cmd->add_option("--out", c.out_path, "Write to this file instead of standard output");

    auto* giza_cmd = app.add_subcommand("giza", "The four-place generator of the Giza slope");
    giza_cmd->add_flag("--decimal", c.decimal, "Decimal numbers instead of sexagesimal");
    giza_cmd->add_option("--out", c.out_path, "Write to this file instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }
    c.format = format_name == "csv" ? Format::csv : format_name == "tsv" ? Format::tsv : Format::table;

    try {
        if (survey_cmd->parsed()) return cmd_survey(c, out);
        Output sink(c.out_path, out);
        int status = 0;
        if (reconstruct_cmd->parsed()) status = cmd_reconstruct(c, sink.stream());
        else if (generate_cmd->parsed()) status = cmd_generate(c, sink.stream());
        else if (partitions_cmd->parsed()) status = cmd_partitions(c, sink.stream());
        else if (pi_cmd->parsed()) status = cmd_pi(c, sink.stream());
        else if (giza_cmd->parsed()) status = cmd_giza(c, sink.stream());
        sink.finish();
        return status;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"maksarum"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace maksarum::cli
