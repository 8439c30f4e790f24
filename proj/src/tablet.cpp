#include "maksarum/tablet.hpp"

#include <algorithm>
#include <sstream>

#include "maksarum/errors.hpp"

namespace maksarum {

CarvedNumeral::CarvedNumeral(std::string_view transcription) : text_(transcription) {
    bool in_damage = false;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        if (token == "_") {
            groups_.push_back(-1);
        } else {
            int v = std::stoi(token);
            if (v < 0 || v > 59) throw parse_error(text_, 0, "carved group " + token + " outside [0, 59]");
            groups_.push_back(v);
        }
        if (in_damage) ++damaged_;
        token.clear();
    };
    for (char c : text_) {
        switch (c) {
            case '(': in_damage = true; break;
            case ')': flush(); in_damage = false; break;
            case '[': slip_ = true; break;
            case ']': flush(); break;
            case ' ': flush(); break;
            default: token += c;
        }
    }
    flush();
    if (groups_.empty()) throw parse_error(text_, 0, "empty carving");
}

std::vector<Integer> CarvedNumeral::readings() const {
    std::vector<Integer> out{0};
    for (int g : groups_) {
        std::vector<Integer> next;
        for (const Integer& r : out) {
            if (g >= 0) {
                next.push_back(r * 60 + g);
            } else {
                next.push_back(r * 60);  // blank as zero
                next.push_back(r);       // blank as spacing
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Integer CarvedNumeral::value() const {
    Integer v = 0;
    for (int g : groups_) v = v * 60 + std::max(g, 0);
    return v;
}

bool CarvedNumeral::reads_as(const PlaceValue& v) const {
    return std::ranges::any_of(readings(), [&](const Integer& r) { return same_digits(PlaceValue(r, 0), v); });
}

std::string to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::none: return "none";
        case ErrorKind::wrong_d_row2: return "wrong_d_row2";
        case ErrorKind::typo_a_row9: return "typo_a_row9";
        case ErrorKind::squared_a_row13: return "squared_a_row13";
        case ErrorKind::scale_row15: return "scale_row15";
    }
    return "unknown";
}

const std::vector<TabletRow>& corrected_table() {
    struct Seed {
        const char* fourth;
        const char* a;
        const char* d;
        long a_fixed, b_fixed, d_fixed, Q;
        ErrorKind kind;
        const char* note;
    };
    static const Seed seeds[] = {
        {"(01 59) _ 15", "01 59", "02 49", 119, 120, 169, 10, ErrorKind::none, ""},
        {"(01 56 56) 58 14 56 15", "56 07", "[03 12 01]", 3367, 3456, 4825, 288, ErrorKind::wrong_d_row2,
         "fourth column carved 56 where 50 06 belongs"},
        {"(01 55 07) 41 15 33 45", "01 16 41", "01 50 49", 4601, 4800, 6649, 400, ErrorKind::none, ""},
        {"(01 53 10) 29 32 52 16", "03 31 49", "05 09 01", 12709, 13500, 18541, 1125, ErrorKind::none, ""},
        {"(01) 58 54 _ 01 40", "01 05", "01 37", 65, 72, 97, 6, ErrorKind::none,
         "fourth column transcribed 58 where 48 belongs"},
        {"(01) 47 _ 06 41 40", "05 19", "08 01", 319, 360, 481, 30, ErrorKind::none, ""},
        {"(01) 43 11 56 28 26 40", "38 11", "59 01", 2291, 2700, 3541, 225, ErrorKind::none, ""},
        {"(01) 41 33 59 _ 03 45", "13 19", "20 49", 799, 960, 1249, 80, ErrorKind::none,
         "fourth column carved 59 where 45 14 belongs"},
        {"(01) 38 33 36 36", "[09] 01", "12 49", 481, 600, 769, 50, ErrorKind::typo_a_row9, ""},
        {"(01) 35 10 02 28 27 24 26 40", "01 22 41", "02 16 01", 4961, 6480, 8161, 540, ErrorKind::none, ""},
        {"(01) 33 45", "45 _", "01 15 _", 45, 60, 75, 5, ErrorKind::none, ""},
        {"(01) 29 21 54 _ 02 15", "27 59", "48 49", 1679, 2400, 2929, 200, ErrorKind::none, ""},
        {"(01) 27 _ 03 45", "[07 12 01]", "04 49", 161, 240, 289, 20, ErrorKind::squared_a_row13, ""},
        {"(01) 25 48 51 35 _ 06 40", "29 31", "53 49", 1771, 2700, 3229, 225, ErrorKind::none, ""},
        {"(01) 23 13 46 40", "56", "53", 1680, 2700, 3180, 225, ErrorKind::scale_row15, ""},
    };
    static const std::vector<TabletRow> rows = [] {
        std::vector<TabletRow> out;
        int index = 1;
        for (const Seed& s : seeds) {
            out.push_back(TabletRow{index++, CarvedNumeral(s.fourth), CarvedNumeral(s.a), CarvedNumeral(s.d),
                                    make_triple(s.a_fixed, s.b_fixed, s.d_fixed), Integer(s.Q), s.kind, s.note});
        }
        return out;
    }();
    return rows;
}

bool Reconstruction::passed() const {
    return !checks.empty() && std::ranges::all_of(checks, [](const FieldCheck& c) { return c.pass; });
}

Reconstruction reconstruct(const TabletRow& row) {
    Reconstruction r;
    r.row = row.index;
    r.x = row.triple.d - row.triple.a;
    auto check = [&](std::string field, const std::string& expected, const std::string& actual) {
        r.checks.push_back({std::move(field), expected, actual, expected == actual});
    };
    try {
        const GeneratorSolution s = solve_integer(r.x, row.Q, 12);
        const FourthColumn stored = fourth_column(row.triple);
        check("a", row.triple.a.str(), s.triple.a.str());
        check("b", row.triple.b.str(), s.triple.b.str());
        check("d", row.triple.d.str(), s.triple.d.str());
        check("Q", row.Q.str(), Integer(s.triple.b / 12).str());
        const std::string got = s.fourth ? s.fourth->coefficient.str() + " S-" + std::to_string(s.fourth->shift) : "none";
        check("fourth", stored.coefficient.str() + " S-" + std::to_string(stored.shift), got);
        check("carved fourth", "reads as d^2/b^2",
              row.raw_fourth.reads_as(fourth_column(row.triple, FourthVariant::diagonal).place_value())
                  ? "reads as d^2/b^2"
                  : "differs (" + (row.note.empty() ? std::string("unexplained") : row.note) + ")");
        r.checks.back().pass = r.checks.back().pass || !row.note.empty();
    } catch (const error& e) {
        check("solve", "solution", e.what());
    }
    return r;
}

std::vector<ErrorReproduction> explain_errors() {
    const auto& t = corrected_table();
    std::vector<ErrorReproduction> out;
    auto sx = [](const Integer& v) { return format(Sexagesimal::from_integer(v)); };

    {
        // A square of row 13's short side minus the square of row 1's long side.
        const Integer s = t[12].triple.a;
        const Integer b = t[0].triple.b;
        ErrorReproduction e;
        e.row = 2;
        e.kind = ErrorKind::wrong_d_row2;
        e.field = "d";
        e.reproduced = s * s - b * b;
        e.carved = t[1].raw_d.value();
        e.derivation = "(" + sx(s) + ")² − (" + sx(b) + ")² = " + sx(e.reproduced);
        out.push_back(e);
    }
    {
        // Leading digit one too high.
        const Sexagesimal a = Sexagesimal::from_integer(t[8].triple.a);
        std::vector<int> digits(a.digits().begin(), a.digits().end());
        digits.front() += 1;
        ErrorReproduction e;
        e.row = 9;
        e.kind = ErrorKind::typo_a_row9;
        e.field = "a";
        e.reproduced = Sexagesimal(digits, 0).scaled();
        e.carved = t[8].raw_a.value();
        e.derivation = sx(t[8].triple.a) + " written as " + sx(e.reproduced);
        out.push_back(e);
    }
    {
        const Integer a = t[12].triple.a;
        ErrorReproduction e;
        e.row = 13;
        e.kind = ErrorKind::squared_a_row13;
        e.field = "a";
        e.reproduced = a * a;
        e.carved = t[12].raw_a.value();
        e.derivation = "(" + sx(a) + ")² = " + sx(e.reproduced);
        out.push_back(e);
    }
    {
        // The carved pair (56, 53) is no triangle with b = 45; three ways to mend it.
        const TabletRow& r = t[14];
        const Integer a = r.raw_a.value();
        const Integer d = r.raw_d.value();
        ErrorReproduction e;
        e.row = 15;
        e.kind = ErrorKind::scale_row15;
        e.field = "a";
        e.reproduced = 2 * (r.triple.a / 60);
        e.carved = a;
        e.derivation = "carved a = " + sx(a) + " is twice " + sx(r.triple.a / 60) + ", carved d = " + sx(d);
        e.repairs.push_back({"double d", make_triple(a, 90, 2 * d)});
        e.repairs.push_back({"halve a", make_triple(a / 2, 45, d)});
        e.repairs.push_back({"scale by 60", make_triple(a / 2 * 60, 2700, d * 60)});
        out.push_back(e);
    }
    return out;
}

QVariants q_variants(const TabletRow& row) { return {row.Q, 4 * row.Q, ExactRatio(row.Q, 5)}; }

const std::vector<int>& prime_residues_mod60() {
    static const std::vector<int> residues{7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 49, 53, 59, 1};
    return residues;
}

Triple place_value_reading(const Triple& t) {
    Triple r = t;
    while (r.a % 60 == 0 && r.b % 60 == 0 && r.d % 60 == 0 && r.a > 0) {
        r.a /= 60;
        r.b /= 60;
        r.d /= 60;
    }
    return r;
}

CongruenceReport congruence_report() {
    CongruenceReport report;
    const auto& set = prime_residues_mod60();
    auto in_set = [&](int v) { return std::ranges::find(set, v) != set.end(); };
    for (const TabletRow& row : corrected_table()) {
        const Triple t = place_value_reading(row.triple);
        CongruenceLine line;
        line.row = row.index;
        line.a = static_cast<int>(t.a % 60);
        line.b = static_cast<int>(t.b % 60);
        line.d = static_cast<int>(t.d % 60);
        line.identity = (line.a * line.a + line.b * line.b) % 60 == (line.d * line.d) % 60;
        line.a_in_set = in_set(line.a);
        line.d_in_set = in_set(line.d);
        report.members += line.a_in_set + line.d_in_set;
        report.total += 2;
        report.lines.push_back(line);
    }
    return report;
}

PrimeReport prime_report() {
    PrimeReport report;
    for (const TabletRow& row : corrected_table()) {
        const Triple t = place_value_reading(row.triple);
        PrimeLine line{row.index, t.a, t.d, is_prime(t.a), is_prime(t.d)};
        report.d_primes += line.d_prime;
        report.a_primes += line.a_prime;
        report.lines.push_back(line);
    }
    return report;
}

std::string tablet_tsv() {
    std::ostringstream out;
    out << "index\tfourth_coefficient\tfourth_shift\ta\tb\td\tQ\terror_kind\traw_a\traw_d\n";
    for (const TabletRow& row : corrected_table()) {
        const FourthColumn f = fourth_column(row.triple);
        out << row.index << '\t' << f.coefficient << '\t' << f.shift << '\t' << row.triple.a << '\t' << row.triple.b
            << '\t' << row.triple.d << '\t' << row.Q << '\t' << to_string(row.error_kind) << '\t'
            << format(Sexagesimal::from_integer(row.raw_a.value())) << '\t'
            << format(Sexagesimal::from_integer(row.raw_d.value())) << '\n';
    }
    return out.str();
}

}  // namespace maksarum
