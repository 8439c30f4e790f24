#include "maksarum/sexagesimal.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <optional>

#include "maksarum/errors.hpp"

namespace maksarum {

namespace {

Sexagesimal from_scaled(Integer scaled, int frac_len) {
    std::vector<int> digits;
    while (scaled > 0) {
        digits.push_back(static_cast<int>(scaled % 60));
        scaled /= 60;
    }
    while (static_cast<int>(digits.size()) < frac_len) digits.push_back(0);
    if (digits.empty()) digits.push_back(0);
    std::reverse(digits.begin(), digits.end());
    return Sexagesimal(std::move(digits), frac_len);
}

std::string two_digit(int d) {
    char buf[4];
    std::snprintf(buf, sizeof buf, "%02d", d);
    return buf;
}

}  // namespace

Sexagesimal::Sexagesimal(std::vector<int> digits, int frac_len) {
    if (frac_len < 0 || frac_len > static_cast<int>(digits.size()))
        throw domain_error("fractional length out of range");
    digits_.reserve(digits.size());
    for (int d : digits) {
        if (d < 0 || d > 59) throw domain_error("sexagesimal digit " + std::to_string(d) + " outside [0, 59]");
        digits_.push_back(static_cast<std::uint8_t>(d));
    }
    frac_len_ = frac_len;
    normalize();
}

void Sexagesimal::normalize() {
    while (frac_len_ > 0 && !digits_.empty() && digits_.back() == 0) {
        digits_.pop_back();
        --frac_len_;
    }
    std::size_t lead = 0;
    while (lead < digits_.size() && static_cast<int>(digits_.size() - lead) > frac_len_ && digits_[lead] == 0) ++lead;
    digits_.erase(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(lead));
    if (digits_.empty()) {
        digits_ = {0};
        frac_len_ = 0;
    }
}

Sexagesimal Sexagesimal::from_integer(const Integer& n) {
    if (n < 0) throw underflow_error("negative numerals are not represented");
    return from_scaled(n, 0);
}

Sexagesimal Sexagesimal::from_ratio(const ExactRatio& r) {
    int places = sexagesimal_places(r);
    if (places < 0) throw irregular_number(r.str() + " has no finite sexagesimal expansion");
    return from_scaled(r.numerator() * pow60(static_cast<unsigned>(places)) / r.denominator(), places);
}

Integer Sexagesimal::scaled() const {
    Integer n = 0;
    for (auto d : digits_) n = n * 60 + d;
    return n;
}

ExactRatio Sexagesimal::value() const { return ExactRatio(scaled(), pow60(static_cast<unsigned>(frac_len_))); }

Sexagesimal add(const Sexagesimal& a, const Sexagesimal& b) {
    const int frac = std::max(a.frac_len(), b.frac_len());
    Integer sum = a.scaled() * pow60(static_cast<unsigned>(frac - a.frac_len())) +
                  b.scaled() * pow60(static_cast<unsigned>(frac - b.frac_len()));
    return from_scaled(std::move(sum), frac);
}

Sexagesimal mul(const Sexagesimal& a, const Sexagesimal& b) {
    return from_scaled(a.scaled() * b.scaled(), a.frac_len() + b.frac_len());
}

PlaceValue::PlaceValue(const Integer& coefficient, int shift) {
    if (coefficient < 0) throw underflow_error("negative numerals are not represented");
    Integer c = coefficient;
    if (c == 0) {
        shift = 0;
    } else {
        while (c % 60 == 0) {
            c /= 60;
            ++shift;
        }
    }
    mantissa_ = Sexagesimal::from_integer(c);
    shift_ = shift;
}

PlaceValue::PlaceValue(const Sexagesimal& mantissa, int shift)
    : PlaceValue(mantissa.scaled(), shift - mantissa.frac_len()) {}

PlaceValue PlaceValue::from_ratio(const ExactRatio& r) {
    int places = sexagesimal_places(r);
    if (places < 0) throw irregular_number(r.str() + " has no finite sexagesimal expansion");
    return PlaceValue(r.numerator() * pow60(static_cast<unsigned>(places)) / r.denominator(), -places);
}

ExactRatio PlaceValue::value() const {
    ExactRatio m(mantissa_.scaled());
    if (shift_ >= 0) return m * ExactRatio(pow60(static_cast<unsigned>(shift_)));
    return m / ExactRatio(pow60(static_cast<unsigned>(-shift_)));
}

bool same_digits(const PlaceValue& a, const PlaceValue& b) { return a.mantissa() == b.mantissa(); }

bool same_digits(const Sexagesimal& a, const Sexagesimal& b) {
    return same_digits(PlaceValue(a, 0), PlaceValue(b, 0));
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Numeral run() {
        std::size_t end = text_.size();
        while (end > 0 && text_[end - 1] == ' ') --end;
        std::size_t begin = 0;
        while (begin < end && text_[begin] == ' ') ++begin;
        if (begin == end) fail(0, "empty input");

        // Split off an "S-n" suffix, with or without a space in front.
        std::optional<int> shift;
        std::size_t body_end = end;
        auto s = end >= 2 ? text_.rfind("S-", end - 2) : std::string_view::npos;
        if (s != std::string_view::npos && s >= begin) {
            std::size_t p = s + 2;
            if (p == end) fail(p, "missing shift after S-");
            int n = 0;
            for (std::size_t i = p; i < end; ++i) {
                char c = text_[i];
                if (!std::isdigit(static_cast<unsigned char>(c))) fail(i, "shift must be a decimal integer");
                n = n * 10 + (c - '0');
                if (n > 100000) fail(i, "shift too large");
            }
            shift = n;
            body_end = s;
            while (body_end > begin && text_[body_end - 1] == ' ') --body_end;
            if (body_end == begin) fail(begin, "missing numeral before S-");
        }

        if (shift) {
            bool decimal = true;
            for (std::size_t i = begin; i < body_end; ++i)
                if (!std::isdigit(static_cast<unsigned char>(text_[i]))) decimal = false;
            if (decimal) return PlaceValue(parse_integer(text_.substr(begin, body_end - begin)), -*shift);
            return PlaceValue(numeral(begin, body_end), -*shift);
        }
        return numeral(begin, body_end);
    }

private:
    [[noreturn]] void fail(std::size_t pos, const std::string& why) const {
        throw parse_error(std::string(text_), pos, why);
    }

    Sexagesimal numeral(std::size_t begin, std::size_t end) {
        std::vector<int> int_part;
        std::vector<int> frac_part;
        bool after_radix = false;
        bool expect_group = true;
        std::size_t i = begin;
        while (i < end) {
            char c = text_[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                if (!expect_group) fail(i, "missing separator");
                std::size_t j = i;
                int v = 0;
                while (j < end && std::isdigit(static_cast<unsigned char>(text_[j]))) {
                    v = v * 10 + (text_[j] - '0');
                    ++j;
                    if (j - i > 2) fail(i, "digit group longer than two characters");
                }
                if (v > 59) fail(i, "digit group " + std::to_string(v) + " exceeds 59");
                (after_radix ? frac_part : int_part).push_back(v);
                expect_group = false;
                i = j;
            } else if (c == '.' || c == ';') {
                if (after_radix) fail(i, "second radix marker");
                // A leading radix (".~30") is fine, one after a separator is not.
                if (expect_group && !int_part.empty()) fail(i, "radix marker after a separator");
                after_radix = true;
                ++i;
                if (c == '.' && i < end && (text_[i] == '~' || text_[i] == ' ')) ++i;
                if (i >= end) fail(i, "radix marker without fractional digits");
                expect_group = true;
            } else if (c == '~' || c == ' ' || c == ':') {
                if (expect_group) fail(i, "separator without a preceding digit group");
                expect_group = true;
                ++i;
            } else {
                fail(i, std::string("unexpected character '") + c + "'");
            }
        }
        if (expect_group) fail(end, "numeral ends with a separator");
        const int frac_len = static_cast<int>(frac_part.size());
        int_part.insert(int_part.end(), frac_part.begin(), frac_part.end());
        if (int_part.empty()) int_part.push_back(0);
        return Sexagesimal(std::move(int_part), frac_len);
    }

    std::string_view text_;
};

}  // namespace

Numeral parse(std::string_view text) { return Parser(text).run(); }

Sexagesimal parse_sexagesimal(std::string_view text) {
    Numeral n = parse(text);
    if (auto* s = std::get_if<Sexagesimal>(&n)) return *s;
    return std::get<PlaceValue>(n).to_sexagesimal();
}

PlaceValue parse_place_value(std::string_view text) {
    Numeral n = parse(text);
    if (auto* p = std::get_if<PlaceValue>(&n)) return *p;
    return PlaceValue(std::get<Sexagesimal>(n), 0);
}

// ------------------------------------------------------------- formatting

std::string format(const Sexagesimal& value, Style style) {
    const char* sep = style == Style::paper ? "~" : ":";
    const char* radix = style == Style::paper ? ".~" : ";";
    const auto& d = value.digits();
    const int int_len = value.int_len();
    std::string out;
    if (int_len == 0) out = "00";
    for (int i = 0; i < static_cast<int>(d.size()); ++i) {
        if (i == int_len) out += radix;
        else if (i > 0) out += sep;
        out += two_digit(d[i]);
    }
    return out;
}

std::string format(const PlaceValue& value, Style style) {
    Integer coefficient = value.coefficient();
    int shift = value.shift();
    if (shift > 0) {
        coefficient *= pow60(static_cast<unsigned>(shift));
        shift = 0;
    }
    std::string body = style == Style::paper ? coefficient.str() : format(Sexagesimal::from_integer(coefficient), style);
    return body + " S-" + std::to_string(-shift);
}

std::string format(const Numeral& value, Style style) {
    return std::visit([style](const auto& v) { return format(v, style); }, value);
}

PlaceValue reciprocal(const Sexagesimal& x) {
    if (x.is_zero()) throw domain_error("zero has no reciprocal");
    if (!is_regular(x.scaled()))
        throw irregular_number(format(x) + " is not regular, its reciprocal does not terminate");
    return PlaceValue::from_ratio(ExactRatio(1) / x.value());
}

PlaceValue machine_epsilon() { return PlaceValue(Integer(1), -8); }

}  // namespace maksarum
