#include "maksarum/survey.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <thread>
#include <utility>

#include "maksarum/divisors.hpp"
#include "maksarum/errors.hpp"
#include "maksarum/tablet.hpp"

namespace maksarum {

namespace {

using AngleKey = std::pair<Integer, Integer>;

std::vector<SurveyRecord> enumerate_one(std::uint64_t Q, std::uint64_t M) {
    const std::uint64_t b = M * Q;
    if (Q == 0 || M == 0) throw domain_error("M and Q must be positive");
    if (b >= (std::uint64_t{1} << 32)) throw domain_error("M Q too large for the survey");
    const std::uint64_t b2 = b * b;

    auto factors = factorize_small(b);
    for (auto& f : factors) f.exponent *= 2;

    std::vector<SurveyRecord> out;
    for (std::uint64_t x : divisors_small(factors)) {
        if (x >= b) break;
        if (x < 2) continue;
        const std::uint64_t y = b2 / x;
        if ((x ^ y) & 1u) continue;
        SurveyRecord r;
        r.solution = solve_integer(x, Q, M);
        const Triple& t = r.solution.triple;
        const Integer g = gcd(t.a, t.b);
        r.key_a = t.a / g;
        r.key_b = t.b / g;
        r.primitive = primitive_reduce(t);
        r.in_pi6_pi4 = in_pi6_pi4(t.a, t.b);
        r.in_p322 = in_p322_window(t.a, t.b, IntervalMode::closed);
        r.in_p322_open = in_p322_window(t.a, t.b, IntervalMode::open);
        out.push_back(std::move(r));
    }
    return out;
}

bool in_window(const SurveyRecord& r, IntervalMode mode) { return mode == IntervalMode::closed ? r.in_p322 : r.in_p322_open; }

}  // namespace

std::vector<std::uint64_t> p322_q_set() {
    std::vector<std::uint64_t> qs = p322_q_multiset();
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    return qs;
}

std::vector<std::uint64_t> p322_q_multiset() {
    std::vector<std::uint64_t> qs;
    for (const TabletRow& row : corrected_table()) qs.push_back(row.Q.convert_to<std::uint64_t>());
    return qs;
}

std::vector<std::uint64_t> q_range(std::uint64_t first, std::uint64_t last) {
    if (first == 0 || last < first) throw domain_error("empty or invalid Q range");
    std::vector<std::uint64_t> qs;
    for (std::uint64_t q = first; q <= last; ++q) qs.push_back(q);
    return qs;
}

std::vector<SurveyRecord> enumerate(const std::vector<std::uint64_t>& Q_set, std::uint64_t M, unsigned jobs) {
    if (M == 0) throw domain_error("M must be positive");
    std::vector<std::vector<SurveyRecord>> per_q(Q_set.size());
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(Q_set.size())));
    if (jobs == 1) {
        for (std::size_t i = 0; i < Q_set.size(); ++i) per_q[i] = enumerate_one(Q_set[i], M);
    } else {
        std::vector<std::jthread> workers;
        std::vector<std::exception_ptr> failures(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < Q_set.size(); i += jobs) per_q[i] = enumerate_one(Q_set[i], M);
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
        workers.clear();
        for (auto& f : failures)
            if (f) std::rethrow_exception(f);
    }
    std::vector<SurveyRecord> out;
    for (auto& chunk : per_q) std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
    return out;
}

bool in_pi6_pi4(const Integer& a, const Integer& b) { return 3 * a * a > b * b && a < b; }

bool in_p322_window(const Integer& a, const Integer& b, IntervalMode mode) {
    // Lowest tablet angle is 28/45 (row 15), highest 119/120 (row 1).
    if (mode == IntervalMode::closed) return a * 45 >= 28 * b && a * 120 <= 119 * b;
    return a * 45 > 28 * b && a * 120 < 119 * b;
}

std::vector<SurveyRecord> band_filter(const std::vector<SurveyRecord>& records, Band band, IntervalMode mode) {
    std::vector<SurveyRecord> out;
    for (const auto& r : records) {
        const bool keep = band == Band::full || (band == Band::pi6_pi4 ? r.in_pi6_pi4 : in_window(r, mode));
        if (keep) out.push_back(r);
    }
    return out;
}

SurveyStats stats(const std::vector<SurveyRecord>& records, IntervalMode mode) {
    SurveyStats s;
    std::set<AngleKey> all, band, window;
    for (const auto& r : records) {
        AngleKey key{r.key_a, r.key_b};
        ++s.total;
        all.insert(key);
        if (r.in_pi6_pi4) {
            ++s.pi6_pi4;
            band.insert(key);
        }
        if (in_window(r, mode)) {
            ++s.p322;
            window.insert(key);
        }
    }
    s.distinct_total = all.size();
    s.distinct_pi6_pi4 = band.size();
    s.distinct_p322 = window.size();
    return s;
}

std::uint64_t distinct_angles(const std::vector<SurveyRecord>& records) {
    std::set<AngleKey> keys;
    for (const auto& r : records) keys.emplace(r.key_a, r.key_b);
    return keys.size();
}

std::vector<Triple> p322_selection(const std::vector<SurveyRecord>& records) {
    std::vector<Triple> out;
    for (const auto& r : records) {
        if (!r.in_p322) continue;
        const Triple& t = r.solution.triple;
        const Integer g = gcd(gcd(t.a, t.b), t.d);
        if (g != 1 && g != 60) continue;
        if (std::ranges::find(out, t) == out.end()) out.push_back(t);
    }
    std::ranges::stable_sort(out, [](const Triple& l, const Triple& r) { return angle_order(l, r) > 0; });
    return out;
}

std::vector<Triple> band_classes_outside_window(const std::vector<SurveyRecord>& records) {
    std::set<AngleKey> seen;
    std::vector<Triple> out;
    for (const auto& r : records) {
        if (!r.in_pi6_pi4 || r.in_p322) continue;
        if (seen.emplace(r.key_a, r.key_b).second) out.push_back(r.primitive);
    }
    return out;
}

double theta_degrees(const Triple& t) {
    return std::atan2(t.a.convert_to<double>(), t.b.convert_to<double>()) * 180.0 / 3.14159265358979323846;
}

std::uint64_t Histogram::total() const {
    std::uint64_t n = 0;
    for (auto c : count) n += c;
    return n;
}

std::string Histogram::csv() const {
    std::string out = "bin_low_deg,bin_high_deg,count\n";
    char buf[96];
    for (std::size_t i = 0; i < count.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6g,%.6g,%llu\n", low[i], low[i] + bin_width,
                      static_cast<unsigned long long>(count[i]));
        out += buf;
    }
    return out;
}

Histogram histogram(const std::vector<Triple>& triples, double bin_width_deg) {
    if (!(bin_width_deg > 0)) throw domain_error("bin width must be positive");
    Histogram h;
    h.bin_width = bin_width_deg;
    const auto bins = static_cast<std::size_t>(std::ceil(90.0 / bin_width_deg));
    for (std::size_t i = 0; i < bins; ++i) h.low.push_back(static_cast<double>(i) * bin_width_deg);
    h.count.assign(bins, 0);
    for (const Triple& t : triples) {
        auto bin = static_cast<std::size_t>(std::floor(theta_degrees(t) / bin_width_deg));
        h.count[std::min(bin, bins - 1)] += 1;
    }
    return h;
}

Histogram histogram(const std::vector<SurveyRecord>& records, double bin_width_deg) {
    std::vector<Triple> triples;
    triples.reserve(records.size());
    for (const auto& r : records) triples.push_back(r.solution.triple);
    return histogram(triples, bin_width_deg);
}

std::string survey_csv_header() {
    return "Q,x,y,a,b,d,fourth_coefficient,fourth_shift,primitive_a,primitive_b,primitive_d,theta_deg";
}

std::string survey_csv_line(const SurveyRecord& r) {
    const auto& s = r.solution;
    std::string line = s.Q.str() + "," + s.x.str() + "," + s.y.str() + "," + s.triple.a.str() + "," + s.triple.b.str() +
                       "," + s.triple.d.str() + ",";
    if (s.fourth) line += s.fourth->coefficient.str() + "," + std::to_string(s.fourth->shift);
    else line += ",";
    char theta[32];
    std::snprintf(theta, sizeof theta, "%.10f", theta_degrees(s.triple));
    line += "," + r.primitive.a.str() + "," + r.primitive.b.str() + "," + r.primitive.d.str() + "," + theta;
    return line;
}

}  // namespace maksarum
