#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maksarum/factor_algorithm.hpp"

namespace maksarum {

enum class Band { full, pi6_pi4, p322 };

// How the angle window around the tablet's extremes is closed.  The tablet
// rows themselves sit on the ends, so closed is the natural reading.
enum class IntervalMode { closed, open };

struct SurveyRecord {
    GeneratorSolution solution;
    Integer key_a;  // a / gcd(a, b)
    Integer key_b;  // b / gcd(a, b)
    Triple primitive;
    bool in_pi6_pi4 = false;
    bool in_p322 = false;        // closed window
    bool in_p322_open = false;   // open window
};

struct SurveyStats {
    std::uint64_t total = 0;
    std::uint64_t pi6_pi4 = 0;
    std::uint64_t p322 = 0;
    std::uint64_t distinct_total = 0;
    std::uint64_t distinct_pi6_pi4 = 0;
    std::uint64_t distinct_p322 = 0;
};

// The distinct scale generators of the corrected tablet, ascending.
std::vector<std::uint64_t> p322_q_set();
// Same, once per tablet row (225 three times).
std::vector<std::uint64_t> p322_q_multiset();
std::vector<std::uint64_t> q_range(std::uint64_t first, std::uint64_t last);

// All x with x | (MQ)^2, 2 <= x < MQ and x, (MQ)^2/x of equal parity, in
// (Q as given, x ascending) order.  jobs > 1 shards by Q; the result is
// identical for every job count.
std::vector<SurveyRecord> enumerate(const std::vector<std::uint64_t>& Q_set, std::uint64_t M = 12, unsigned jobs = 1);

// Window from the tablet's extreme ratios 28/45 and 119/120.
bool in_p322_window(const Integer& a, const Integer& b, IntervalMode mode = IntervalMode::closed);
bool in_pi6_pi4(const Integer& a, const Integer& b);

std::vector<SurveyRecord> band_filter(const std::vector<SurveyRecord>& records, Band band,
                                      IntervalMode mode = IntervalMode::closed);

SurveyStats stats(const std::vector<SurveyRecord>& records, IntervalMode mode = IntervalMode::closed);
std::uint64_t distinct_angles(const std::vector<SurveyRecord>& records);

// In-window records whose triple is primitive or sixty times a primitive
// one, ordered by descending angle.
std::vector<Triple> p322_selection(const std::vector<SurveyRecord>& records);

// Angle classes inside (pi/6, pi/4) that miss the tablet window, reduced.
std::vector<Triple> band_classes_outside_window(const std::vector<SurveyRecord>& records);

struct Histogram {
    double bin_width = 1.0;
    std::vector<double> low;
    std::vector<std::uint64_t> count;

    std::uint64_t total() const;
    std::string csv() const;
};

// theta = atan(a/b) in degrees, binned over [0, 90).
Histogram histogram(const std::vector<SurveyRecord>& records, double bin_width_deg);
Histogram histogram(const std::vector<Triple>& triples, double bin_width_deg);

double theta_degrees(const Triple& t);

// Q, x, y, a, b, d, fourth_coefficient, fourth_shift, primitive_a,
// primitive_b, primitive_d, theta_deg.
std::string survey_csv_header();
std::string survey_csv_line(const SurveyRecord& r);

}  // namespace maksarum
