#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "maksarum/exact.hpp"
#include "maksarum/factor_algorithm.hpp"
#include "maksarum/sexagesimal.hpp"

namespace maksarum {

// A number as it sits on the clay, written as space separated groups:
//   "(01 59) _ 15"   parenthesised groups are damaged and restored,
//   "[03 12 01]"     bracketed groups are the scribe's slip,
//   "_"              is a blank, which can stand for a zero or for nothing.
class CarvedNumeral {
public:
    explicit CarvedNumeral(std::string_view transcription);

    const std::string& transcription() const noexcept { return text_; }
    std::size_t damaged_groups() const noexcept { return damaged_; }
    bool has_slip() const noexcept { return slip_; }

    // Every way of reading the blanks, as whole numbers.
    std::vector<Integer> readings() const;
    // Blanks read as zero digits.
    Integer value() const;
    // True if some reading has the same digits as v (scale left implicit).
    bool reads_as(const PlaceValue& v) const;

private:
    std::string text_;
    std::vector<int> groups_;  // -1 marks a blank
    std::size_t damaged_ = 0;
    bool slip_ = false;
};

enum class ErrorKind { none, wrong_d_row2, typo_a_row9, squared_a_row13, scale_row15 };
std::string to_string(ErrorKind kind);

struct TabletRow {
    int index = 0;
    CarvedNumeral raw_fourth;  // carved as d^2/b^2, leading 1 included
    CarvedNumeral raw_a;
    CarvedNumeral raw_d;
    Triple triple;
    Integer Q;
    ErrorKind error_kind = ErrorKind::none;
    std::string note;  // carving detail that no error model covers
};

const std::vector<TabletRow>& corrected_table();

struct FieldCheck {
    std::string field;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct Reconstruction {
    int row = 0;
    Integer x;
    std::vector<FieldCheck> checks;
    bool passed() const;
};

// Rebuilds a, b, d, Q and the fourth column from x = d - a and Q.
Reconstruction reconstruct(const TabletRow& row);

struct Repair {
    std::string method;
    Triple triple;
};

struct ErrorReproduction {
    int row = 0;
    ErrorKind kind = ErrorKind::none;
    std::string field;        // "a" or "d"
    std::string derivation;   // the arithmetic, in paper-style numerals
    Integer reproduced;
    Integer carved;
    std::vector<Repair> repairs;  // only row 15 has alternatives
    bool matches() const { return reproduced == carved; }
};

std::vector<ErrorReproduction> explain_errors();

struct QVariants {
    Integer Q;
    Integer Q3;
    ExactRatio Q60;
};
QVariants q_variants(const TabletRow& row);

// Residues that can hold primes above 5, as listed for the congruence
// analysis (49 included).
const std::vector<int>& prime_residues_mod60();

// Divides all three sides by 60 while they all allow it, which is how a
// place-value reader sees row 15: (1680, 2700, 3180) reads as (28, 45, 53).
Triple place_value_reading(const Triple& t);

struct CongruenceLine {
    int row = 0;
    int a = 0;
    int b = 0;
    int d = 0;
    bool identity = false;  // a^2 + b^2 = d^2 (mod 60)
    bool a_in_set = false;
    bool d_in_set = false;
};

struct CongruenceReport {
    std::vector<CongruenceLine> lines;
    int members = 0;
    int total = 0;
};
CongruenceReport congruence_report();

struct PrimeLine {
    int row = 0;
    Integer a;
    Integer d;
    bool a_prime = false;
    bool d_prime = false;
};

struct PrimeReport {
    std::vector<PrimeLine> lines;
    int d_primes = 0;
    int a_primes = 0;
};
PrimeReport prime_report();

// Tab separated export: index, fourth_coefficient, fourth_shift, a, b, d, Q,
// error_kind, raw_a, raw_d.
std::string tablet_tsv();

}  // namespace maksarum
