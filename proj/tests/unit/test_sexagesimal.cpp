#include <gtest/gtest.h>

#include "maksarum/errors.hpp"
#include "maksarum/partitions.hpp"
#include "maksarum/sexagesimal.hpp"

using namespace maksarum;

namespace {

ExactRatio ratio(long n, long d = 1) { return ExactRatio(Integer(n), Integer(d)); }

}  // namespace

TEST(Parse, IntegerGroups) {
    EXPECT_EQ(parse_sexagesimal("02~49").value(), ratio(169));
    EXPECT_EQ(parse_sexagesimal("02 49").value(), ratio(169));
    EXPECT_EQ(parse_sexagesimal("2~49").value(), ratio(169));
    EXPECT_EQ(parse_sexagesimal("07~12~01").value(), ratio(25921));
}

TEST(Parse, Zero) {
    Sexagesimal z = parse_sexagesimal("00");
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.frac_len(), 0);
    EXPECT_EQ(z, Sexagesimal());
}

TEST(Parse, RadixForms) {
    EXPECT_EQ(parse_sexagesimal("01.~12").value(), ratio(6, 5));
    EXPECT_EQ(parse_sexagesimal("01. 12").value(), ratio(6, 5));
    EXPECT_EQ(parse_sexagesimal("01;12").value(), ratio(6, 5));
    EXPECT_EQ(parse_sexagesimal("28.48").value(), ratio(144, 5));
    EXPECT_EQ(parse_sexagesimal(".~30").value(), ratio(1, 2));
    EXPECT_EQ(parse_sexagesimal("00.~55~28").value(), ratio(3328, 3600));
    EXPECT_EQ(parse_sexagesimal("12.~01~1~15").value(), parse_sexagesimal("12.~01~01~15").value());
}

TEST(Parse, ShiftSuffix) {
    Numeral n = parse("212415 S-3");
    ASSERT_TRUE(std::holds_alternative<PlaceValue>(n));
    const PlaceValue& p = std::get<PlaceValue>(n);
    EXPECT_EQ(p.value(), ratio(212415, 216000));
    EXPECT_EQ(p.mantissa(), parse_sexagesimal("59~00~15"));
    EXPECT_EQ(p.shift(), -3);
    EXPECT_EQ(parse_place_value("212415S-3"), p);
    EXPECT_EQ(parse_place_value("59:00:15 S-3"), p);
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse(""), parse_error);
    EXPECT_THROW(parse("   "), parse_error);
    EXPECT_THROW(parse("02~60"), parse_error);
    EXPECT_THROW(parse("01.~12.~30"), parse_error);
    EXPECT_THROW(parse("169"), parse_error);
    EXPECT_THROW(parse("02~"), parse_error);
    EXPECT_THROW(parse("02~~03"), parse_error);
    EXPECT_THROW(parse("0x2"), parse_error);
    EXPECT_THROW(parse("5 S-"), parse_error);
    try {
        parse("02~75~01");
        FAIL() << "expected a parse error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.position(), 3u);
    }
    try {
        parse("01.~12.~30");
        FAIL() << "expected a parse error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.position(), 6u);
    }
}

TEST(Format, PaperStyle) {
    EXPECT_EQ(format(Sexagesimal::from_integer(169)), "02~49");
    EXPECT_EQ(format(Sexagesimal::from_ratio(ratio(6, 5))), "01.~12");
    EXPECT_EQ(format(Sexagesimal()), "00");
    EXPECT_EQ(format(Sexagesimal::from_ratio(ratio(1, 2))), "00.~30");
    EXPECT_EQ(format(Sexagesimal::from_integer(5)), "05");
    EXPECT_EQ(format(PlaceValue(Integer(212415), -3)), "212415 S-3");
}

TEST(Format, ColonStyle) {
    EXPECT_EQ(format(Sexagesimal::from_integer(169), Style::colon), "02:49");
    EXPECT_EQ(format(Sexagesimal::from_ratio(ratio(6, 5)), Style::colon), "01;12");
    EXPECT_EQ(format(PlaceValue(Integer(212415), -3), Style::colon), "59:00:15 S-3");
}

TEST(Format, PositiveShiftRoundTrips) {
    PlaceValue p(Integer(28), 1);
    EXPECT_EQ(parse_place_value(format(p)), p);
    EXPECT_EQ(parse_place_value(format(p, Style::colon)), p);
}

TEST(Normalisation, LeadingAndTrailingZeros) {
    Sexagesimal s({0, 0, 5, 30, 0}, 2);
    EXPECT_EQ(s.digits().size(), 2u);
    EXPECT_EQ(s.frac_len(), 1);
    EXPECT_EQ(format(s), "05.~30");
    EXPECT_THROW(Sexagesimal({60}, 0), domain_error);
}

TEST(Arithmetic, Multiplication) {
    EXPECT_EQ(mul(parse_sexagesimal("01.~12"), parse_sexagesimal("50")), parse_sexagesimal("01~00"));
    EXPECT_EQ(mul(parse_sexagesimal("02~41"), parse_sexagesimal("02~41")), parse_sexagesimal("07~12~01"));
    Sexagesimal a = parse_sexagesimal("05.~03~45");
    Sexagesimal b = parse_sexagesimal("28.~26~40");
    EXPECT_LE(mul(a, b).frac_len(), a.frac_len() + b.frac_len());
    EXPECT_EQ(mul(a, b).value(), ratio(144));
}

TEST(Arithmetic, Addition) {
    Sexagesimal x = parse_sexagesimal("11.~41~27~30");
    EXPECT_EQ(add(x, Sexagesimal()), x);
    EXPECT_EQ(add(parse_sexagesimal("00.~30"), parse_sexagesimal("00.~30")), parse_sexagesimal("01"));
    EXPECT_EQ(add(parse_sexagesimal("59"), parse_sexagesimal("01")), parse_sexagesimal("01~00"));
}

TEST(Reciprocal, TableExamples) {
    EXPECT_TRUE(same_digits(reciprocal(parse_sexagesimal("05")), parse_place_value("12")));
    EXPECT_EQ(reciprocal(parse_sexagesimal("01")), parse_place_value("01"));
    EXPECT_TRUE(same_digits(reciprocal(parse_sexagesimal("01.~21")), parse_place_value("44.~26~40")));
}

TEST(Reciprocal, ProductIsExactlyOne) {
    for (const auto& pair : standard_table()) {
        PlaceValue r = reciprocal(pair.n);
        EXPECT_EQ(r.value() * pair.n.value(), ExactRatio(1));
        EXPECT_TRUE(same_digits(r, PlaceValue(pair.nbar, 0))) << format(pair.n);
    }
}

TEST(Reciprocal, Errors) {
    EXPECT_THROW(reciprocal(Sexagesimal()), domain_error);
    EXPECT_THROW(reciprocal(Sexagesimal::from_integer(7)), irregular_number);
    EXPECT_THROW(reciprocal(parse_sexagesimal("01.~10")), irregular_number);
}

TEST(MachineEpsilon, SixtyToTheMinusEight) {
    PlaceValue e = machine_epsilon();
    EXPECT_EQ(e, PlaceValue(Integer(1), -8));
    EXPECT_EQ(e.value(), ExactRatio(Integer(1), Integer("167961600000000")));
    EXPECT_EQ(e.value() * ExactRatio(pow60(8)), ExactRatio(1));
    EXPECT_NEAR(e.value().to_double(), 5.95e-15, 0.01e-15);
}

TEST(PlaceValue, SameDigitsIgnoresScale) {
    EXPECT_TRUE(same_digits(PlaceValue(Integer(45), 1), PlaceValue(Integer(45), -2)));
    EXPECT_FALSE(PlaceValue(Integer(45), 1) == PlaceValue(Integer(45), -2));
    EXPECT_TRUE(same_digits(Sexagesimal::from_integer(2700), Sexagesimal::from_integer(45)));
}
