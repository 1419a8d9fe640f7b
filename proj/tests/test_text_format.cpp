#include <gtest/gtest.h>

#include "support.hpp"

using hz::Complex;

TEST(TextFormat, ParseComplexForms) {
    EXPECT_EQ(hz::parse_complex("3"), Complex(3, 0));
    EXPECT_EQ(hz::parse_complex("-2.5"), Complex(-2.5, 0));
    EXPECT_EQ(hz::parse_complex("2i"), Complex(0, 2));
    EXPECT_EQ(hz::parse_complex("i"), Complex(0, 1));
    EXPECT_EQ(hz::parse_complex("-i"), Complex(0, -1));
    EXPECT_EQ(hz::parse_complex("1+2i"), Complex(1, 2));
    EXPECT_EQ(hz::parse_complex("1-i"), Complex(1, -1));
    EXPECT_EQ(hz::parse_complex(" 1.5e-3 - 2e+2i "), Complex(1.5e-3, -200));
    EXPECT_EQ(hz::parse_complex("-1e-2i"), Complex(0, -0.01));
}

TEST(TextFormat, ParseComplexRejectsGarbage) {
    EXPECT_THROW(hz::parse_complex(""), hz::ParseError);
    EXPECT_THROW(hz::parse_complex("abc"), hz::ParseError);
    EXPECT_THROW(hz::parse_complex("1+xi"), hz::ParseError);
}

TEST(TextFormat, FormatRoundTrips) {
    for (Complex z : {Complex(0.1, -0.3), Complex(1e-17, 3), Complex(0, 1), Complex(-2, -1), Complex(1.0 / 3.0, 0)}) {
        EXPECT_EQ(hz::parse_complex(hz::format_complex(z)), z) << hz::format_complex(z);
    }
    EXPECT_EQ(hz::format_real(-0.0), "0");
    EXPECT_EQ(hz::format_complex(Complex(0, -1)), "-i");
}

TEST(TextFormat, RationalSpec) {
    const auto r = hz::parse_rational("p: 0,1 ; q: 1,0,1");
    EXPECT_EQ(r.deg_p(), 1);
    EXPECT_EQ(r.deg_q(), 2);
    EXPECT_EQ(hz::format_rational(r), "p: 0,1 ; q: 1,0,1");

    const auto poly = hz::parse_rational("p: 0, 2");
    EXPECT_EQ(poly.deg_q(), 0);
    EXPECT_EQ(hz::format_rational(poly), "p: 0,2 ; q: 1");
}

TEST(TextFormat, RationalSpecErrors) {
    EXPECT_THROW(hz::parse_rational("1,2"), hz::ParseError);
    EXPECT_THROW(hz::parse_rational("p: 1,,2"), hz::ParseError);
    EXPECT_THROW(hz::parse_rational("p: 1 ; r: 2"), hz::ParseError);
    EXPECT_THROW(hz::parse_rational("p: 1 ; q: 0"), hz::ParseError);
}

TEST(TextFormat, ManifestSpecsRoundTrip) {
    for (const auto& e : testing_support::manifest().entries) {
        const auto r = hz::parse_rational(e.spec);
        EXPECT_EQ(hz::format_rational(hz::parse_rational(hz::format_rational(r))), hz::format_rational(r)) << e.name;
    }
}
