#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using hz::Complex;

TEST(Gallery, MpwDegreeAndShape) {
    const auto f = hz::mpw(3, 0.5);
    EXPECT_EQ(f.degree(), 3);
    EXPECT_EQ(f.r().deg_p(), 2);
    EXPECT_EQ(f.r().deg_q(), 3);
    EXPECT_THROW(hz::mpw(1, 0.5), hz::DomainError);
    EXPECT_THROW(hz::mpw(2, 1.0), hz::DomainError);
}

TEST(Gallery, MpwN2IsExtremalAcrossRange) {
    // zeros 0, +-sqrt(1 + a^2), +-i sqrt(1 - a^2)
    for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const auto zs = hz::find_zeros(hz::mpw(2, a));
        ASSERT_EQ(zs.size(), 5u) << a;
        for (Complex want : {Complex(0.0), Complex(std::sqrt(1 + a * a)), Complex(0, std::sqrt(1 - a * a))}) {
            double best = 1e9;
            for (const auto& z : zs) best = std::min(best, std::abs(z.location - want));
            EXPECT_LT(best, 1e-10);
        }
    }
}

TEST(Gallery, RhieClosedFormMatchesConvexCombination) {
    const auto f = hz::rhie(4, 0.67, 0.04);
    EXPECT_EQ(f.degree(), 5);
    for (Complex z : {Complex(0.3, 0.2), Complex(-1.2, 0.7), Complex(0.9, -0.1)})
        EXPECT_LT(testing_support::rel_err(f.r().value(z), hz::rhie_convex_value(4, 0.67, 0.04, z)), 1e-12);
}

TEST(Gallery, RhieWithoutPerturbationIsMpw) {
    const auto f = hz::rhie(3, 0.6, 0.0);
    EXPECT_EQ(f.degree(), 3);
    EXPECT_THROW(hz::rhie(2, 0.6, 0.1), hz::DomainError);
    EXPECT_THROW(hz::rhie(3, 0.6, 1.0), hz::DomainError);
}

TEST(Gallery, RightmostZeroTieBreak) {
    std::vector<hz::ClassifiedZero> zs(3);
    zs[0].location = {1.0, -0.5};
    zs[1].location = {1.0 + 1e-12, 0.5};
    zs[2].location = {0.2, 3.0};
    EXPECT_EQ(hz::rightmost_zero(zs).location, Complex(1.0 + 1e-12, 0.5));
    EXPECT_THROW(hz::rightmost_zero({}), hz::DomainError);
}

TEST(Gallery, CoconjExtremalRejectsNonZero) {
    EXPECT_THROW(hz::coconj_extremal(hz::mpw(2, 0.5), Complex(0.3, 0.3)), hz::NotAZero);
}

TEST(Gallery, CoconjExtremalSendsZeroToInfinity) {
    const auto f = hz::mpw(2, 0.5);
    const auto zs = hz::find_zeros(f);
    const auto z0 = hz::rightmost_zero(zs).location;
    const auto big = hz::coconj_extremal(f, z0);
    EXPECT_GT(big.r().deg_p(), big.r().deg_q());
    EXPECT_EQ(big.degree(), 2);
    EXPECT_EQ(hz::find_zeros(big).size(), 4u);
}

TEST(Manifest, EveryEntryParsesAndMatchesDegree) {
    const auto& m = testing_support::manifest();
    EXPECT_GE(m.entries.size(), 8u);
    for (const auto& e : m.entries) {
        const auto f = e.function();
        EXPECT_EQ(f.degree(), e.degree) << e.name;
        EXPECT_FALSE(e.provenance.empty()) << e.name;
    }
    EXPECT_THROW(m.at("no_such_entry"), hz::DomainError);
}

TEST(Manifest, FamilyEntriesRebuildTheirSpec) {
    const auto& m = testing_support::manifest();
    for (const auto& e : m.entries) {
        if (!e.family) continue;
        const auto rebuilt = hz::build_entry(m, e);
        const auto stored = e.function();
        for (Complex z : {Complex(0.31, 0.17), Complex(-1.4, 0.6)})
            EXPECT_LT(testing_support::rel_err(rebuilt.r().value(z), stored.r().value(z)), 1e-9) << e.name;
    }
}

TEST(Manifest, ExpectedCountsHold) {
    const auto& m = testing_support::manifest();
    for (const auto& e : m.entries) {
        if (!e.expected_zero_count) continue;
        EXPECT_EQ(static_cast<int>(hz::find_zeros(e.function()).size()), *e.expected_zero_count) << e.name;
    }
}

TEST(Manifest, MalformedInputs) {
    EXPECT_THROW(hz::load_manifest("/nonexistent/manifest.json"), hz::IOError);
    EXPECT_THROW(hz::parse_manifest(nlohmann::json::parse(R"({"entries":[{"name":"x"}]})")), nlohmann::json::exception);
}

TEST(Sweep, ParameterRangeValues) {
    const auto v = hz::ParameterRange{0.1, 0.5, 0.1}.values();
    ASSERT_EQ(v.size(), 5u);
    EXPECT_EQ(v.back(), 0.5);
    EXPECT_EQ(hz::ParameterRange::single(0.3).values().size(), 1u);
    EXPECT_THROW((hz::ParameterRange{0.5, 0.1, 0.1}.values()), hz::DomainError);
}

TEST(Sweep, RowsAreOrderedAndThreadIndependent) {
    const hz::ParameterRange a{0.6, 0.7, 0.05};
    const hz::ParameterRange eps{0.002, 0.006, 0.002};
    const auto one = hz::sweep(hz::Family::rhie, 3, a, eps, {}, 1);
    const auto many = hz::sweep(hz::Family::rhie, 3, a, eps, {}, 4);
    ASSERT_EQ(one.size(), 9u);
    std::ostringstream s1, s2;
    hz::write_sweep_csv(s1, one);
    hz::write_sweep_csv(s2, many);
    EXPECT_EQ(s1.str(), s2.str());
    EXPECT_EQ(s1.str().substr(0, s1.str().find('\n')),
              "family,n,a,eps,zero_count,n_plus,n_minus,n_singular_flagged,status");
    for (std::size_t i = 1; i < one.size(); ++i)
        EXPECT_TRUE(one[i - 1].a < one[i].a || (one[i - 1].a == one[i].a && one[i - 1].eps < one[i].eps));
}

TEST(Sweep, RhieN3ReachesExtremalCount) {
    const auto rows = hz::sweep(hz::Family::rhie, 3, hz::ParameterRange::single(0.67), hz::ParameterRange::single(0.005));
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].zero_count, 15);
}

TEST(Sweep, DomainErrorsBecomeRowStatus) {
    const auto rows = hz::sweep(hz::Family::mpw, 2, hz::ParameterRange{0.5, 1.0, 0.5}, {});
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].status, "ok");
    EXPECT_NE(rows[1].status.find("domain_error"), std::string::npos);
}
