#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"

using hz::Complex;
using hz::RationalFunction;
using hz::RationalHarmonicFunction;

TEST(Harmonic, ClassifyModulus) {
    EXPECT_EQ(hz::classify_modulus(1.5, 1e-8), hz::Sense::preserving);
    EXPECT_EQ(hz::classify_modulus(0.5, 1e-8), hz::Sense::reversing);
    EXPECT_EQ(hz::classify_modulus(1.0 + 1e-9, 1e-8), hz::Sense::singular);
    EXPECT_EQ(hz::index_for(hz::Sense::preserving), 1);
    EXPECT_EQ(hz::index_for(hz::Sense::reversing), -1);
    EXPECT_FALSE(hz::index_for(hz::Sense::singular).has_value());
}

TEST(Harmonic, EvalAtPoleThrows) {
    const auto [f, big_f] = hz::intro_counterexample();
    EXPECT_THROW(f.eval(Complex{0.0}), hz::PoleEvaluation);
    EXPECT_THROW(hz::sense_at(f, Complex{0.0}), hz::PoleEvaluation);
    EXPECT_EQ(hz::sense_at(big_f, Complex{0.0}).sense, hz::Sense::singular);
}

TEST(Harmonic, ConstantRejected) {
    EXPECT_THROW(RationalHarmonicFunction(RationalFunction({2.0}, {1.0})), hz::DomainError);
}

TEST(FindZeros, IntroExample) {
    const auto [f, big_f] = hz::intro_counterexample();
    const auto zs = hz::find_zeros(f);
    ASSERT_EQ(zs.size(), 2u);
    EXPECT_LT(std::abs(zs[0].location - Complex(0, -1 / std::sqrt(2.0))), 1e-10);
    EXPECT_LT(std::abs(zs[1].location - Complex(0, 1 / std::sqrt(2.0))), 1e-10);
    for (const auto& z : zs) {
        EXPECT_EQ(z.sense, hz::Sense::preserving);
        EXPECT_NEAR(z.derivative_modulus, 3.0, 1e-9);
        EXPECT_EQ(z.index, 1);
    }
    const auto big = hz::find_zeros(big_f);
    ASSERT_EQ(big.size(), 3u);
    int singular = 0;
    for (const auto& z : big)
        if (z.sense == hz::Sense::singular) {
            ++singular;
            EXPECT_LT(std::abs(z.location), 1e-12);
            EXPECT_LT(std::abs(z.derivative_modulus - 1.0), 1e-12);
            EXPECT_TRUE(z.suspect_singular());
        }
    EXPECT_EQ(singular, 1);
}

TEST(FindZeros, LinearHasOneZero) {
    const RationalHarmonicFunction f(RationalFunction({0.0, 2.0}, {1.0}));
    const auto zs = hz::find_zeros(f);
    ASSERT_EQ(zs.size(), 1u);
    EXPECT_LT(std::abs(zs[0].location), 1e-14);
    EXPECT_EQ(zs[0].sense, hz::Sense::preserving);
}

TEST(FindZeros, ReducedInputMatchesReducedFunction) {
    const auto raw = hz::parse_rational("p: 0,1,0,1 ; q: 0,1").reduced();
    EXPECT_EQ(hz::format_rational(raw), "p: 1,0,1 ; q: 1");
    const auto zs = hz::find_zeros(RationalHarmonicFunction(raw));
    const auto want = oracle::zeros(testing_support::to_oracle(raw));
    EXPECT_EQ(zs.size(), want.size());
}

TEST(FindZeros, NonIsolatedZerosRejected) {
    // r(z) = 1/z has r(z) = conj(z) on the whole unit circle
    const RationalHarmonicFunction f(RationalFunction({1.0}, {0.0, 1.0}));
    EXPECT_THROW(hz::find_zeros(f), hz::DegenerateZeroSet);
}

TEST(FindZeros, FixedPointPolynomialVanishesAtZeros) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const auto r = hz::random_rational(rng, 2, 3);
        const auto fixed = hz::fixed_point_polynomial(r);
        EXPECT_LE(fixed.degree(), r.degree() * r.degree() + 1);
        for (const auto& z : hz::find_zeros(RationalHarmonicFunction(r))) {
            const double scale = fixed.magnitude_sum(std::abs(z.location));
            EXPECT_LT(std::abs(fixed.eval(z.location)), 1e-8 * scale);
        }
    }
}

TEST(FindZeros, ConjugationSymmetry) {
    // real coefficients: zeros are closed under conjugation
    const auto& m = testing_support::manifest();
    const auto f = hz::build_entry(m, m.at("rhie_n3"));
    const auto zs = hz::find_zeros(f);
    for (const auto& z : zs) {
        bool mirrored = false;
        for (const auto& w : zs)
            if (std::abs(w.location - std::conj(z.location)) < 1e-9) mirrored = w.sense == z.sense;
        EXPECT_TRUE(mirrored);
    }
}

TEST(FindZeros, RandomInstancesMatchOracle) {
    std::mt19937_64 rng(7);
    int compared = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const auto r = hz::random_rational(rng, 2, 2);
        const auto zs = hz::find_zeros(RationalHarmonicFunction(r));
        const auto oz = oracle::zeros(testing_support::to_oracle(r));
        bool inside = true;
        for (const auto& z : zs) inside = inside && std::abs(z.location.real()) < 1.95 && std::abs(z.location.imag()) < 1.95;
        if (!inside) continue;
        ++compared;
        EXPECT_EQ(zs.size(), oz.size()) << "trial " << trial;
    }
    EXPECT_GT(compared, 10);
}

TEST(FindZeros, FarFromOriginCluster) {
    const auto& m = testing_support::manifest();
    const auto f = hz::build_entry(m, m.at("rhie_n4_coconj"));
    EXPECT_EQ(hz::find_zeros(f).size(), 19u);
}

TEST(SenseCounts, Tally) {
    std::vector<hz::ClassifiedZero> zs(4);
    zs[0].sense = hz::Sense::preserving;
    zs[1].sense = hz::Sense::preserving;
    zs[2].sense = hz::Sense::reversing;
    zs[3].sense = hz::Sense::singular;
    const auto c = hz::count_senses(zs);
    EXPECT_EQ(c.preserving, 2);
    EXPECT_EQ(c.reversing, 1);
    EXPECT_EQ(c.singular, 1);
    EXPECT_EQ(c.total(), 4);
}
