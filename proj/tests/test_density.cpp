#include <fibword/density.hpp>
#include <fibword/oracle.hpp>
#include <fibword/verify.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "test_support.hpp"

using namespace fibword;
using namespace fibword::testing;

TEST(CountOccurrences, Examples) {
    EXPECT_EQ(count_occurrences(bin("0"), bin("01001010")), 5u);
    EXPECT_EQ(count_occurrences(bin("101"), bin("0100101001001")), 1u);
    EXPECT_EQ(count_occurrences(bin("01"), bin("")), 0u);
    EXPECT_EQ(count_occurrences(ab("aa"), ab("aaa")), 2u);
    EXPECT_THROW(count_occurrences(bin(""), bin("01")), std::invalid_argument);
}

TEST(CountOccurrences, MatchesWindowScanExhaustiveAndRandom) {
    std::vector<Word> patterns;
    for_each_word(Alphabet::binary(), 1, 8, [&](const Word& w) { patterns.push_back(w); });
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const Word text = random_word(rng, Alphabet::binary(), rng() % 65);
        for (const auto& p : patterns) ASSERT_EQ(count_occurrences(p, text), oracle::brute_count(p, text));
    }
    const Word fib_text = infinite_prefix(64);
    for (const auto& p : patterns) ASSERT_EQ(count_occurrences(p, fib_text), oracle::brute_count(p, fib_text));
}

TEST(Density, Examples) {
    EXPECT_EQ(density(bin("0"), 8).value, Rational(5, 8));
    EXPECT_EQ(density(bin("11"), 1000).value, 0);
    EXPECT_EQ(density(bin("101"), 13).value, Rational(1, 13));
    EXPECT_THROW(density(bin("0"), 0), std::invalid_argument);
}

TEST(Density, OracleCountOfOneZeroOneInFirstThousand) {
    // Window-scan count over the first 1000 symbols.
    const Word p = infinite_prefix(1000);
    EXPECT_EQ(oracle::brute_count(bin("101"), p), 145u);
    EXPECT_EQ(density(bin("101"), 1000).value, Rational(145, 1000));
}

TEST(Density, LetterDensitiesAreComplementaryAndBounded) {
    for (std::uint64_t n : {1u, 2u, 5u, 13u, 100u, 987u, 1000u}) {
        const auto d0 = density(bin("0"), n), d1 = density(bin("1"), n);
        EXPECT_EQ(d0.value + d1.value, 1);
        for (const auto* d : {&d0, &d1}) {
            EXPECT_GE(d->value, 0);
            EXPECT_LE(d->value, 1);
        }
    }
}

TEST(RatioCurve, Examples) {
    const auto c = ratio_curve(40);
    EXPECT_EQ(c[0].value, 1);
    EXPECT_EQ(c[9].value, Rational(55, 89));
    EXPECT_NEAR(c[9].value_real, 0.6179775280898876, 1e-15);
    EXPECT_NEAR(c[39].value_real, GoldenConstants::phi - 1.0, 1e-12);
    EXPECT_THROW(ratio_curve(0), std::invalid_argument);
    EXPECT_THROW(ratio_curve(10001), std::invalid_argument);
}

TEST(RatioCurve, ExactFibonacciQuotientsOscillatingAroundInversePhi) {
    const auto c = ratio_curve(60);
    for (std::uint64_t n = 1; n <= 60; ++n) {
        const auto& s = c[n - 1];
        EXPECT_EQ(s.n, n);
        EXPECT_EQ(s.value, Rational(fib(n), fib(n + 1)));
        // Odd n overshoots phi - 1, even n undershoots.
        EXPECT_EQ(compare_to_inverse_phi(s.value), n % 2 == 1 ? 1 : -1) << n;
    }
}

TEST(LetterDensityCurve, Examples) {
    const auto zeros = letter_density_curve('0', 10946);
    const auto ones = letter_density_curve('1', 8);
    EXPECT_EQ(zeros[7].value, Rational(5, 8));
    EXPECT_EQ(ones[7].value, Rational(3, 8));
    EXPECT_EQ(zeros.back().value, Rational(6765, 10946));
    EXPECT_NEAR(zeros.back().value_real, 0.6180, 0.001);
    EXPECT_THROW(letter_density_curve('2', 5), std::invalid_argument);
}

TEST(TriangleRatio, ConvergesToPhi) {
    EXPECT_NEAR(triangle_ratio(1), std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(triangle_ratio(30), GoldenConstants::phi, 1e-8);
    double prev = std::abs(triangle_ratio(10) - GoldenConstants::phi);
    for (std::uint64_t n = 11; n <= 40; ++n) {
        const double err = std::abs(triangle_ratio(n) - GoldenConstants::phi);
        EXPECT_LE(err, prev) << n;
        prev = err;
    }
}

TEST(ExpSumApprox, ValuesAndMonotonicity) {
    EXPECT_EQ(exp_sum_approx(0), 1.0);
    EXPECT_NEAR(exp_sum_approx(30), 8.9e-9, 1e-10);
    for (std::uint64_t n = 30; n <= 200; ++n) EXPECT_LT(exp_sum_approx(n), 1e-6);
    for (std::uint64_t n = 1; n <= 200; ++n) {
        EXPECT_LT(exp_sum_approx(n), exp_sum_approx(n - 1));
        EXPECT_LE(exp_sum_approx(n), 1.0);
    }
}

TEST(IntegralDensity, AnalyticCase) {
    const auto e = integral_density({0.0, std::numeric_limits<double>::infinity(), 1.0, 1.0});
    EXPECT_NEAR(e.quadrature, 0.5, 1e-12);
    EXPECT_NEAR(e.closed_form, 0.5, 1e-12);
    EXPECT_TRUE(e.converged);
}

TEST(IntegralDensity, DegenerateInterval) {
    const auto e = integral_density({2.0, 2.0, 3.0, 1.0});
    EXPECT_EQ(e.quadrature, 0.0);
    EXPECT_EQ(e.closed_form, 0.0);
}

TEST(IntegralDensity, ElementaryAntiderivatives) {
    // k = 1: integral of e^{-cx} is (e^{-ca} - e^{-cb}) / c.
    // k = 2: integral of x e^{-cx} is [-(x/c + 1/c^2) e^{-cx}].
    for (double tau : {0.5, 1.0, 2.0}) {
        const double c = 1.0 + 1.0 / tau;
        const double k1 = (std::exp(-c * 1.0) - std::exp(-c * 3.0)) / c;
        auto prim2 = [c](double x) { return -(x / c + 1.0 / (c * c)) * std::exp(-c * x); };
        const double k2 = prim2(3.0) - prim2(1.0);
        EXPECT_NEAR(integral_density({1.0, 3.0, 1.0, tau}).quadrature, k1, 1e-14);
        EXPECT_NEAR(integral_density({1.0, 3.0, 2.0, tau}).quadrature, k2, 1e-14);
    }
}

TEST(IntegralDensity, QuadratureAndGammaRoutesAgreeOnGrid) {
    const std::pair<double, double> intervals[] = {{0, 1}, {0, 10}, {1, 3}};
    for (double k : {0.5, 1.0, 2.0, 5.0})
        for (double tau : {0.5, 1.0, 2.0})
            for (auto [a, b] : intervals) {
                const auto e = integral_density({a, b, k, tau});
                EXPECT_TRUE(e.converged);
                EXPECT_LE(std::abs(e.quadrature - e.closed_form), 1e-9 * std::abs(e.closed_form))
                    << "k=" << k << " tau=" << tau << " [" << a << "," << b << "]";
            }
}

TEST(IntegralDensity, ReversedBoundsFlipSign) {
    const auto fwd = integral_density({1.0, 3.0, 2.0, 1.0});
    const auto rev = integral_density({3.0, 1.0, 2.0, 1.0});
    EXPECT_DOUBLE_EQ(rev.quadrature, -fwd.quadrature);
    EXPECT_DOUBLE_EQ(rev.closed_form, -fwd.closed_form);
}

TEST(IntegralDensity, SemiInfiniteSingularCase) {
    // k = 1/2, tau = 1: integral_0^inf x^{-1/2} e^{-2x} dx = sqrt(pi/2).
    const auto e = integral_density({0.0, std::numeric_limits<double>::infinity(), 0.5, 1.0});
    EXPECT_NEAR(e.quadrature, std::sqrt(std::acos(-1.0) / 2.0), 1e-12);
    EXPECT_NEAR(e.closed_form, std::sqrt(std::acos(-1.0) / 2.0), 1e-12);
}

TEST(IntegralDensity, RejectsInvalidParameters) {
    EXPECT_THROW(integral_density({0.0, 1.0, 0.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(integral_density({0.0, 1.0, 1.0, -1.0}), std::invalid_argument);
    EXPECT_THROW(integral_density({-1.0, 1.0, 1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(integral_density({std::numeric_limits<double>::infinity(), 1.0, 1.0, 1.0}), std::invalid_argument);
}
