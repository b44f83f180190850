#include <fibword/fibonacci.hpp>
#include <fibword/oracle.hpp>

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

using namespace fibword;
using namespace fibword::testing;

namespace {

// Plain recurrence, independent of the fast-doubling path.
BigInt fib_by_recurrence(std::uint64_t n) {
    BigInt a = 1, b = 1;
    for (std::uint64_t i = 2; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return n <= 2 ? BigInt(1) : b;
}

}  // namespace

TEST(GoldenConstants, SatisfyDefiningIdentities) {
    constexpr double phi = GoldenConstants::phi;
    EXPECT_NEAR(phi * phi, phi + 1.0, 1e-12);
    EXPECT_EQ(GoldenConstants::psi, 1.0 - phi);
    EXPECT_NEAR(GoldenConstants::sqrt5 * GoldenConstants::sqrt5, 5.0, 1e-12);
}

TEST(Fib, Examples) {
    EXPECT_EQ(fib(1), 1);
    EXPECT_EQ(fib(2), 1);
    EXPECT_EQ(fib(10), 55);
    EXPECT_EQ(fib(21), 10946);
    EXPECT_EQ(fib(22), 17711);
    EXPECT_THROW(fib(0), std::invalid_argument);
}

TEST(Fib, FastDoublingMatchesRecurrence) {
    for (std::uint64_t n = 1; n <= 400; ++n) ASSERT_EQ(fib(n), fib_by_recurrence(n)) << n;
}

TEST(FibBinet, RoundsToExactValueUpTo70) {
    EXPECT_NEAR(fib_binet(1), 1.0, 1e-12);
    EXPECT_NEAR(fib_binet(22), 17711.0, 0.5);
    for (std::uint64_t n = 1; n <= 70; ++n)
        EXPECT_LT(std::abs(fib_binet(n) - fib(n).convert_to<double>()), 0.5) << n;
    EXPECT_THROW(fib_binet(71), std::domain_error);
    EXPECT_THROW(fib_binet(0), std::invalid_argument);
}

TEST(KFib, Examples) {
    EXPECT_EQ(k_fib(1, 10), 55);
    const int expected[] = {0, 1, 2, 5, 12, 29};
    for (std::uint64_t n = 0; n < 6; ++n) EXPECT_EQ(k_fib(2, n), expected[n]);
    EXPECT_NEAR(k_fib_ratio(2, 40), 1.0 + std::sqrt(2.0), 1e-9);
    EXPECT_THROW(k_fib(0, 3), std::invalid_argument);
}

TEST(KFib, RatioApproachesPositiveRootOfCharacteristicPolynomial) {
    for (std::uint64_t k = 1; k <= 6; ++k) {
        const double kd = static_cast<double>(k);
        const double root = (kd + std::sqrt(kd * kd + 4.0)) / 2.0;
        EXPECT_NEAR(root * root - kd * root - 1.0, 0.0, 1e-12);
        EXPECT_NEAR(k_fib_ratio(k, 60), root, 1e-9) << k;
    }
}

TEST(FibWord, PrintedListing) {
    const char* listed[] = {"1", "0", "01", "010", "01001", "01001010"};
    for (std::uint64_t n = 1; n <= 6; ++n) EXPECT_EQ(fib_word(n).str(), listed[n - 1]) << n;
}

TEST(FibWord, SeventhWordFollowsRecurrence) {
    const Word f7 = fib_word(7);
    EXPECT_EQ(f7.str(), "0100101001001");
    EXPECT_EQ(f7.size(), 13u);
    EXPECT_FALSE(is_factor(bin("11"), f7));
}

TEST(FibWord, LengthIsFibonacciNumber) {
    for (std::uint64_t n = 1; n <= 30; ++n) EXPECT_EQ(BigInt(fib_word(n).size()), fib(n)) << n;
}

TEST(FibWord, RecurrenceAgreesAcrossConstructionPaths) {
    for (std::uint64_t n = 3; n <= 25; ++n) EXPECT_EQ(fib_word(n), concat(fib_word(n - 1), fib_word(n - 2))) << n;
}

TEST(FibWord, ProgramSeeds) {
    const Word w = fib_word(22, FibSeeds::program());
    EXPECT_EQ(w.size(), 28657u);
    EXPECT_EQ(letter_count(w, '1'), 17711u);
    EXPECT_EQ(letter_count(w, '0'), 10946u);
    EXPECT_EQ(w.str().substr(0, 30), "101101011011010110101101101011");
}

TEST(FibWord, Guards) {
    EXPECT_THROW(fib_word(0), std::invalid_argument);
    EXPECT_THROW(fib_word(60), GuardError);
    EXPECT_THROW(FibSeeds(bin(""), bin("0")), std::invalid_argument);
}

TEST(InfinitePrefix, Examples) {
    EXPECT_TRUE(infinite_prefix(0).empty());
    EXPECT_EQ(infinite_prefix(10).str(), "0100101001");
    EXPECT_EQ(infinite_prefix(34).str(), "0100101001001010010100100101001001");
    EXPECT_THROW(infinite_prefix((std::uint64_t{1} << 31) + 1), GuardError);
}

TEST(InfinitePrefix, EqualsRecurrenceWordsAtFibonacciLengths) {
    for (std::uint64_t n = 3; n <= 25; ++n) {
        const auto len = fib(n).convert_to<std::uint64_t>();
        EXPECT_EQ(infinite_prefix(len), fib_word(n)) << n;
    }
}

TEST(InfinitePrefix, NoForbiddenFactorsUpToAMillion) {
    const Word p = infinite_prefix(1000000);
    EXPECT_FALSE(is_factor(bin("11"), p));
    EXPECT_FALSE(is_factor(bin("000"), p));
}

TEST(InfinitePrefix, PrefixClosedAndFixedBySigma) {
    const Word big = infinite_prefix(5000);
    const Morphism sigma = fibonacci_morphism();
    for (std::uint64_t m : {0u, 1u, 2u, 7u, 100u, 999u, 3000u}) {
        const Word p = infinite_prefix(m);
        EXPECT_EQ(big.str().substr(0, m), p.str());
        EXPECT_EQ(sigma(p).str().substr(0, m), p.str()) << m;
    }
}

TEST(NthSymbol, Examples) {
    EXPECT_EQ(nth_symbol(0), '0');
    EXPECT_EQ(nth_symbol(1), '1');
}

TEST(NthSymbol, AgreesWithPrefixSweep) {
    const Word p = infinite_prefix(100000);
    for (std::uint64_t i = 0; i < p.size(); ++i) ASSERT_EQ(nth_symbol(i), p[i]) << i;
}

TEST(NthSymbol, AgreesWithCharacteristicFormulaFarOut) {
    // Symbol i is 1 exactly when floor((i+2)/phi^2) - floor((i+1)/phi^2) = 1.
    const long double inv_phi2 = 1.0L / (GoldenConstants::phi * GoldenConstants::phi);
    for (std::uint64_t i = 1000000; i < 1001000; ++i) {
        const auto a = static_cast<std::uint64_t>(std::floor((i + 2) * inv_phi2));
        const auto b = static_cast<std::uint64_t>(std::floor((i + 1) * inv_phi2));
        EXPECT_EQ(nth_symbol(i), a - b == 1 ? '1' : '0') << i;
    }
}
