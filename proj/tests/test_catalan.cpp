#include <fibword/catalan.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace fibword;

TEST(Catalan, Examples) {
    EXPECT_EQ(catalan(0), 1);
    const int first[] = {1, 2, 5, 14};
    for (std::uint64_t n = 1; n <= 4; ++n) EXPECT_EQ(catalan(n), first[n - 1]);
    EXPECT_EQ(catalan(10), 16796);
}

TEST(Catalan, SegnerRecurrence) {
    for (std::uint64_t n = 0; n <= 15; ++n) {
        BigInt sum = 0;
        for (std::uint64_t i = 0; i <= n; ++i) sum += catalan(i) * catalan(n - i);
        EXPECT_EQ(catalan(n + 1), sum) << n;
    }
}

TEST(FibWordAtCatalan, Examples) {
    EXPECT_EQ(fib_word_at_catalan(3).str(), "01001");
    EXPECT_EQ(fib_word_at_catalan(4).size(), 377u);
    EXPECT_THROW(fib_word_at_catalan(2), std::invalid_argument);
    EXPECT_THROW(fib_word_at_catalan(5), GuardError);  // C_5 = 42
}

TEST(FibWordAtCatalan, LengthIsFibonacciAtCatalanIndex) {
    for (std::uint64_t n = 3; n <= 4; ++n)
        EXPECT_EQ(BigInt(fib_word_at_catalan(n).size()), fib(catalan(n).convert_to<std::uint64_t>()));
}

TEST(CatalanFibRatio, Examples) {
    EXPECT_DOUBLE_EQ(catalan_fib_ratio(3), 1.6);
    EXPECT_NEAR(catalan_fib_ratio(4), 610.0 / 377.0, 1e-15);
    for (std::uint64_t n = 6; n <= 12; ++n) EXPECT_NEAR(catalan_fib_ratio(n), GoldenConstants::phi, 1e-9) << n;
    EXPECT_THROW(catalan_fib_ratio(2), std::invalid_argument);
    EXPECT_THROW(catalan_fib_ratio(13), std::invalid_argument);
}

TEST(CatalanFibRatio, StaysInConsecutiveRatioBracket) {
    for (std::uint64_t n = 4; n <= 12; ++n) {
        EXPECT_GT(catalan_fib_ratio(n), 1.6);
        EXPECT_LT(catalan_fib_ratio(n), 1.62);
    }
}

TEST(LimitFunctionG, Examples) {
    EXPECT_EQ(limit_function_g(2), Rational(3, 2));
    EXPECT_EQ(limit_function_g(4), Rational(15, 14));
    EXPECT_LT(std::abs(to_double(limit_function_g(50)) - 1.0), 1e-12);
    EXPECT_THROW(limit_function_g(0), std::invalid_argument);
    EXPECT_THROW(limit_function_g(201), std::invalid_argument);
}

TEST(LimitFunctionG, DecreasesToOneThroughCentralBinomial) {
    for (std::uint64_t n = 2; n <= 100; ++n) {
        EXPECT_EQ(limit_function_g(n) - 1, Rational(BigInt(n + 1), binomial(2 * n, n))) << n;
        EXPECT_LT(limit_function_g(n + 1), limit_function_g(n)) << n;
        EXPECT_GT(limit_function_g(n), 1);
    }
    for (std::uint64_t n = 50; n <= 200; ++n) EXPECT_LT(to_double(limit_function_g(n) - 1), 1e-12);
}

TEST(TableExpr, IsCatalanMinusOne) {
    EXPECT_EQ(table_expr(1), 0);
    EXPECT_EQ(table_expr(3), 4);
    EXPECT_EQ(table_expr(4), 13);
    EXPECT_THROW(table_expr(0), std::invalid_argument);
}

TEST(CatalanRecord, FieldsConsistent) {
    for (const auto& r : catalan_records(20)) {
        EXPECT_EQ(r.c_n, binomial(2 * r.n, r.n) / (r.n + 1));
        EXPECT_EQ(r.table_expr, Rational(r.c_n - 1));
        EXPECT_EQ(r.g_n, 1 + Rational(BigInt(r.n + 1), binomial(2 * r.n, r.n)));
    }
}
