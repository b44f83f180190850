#include <fibword/oracle.hpp>
#include <fibword/verify.hpp>

#include <gtest/gtest.h>

using namespace fibword;

namespace {
Word ab(const std::string& s) { return Word(Alphabet::binary_ab(), s); }
Word bin(const std::string& s) { return Word(Alphabet::binary(), s); }
Word abc(const std::string& s) { return Word(Alphabet::ternary(), s); }
}  // namespace

TEST(BruteSpEnumerate, Examples) {
    std::vector<std::string> got;
    for (const auto& w : oracle::brute_sp_enumerate(ab("abaa"))) got.push_back(w.str());
    EXPECT_EQ(got, (std::vector<std::string>{"a", "aa", "aaa", "aba", "b"}));
    EXPECT_EQ(oracle::brute_sp_enumerate(ab("ab")).size(), 2u);
    EXPECT_EQ(oracle::brute_sp_enumerate(ab("abab")).size(), 6u);
    EXPECT_THROW(oracle::brute_sp_enumerate(ab(std::string(21, 'a'))), GuardError);
}

TEST(BruteCount, Examples) {
    EXPECT_EQ(oracle::brute_count(ab("aa"), ab("aaa")), 2u);
    EXPECT_EQ(oracle::brute_count(bin("0"), bin("01001010")), 5u);
    EXPECT_EQ(oracle::brute_count(bin("0"), bin("")), 0u);
    EXPECT_THROW(oracle::brute_count(bin(""), bin("0")), std::invalid_argument);
}

TEST(BruteSquareScan, Examples) {
    EXPECT_TRUE(oracle::brute_square_scan(ab("abab")));
    EXPECT_FALSE(oracle::brute_square_scan(abc("abc")));
    EXPECT_FALSE(oracle::brute_square_scan(abc("abcacb")));
    EXPECT_THROW(oracle::brute_square_scan(ab(std::string(1001, 'a'))), GuardError);
}

TEST(BrutePalFactors, SmallCases) {
    EXPECT_EQ(oracle::brute_pal_factors(ab("abaa")).size(), 4u);
    EXPECT_EQ(oracle::brute_pal_factors(ab("abab")).size(), 4u);
}

TEST(Verification, EveryDifferentialSuitePasses) {
    for (const auto& r : run_verification()) {
        EXPECT_GT(r.checked, 0u) << r.name;
        EXPECT_TRUE(r.ok()) << r.name << ": " << r.mismatches << " mismatches";
    }
}
