#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mesa/exact.hpp"
#include "mesa/mesa_sets.hpp"
#include "mesa/parse.hpp"
#include "mesa/stirling.hpp"
#include "oracles.hpp"

using namespace mesa;

namespace {

StirlingPermutation perm(const std::string& digits) { return validate_stirling(parse_word(digits)); }

std::set<std::string> as_strings(const std::vector<StirlingPermutation>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) out.insert(w.to_string());
    return out;
}

} // namespace

TEST(ValidateStirling, AcceptsKnownWords) {
    EXPECT_EQ(perm("1221").order(), 2);
    EXPECT_EQ(perm("11").order(), 1);
    EXPECT_EQ(perm("884425536776321199").order(), 9);
    EXPECT_EQ(perm("1221").at(2), 2);
}

TEST(ValidateStirling, ReportsStirlingViolation) {
    try {
        perm("31324421");
        FAIL() << "expected StirlingViolation";
    } catch (const StirlingViolation& e) {
        EXPECT_EQ(e.k(), 3);
        EXPECT_EQ(e.interloper(), 1);
    }
}

TEST(ValidateStirling, ReportsLengthErrors) {
    EXPECT_THROW(perm("122"), LengthError);
    EXPECT_THROW(validate_stirling(std::vector<int>{}), LengthError);
}

TEST(ValidateStirling, ReportsMultisetErrors) {
    try {
        perm("1131");
        FAIL();
    } catch (const MultisetError& e) {
        EXPECT_EQ(e.kind(), MultisetError::Kind::OutOfRange);
        EXPECT_EQ(e.value(), 3);
        EXPECT_EQ(e.index(), 3u);
    }
    try {
        perm("1112");
        FAIL();
    } catch (const MultisetError& e) {
        EXPECT_EQ(e.kind(), MultisetError::Kind::Repeated);
        EXPECT_EQ(e.value(), 1);
    }
    try {
        perm("1100");
        FAIL();
    } catch (const MultisetError& e) {
        EXPECT_EQ(e.kind(), MultisetError::Kind::OutOfRange);
        EXPECT_EQ(e.value(), 0);
    }
}

TEST(ValidateStirling, AgreesWithOracleOnAllMultisetWordsOfOrder4) {
    std::vector<int> w{1, 1, 2, 2, 3, 3, 4, 4};
    do {
        bool accepted = true;
        try {
            validate_stirling(w);
        } catch (const StirlingViolation&) {
            accepted = false;
        }
        EXPECT_EQ(accepted, oracle::is_stirling(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

TEST(Generate, OrderTwoAndThree) {
    EXPECT_EQ(as_strings(generate_all(2)), (std::set<std::string>{"1122", "2211", "1221"}));
    const std::set<std::string> q3{"112233", "122133", "221133", "112332", "122331",
                                   "221331", "113322", "123321", "223311", "133122",
                                   "233211", "331122", "331221", "332211", "133221"};
    EXPECT_EQ(as_strings(generate_all(3)), q3);
}

TEST(Generate, OrderFourMatchesMultisetFilter) {
    std::set<std::string> expected;
    for (const auto& w : oracle::stirling_by_multiset_filter(4)) {
        std::string s;
        for (int v : w) s += static_cast<char>('0' + v);
        expected.insert(s);
    }
    ASSERT_EQ(expected.size(), 105u);
    const auto all = generate_all(4);
    EXPECT_EQ(all.size(), 105u);
    EXPECT_EQ(as_strings(all), expected);
}

TEST(Oracles, PrefixSearchMatchesMultisetFilter) {
    for (int n = 1; n <= 5; ++n) {
        const auto filtered = oracle::stirling_by_multiset_filter(n);
        std::vector<oracle::Word> searched;
        oracle::stirling_by_prefix_search(n, [&](const oracle::Word& w) { searched.push_back(w); });
        EXPECT_EQ(std::set<oracle::Word>(searched.begin(), searched.end()),
                  std::set<oracle::Word>(filtered.begin(), filtered.end()));
        EXPECT_EQ(searched.size(), filtered.size());
    }
}

TEST(Generate, CountsAreDoubleFactorialAndDistinct) {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::vector<int>> seen;
        std::size_t count = 0;
        for_each_stirling(n, [&](std::span<const int> w) {
            ++count;
            seen.emplace(w.begin(), w.end());
            EXPECT_TRUE(oracle::is_stirling({w.begin(), w.end()}));
        });
        EXPECT_EQ(Count(count), double_factorial_odd(static_cast<unsigned>(n))) << "n=" << n;
        EXPECT_EQ(seen.size(), count);
    }
}

TEST(Generate, EmissionOrderIsDeterministic) {
    const auto a = generate_all(5);
    const auto b = generate_all(5);
    EXPECT_EQ(a, b);
    // First tuple is all-zero insertions: each new pair goes to the front.
    EXPECT_EQ(a.front().to_string(), "5544332211");
    EXPECT_EQ(a.back().to_string(), "1122334455");
}

TEST(Generate, BlocksPartitionTheStreamInOrder) {
    const int n = 6;
    std::vector<std::vector<int>> whole;
    for_each_stirling(n, [&](std::span<const int> w) { whole.emplace_back(w.begin(), w.end()); });
    for (int depth = 0; depth <= 6; ++depth) {
        std::vector<std::vector<int>> pieces;
        const auto blocks = partition_count(n, depth);
        for (std::size_t b = 0; b < blocks; ++b)
            for_each_stirling_in_block(n, depth, b, [&](std::span<const int> w) {
                pieces.emplace_back(w.begin(), w.end());
            });
        EXPECT_EQ(pieces, whole) << "depth=" << depth;
    }
    EXPECT_EQ(partition_count(6, 2), 15u);
    EXPECT_THROW(for_each_stirling_in_block(n, 1, 3, [](std::span<const int>) {}), Error);
}

TEST(Generate, VisitorCanStopEarly) {
    int seen = 0;
    for_each_stirling(6, [&](std::span<const int>) { return ++seen < 10; });
    EXPECT_EQ(seen, 10);
}

TEST(Generate, ResourceGuard) {
    EXPECT_THROW(for_each_stirling(11, [](std::span<const int>) {}), ResourceGuard);
    EXPECT_THROW(generate_all(5, {4, false}), ResourceGuard);
    EXPECT_EQ(generate_all(5, {4, true}).size(), 945u);
    EXPECT_THROW(generate_all(0), Error);
}

TEST(MesaSetOfWord, KnownWords) {
    EXPECT_EQ(mesa_set(perm("884425536776321199")).elements(), (std::vector<int>{5, 7}));
    EXPECT_EQ(mesa_set(perm("1334664225518877")).elements(), (std::vector<int>{5, 6, 8}));
    EXPECT_EQ(mesa_set(perm("1331552662774884")).elements(), (std::vector<int>{3, 5, 6, 7, 8}));
    for (int n = 1; n <= 12; ++n) {
        std::vector<int> w;
        for (int v = 1; v <= n; ++v) w.insert(w.end(), {v, v});
        EXPECT_TRUE(mesa_set(validate_stirling(w)).empty());
    }
}

TEST(LocalMinima, KnownWords) {
    EXPECT_EQ(local_minima(perm("884425536776321199")), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(local_minima(perm("1122")), std::vector<int>{1});
    EXPECT_EQ(local_minima(perm("2211")), std::vector<int>{1});
    EXPECT_EQ(local_minima(perm("11")), std::vector<int>{1});
}

TEST(Pinnacle, NeverOnStirlingPermutations) {
    EXPECT_FALSE(has_pinnacle(perm("1221")));
    EXPECT_FALSE(has_pinnacle(perm("884425536776321199")));
    EXPECT_TRUE(has_pinnacle(std::vector<int>{1, 2, 1}));
    int count = 0;
    for (const auto& w : generate_all(4)) {
        EXPECT_FALSE(has_pinnacle(w));
        ++count;
    }
    EXPECT_EQ(count, 105);
}

TEST(StirlingProperties, ExhaustiveUpToOrderSeven) {
    for (int n = 1; n <= 7; ++n) {
        const int bound = (2 * n - 1) / 3;
        for_each_stirling(n, [&](std::span<const int> w) {
            const std::vector<int> word(w.begin(), w.end());
            ASSERT_FALSE(has_pinnacle(w));
            const auto m = mesa_values(w);
            ASSERT_LE(static_cast<int>(m.size()), bound);
            ASSERT_EQ(m, oracle::mesas(word));
            const auto minima = local_minima(w);
            ASSERT_EQ(minima, oracle::local_minima(word));
            for (int v : m) {
                // Both copies of a mesa are adjacent.
                const auto it = std::find(w.begin(), w.end(), v);
                ASSERT_EQ(*(it + 1), v);
                ASSERT_FALSE(std::binary_search(minima.begin(), minima.end(), v));
            }
            ASSERT_EQ(mesa_mask(w), MesaSet(m, n).mask());
        });
    }
}
