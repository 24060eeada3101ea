#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace combigen;
using namespace combigen::testing;

namespace {

Collected subsets(const InputList& list, const OrderSet& order, CombMode mode) {
    return collect([&](auto sink) { return generate_subsets(list, order, mode, sink); });
}

Collected parens(std::size_t n) {
    return collect([&](auto sink) { return generate_parenthesizations(n, sink); });
}

} // namespace

TEST(Subsets, TwoDistinct) {
    const auto c = subsets(letters(2), letter_order(2), CombMode::Distinct);
    EXPECT_EQ(c.emissions, (std::vector<Emission>{{}, {"a"}, {"a", "b"}, {"b"}}));
    EXPECT_EQ(c.stats.wasteful_branches, 0u);
}

TEST(Subsets, ThreeDistinctIsEight) {
    EXPECT_EQ(subsets(letters(3), letter_order(3), CombMode::Distinct).emissions.size(), 8u);
}

TEST(Subsets, MultisetModeKeepsRepeats) {
    const auto c = subsets(InputList{"a", "a"}, OrderSet{"a"}, CombMode::Multiset);
    EXPECT_EQ(c.emissions, (std::vector<Emission>{{}, {"a"}, {"a", "a"}}));
    const auto d = subsets(InputList{"a", "a"}, OrderSet{"a"}, CombMode::Distinct);
    EXPECT_EQ(d.emissions, (std::vector<Emission>{{}, {"a"}}));
}

TEST(Subsets, Singleton) {
    for (auto mode : {CombMode::Distinct, CombMode::Multiset})
        EXPECT_EQ(subsets(InputList{"x"}, OrderSet{"x"}, mode).emissions, (std::vector<Emission>{{}, {"x"}}));
}

TEST(Subsets, PowerOfTwoForDistinctLists) {
    for (std::size_t n = 1; n <= 12; ++n)
        EXPECT_EQ(subsets(letters(n), letter_order(n), CombMode::Distinct).stats.emissions, std::uint64_t{1} << n);
}

TEST(Subsets, ProductOfMultiplicitiesAndOracle) {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 150; ++trial) {
        const auto inst = random_instance(rng);
        const auto counts = build_count_array(inst.list, inst.order);
        std::uint64_t product = 1;
        for (auto v : counts.values()) product *= v + 1;
        const auto c = subsets(inst.list, inst.order, CombMode::Multiset);
        ASSERT_EQ(c.stats.emissions, product) << inst.describe();
        ASSERT_EQ(c.emissions, oracle::brute_subsets(inst.list, inst.order, CombMode::Multiset)) << inst.describe();
        const auto d = subsets(inst.list, inst.order, CombMode::Distinct);
        ASSERT_EQ(d.emissions, oracle::brute_subsets(inst.list, inst.order, CombMode::Distinct)) << inst.describe();
        ASSERT_EQ(order_violations_all_pairs(positions(inst.order, c.emissions)), 0u);

        // Grouping by length reproduces each r-combination run.
        for (std::size_t r = 1; r <= inst.list.size(); ++r) {
            std::vector<Emission> of_length;
            for (const auto& e : c.emissions)
                if (e.size() == r) of_length.push_back(e);
            const auto comb = collect([&](auto sink) {
                return generate_combinations(inst.list, inst.order, r, CombMode::Multiset, sink);
            });
            ASSERT_EQ(of_length, comb.emissions) << inst.describe() << " r=" << r;
        }
    }
}

TEST(Parenthesizations, SmallCases) {
    EXPECT_EQ(parens(1).emissions, chars_list({"()"}));
    EXPECT_EQ(parens(3).emissions, chars_list({"((()))", "(()())", "(())()", "()(())", "()()()"}));
    EXPECT_EQ(parens(3).stats.wasteful_branches, 0u);
}

TEST(Parenthesizations, TenPairs) { EXPECT_EQ(parens(10).stats.emissions, 16796u); }

TEST(Parenthesizations, CountsMatchCatalanRecurrence) {
    for (std::size_t n = 1; n <= 12; ++n) {
        std::uint64_t count = 0;
        const auto stats = generate_parenthesizations(n, [&](const EmissionView&) { ++count; });
        EXPECT_EQ(count, oracle::catalan_number(n)) << n;
        EXPECT_EQ(stats.emissions, count);
        EXPECT_LE(stats.candidate_iterations, stats.emissions * 2 * n * 2);
    }
}

TEST(Parenthesizations, PrefixValidityAndExtremes) {
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto c = parens(n);
        for (const auto& e : c.emissions) {
            long depth = 0;
            for (const auto& t : e) {
                depth += t == "(" ? 1 : -1;
                ASSERT_GE(depth, 0);
            }
            ASSERT_EQ(depth, 0);
        }
        Emission nested(n, "(");
        nested.insert(nested.end(), n, ")");
        Emission flat;
        for (std::size_t k = 0; k < n; ++k) {
            flat.push_back("(");
            flat.push_back(")");
        }
        EXPECT_EQ(c.emissions.front(), nested);
        EXPECT_EQ(c.emissions.back(), flat);
        if (n <= 8) {
            EXPECT_EQ(c.emissions, oracle::brute_parenthesizations(n));
        }
    }
}

TEST(Parenthesizations, RangeChecked) {
    auto sink = [](const EmissionView&) {};
    try {
        generate_parenthesizations(0, sink);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NOutOfRange);
    }
    EXPECT_THROW(generate_parenthesizations(max_paren_pairs + 1, sink), Error);
}
