#include <gtest/gtest.h>

#include <map>
#include <random>

#include "support.hpp"

using namespace combigen;
using namespace combigen::testing;

namespace {

using Seqs = std::vector<std::vector<Part>>;

CollectedParts compositions(Part n, const PartsSet& parts, CompositionOptions opt = {}) {
    return collect_parts([&](auto sink) { return generate_compositions(n, parts, sink, opt); });
}

CollectedParts bounded(Part n, const PartsSet& parts) {
    return collect_parts([&](auto sink) { return generate_compositions_bounded(n, parts, sink); });
}

CollectedParts partitions(Part n, const PartsSet& parts) {
    return collect_parts([&](auto sink) { return generate_partitions(n, parts, sink); });
}

PartsSet random_parts(std::mt19937& rng) {
    const auto p = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<Part> pool{1, 2, 3, 4, 5, 6, 7};
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(p);
    return PartsSet(pool);
}

} // namespace

TEST(Compositions, NineFromThreesAndTwos) {
    const auto c = compositions(9, PartsSet{3, 2});
    EXPECT_EQ(c.emissions, (Seqs{{3, 3, 3}, {3, 2, 2, 2}, {2, 3, 2, 2}, {2, 2, 3, 2}, {2, 2, 2, 3}}));
}

TEST(Compositions, ThreeHasFour) {
    EXPECT_EQ(compositions(3, PartsSet{1, 2, 3}).emissions,
              (Seqs{{1, 1, 1}, {1, 2}, {2, 1}, {3}}));
}

TEST(Compositions, NoPartFits) {
    const auto c = compositions(1, PartsSet{2, 3});
    EXPECT_TRUE(c.emissions.empty());
    EXPECT_EQ(c.stats.wasteful_branches, 0u);
}

TEST(Compositions, InvalidInput) {
    auto sink = [](std::span<const Part>) {};
    try {
        generate_compositions(0, PartsSet{1}, sink);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NOutOfRange);
    }
    try {
        PartsSet empty(std::vector<Part>{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EmptyParts);
    }
    EXPECT_THROW(PartsSet({1, 1}), Error);
    EXPECT_THROW(PartsSet({0, 2}), Error);
    EXPECT_THROW(PartsSet(std::vector<Part>{1, 2}, std::vector<std::size_t>{1}), Error);
    EXPECT_THROW(generate_compositions_bounded(3, PartsSet{1, 2}, sink), Error);
}

TEST(Compositions, ZeroTargetBehindFlag) {
    const auto c = compositions(0, PartsSet{1, 2}, {.allow_zero = true});
    EXPECT_EQ(c.emissions, (Seqs{{}}));
}

TEST(Compositions, BoundedByOracle) {
    const auto parts = PartsSet::bounded({1, 2, 3}, {2, 2, 2});
    const auto c = bounded(4, parts);
    const Seqs expected{{1, 1, 2}, {1, 2, 1}, {1, 3}, {2, 1, 1}, {2, 2}, {3, 1}};
    EXPECT_EQ(c.emissions, expected);
    EXPECT_EQ(oracle::brute_compositions(4, parts, true), expected);
}

TEST(Compositions, BoundEdgeCases) {
    EXPECT_TRUE(bounded(2, PartsSet::bounded({1}, {1})).emissions.empty());
    EXPECT_EQ(bounded(2, PartsSet::bounded({1}, {2})).emissions, (Seqs{{1, 1}}));
}

TEST(Partitions, Examples) {
    EXPECT_EQ(partitions(9, PartsSet{3, 2}).emissions, (Seqs{{3, 3, 3}, {3, 2, 2, 2}}));
    EXPECT_EQ(partitions(4, PartsSet{1, 2, 3}).emissions, (Seqs{{1, 1, 1, 1}, {1, 1, 2}, {1, 3}, {2, 2}}));
    EXPECT_EQ(partitions(1, PartsSet{1}).emissions, (Seqs{{1}}));
}

TEST(Compositions, PropertiesAgainstOracle) {
    std::mt19937 rng(8128);
    for (int trial = 0; trial < 200; ++trial) {
        const auto parts = random_parts(rng);
        const auto n = std::uniform_int_distribution<Part>(1, 15)(rng);
        const auto c = compositions(n, parts);
        ASSERT_EQ(c.emissions, oracle::brute_compositions(n, parts)) << "n=" << n;
        for (const auto& e : c.emissions) {
            Part sum = 0;
            for (auto v : e) sum += v;
            ASSERT_EQ(sum, n);
            ASSERT_LE(e.size(), n);
        }
        ASSERT_EQ(order_violations_all_pairs(positions(parts, c.emissions)), 0u);

        // Bounds at or above n change nothing.
        std::vector<std::size_t> loose(parts.size(), n);
        const auto loose_parts = PartsSet::bounded(std::vector<Part>(parts.parts().begin(), parts.parts().end()), loose);
        ASSERT_EQ(bounded(n, loose_parts).emissions, c.emissions);

        // Tight random bounds agree with the filtered oracle.
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < parts.size(); ++i) tight.push_back(std::uniform_int_distribution<std::size_t>(0, 3)(rng));
        const auto tight_parts = PartsSet::bounded(std::vector<Part>(parts.parts().begin(), parts.parts().end()), tight);
        ASSERT_EQ(bounded(n, tight_parts).emissions, oracle::brute_compositions(n, tight_parts, true));

        // One partition per multiset group of compositions.
        const auto parts_out = partitions(n, parts);
        ASSERT_EQ(parts_out.emissions, oracle::brute_partitions(n, parts));
        std::map<std::vector<std::size_t>, int> groups;
        for (const auto& pos : positions(parts, c.emissions)) {
            auto sorted = pos;
            std::sort(sorted.begin(), sorted.end());
            ++groups[sorted];
        }
        ASSERT_EQ(parts_out.emissions.size(), groups.size());
        for (const auto& pos : positions(parts, parts_out.emissions)) {
            ASSERT_TRUE(std::is_sorted(pos.begin(), pos.end()));
            ASSERT_TRUE(groups.count(pos));
        }
    }
}
