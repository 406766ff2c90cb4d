#include <gtest/gtest.h>

#include <random>

#include "kpa/degree.hpp"

using kpa::DegreeVector;

TEST(Degree, LatticeLawsOnRandomVectors) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> d(0, 4);
    for (int trial = 0; trial < 500; ++trial) {
        DegreeVector m{d(rng), d(rng), d(rng)}, n{d(rng), d(rng), d(rng)};
        EXPECT_TRUE(m.meet(n).le(m));
        EXPECT_TRUE(m.le(m.join(n)));
        EXPECT_EQ(m.join(n), n.join(m));
        EXPECT_EQ(m.meet(m.join(n)), m);
        EXPECT_EQ((m.join(n) - m) + m, m.join(n));
        EXPECT_EQ(m.monus(n) + m.meet(n), m);
    }
}

TEST(Degree, SubtractionNeedsOrder) {
    EXPECT_THROW(DegreeVector({1, 0}) - DegreeVector({0, 1}), kpa::DegreeError);
    EXPECT_EQ(DegreeVector({2, 1}) - DegreeVector({1, 1}), DegreeVector({1, 0}));
}

TEST(Degree, RankMismatchThrows) {
    EXPECT_THROW((void)DegreeVector({1}).le(DegreeVector({1, 1})), kpa::DegreeError);
}

TEST(Degree, EnumerationOrderAndCount) {
    auto all = kpa::degrees_up_to({1, 2});
    ASSERT_EQ(all.size(), 6u);
    EXPECT_EQ(all.front(), DegreeVector({0, 0}));
    EXPECT_EQ(all.back(), DegreeVector({1, 2}));
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LE(all[i - 1].total(), all[i].total());
}

TEST(Degree, Parse) {
    EXPECT_EQ(kpa::parse_degree("(1,2)"), DegreeVector({1, 2}));
    EXPECT_EQ(kpa::parse_degree("3"), DegreeVector({3}));
    EXPECT_THROW(kpa::parse_degree("1,,2"), kpa::ParseError);
    EXPECT_THROW(kpa::parse_degree("x"), kpa::ParseError);
}
