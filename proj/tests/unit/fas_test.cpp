#include <gtest/gtest.h>

#include "dtf/fas.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace dtf {
namespace {

using testing::code_of;
using testing::ordered;
using testing::ordered_with_upsets;

std::vector<Player> order_of(const StrengthOrder& s)
{
    auto v = s.strongest_first();
    return {v.begin(), v.end()};
}

void expect_consistent(const TournamentDigraph& t, const FeedbackStructure& fs)
{
    const int n = t.size();
    std::vector<Arc> upsets;
    for (Player u = 0; u < n; ++u)
        for (Player v = 0; v < n; ++v)
            if (t.beats(u, v) && fs.sigma.rank(u) > fs.sigma.rank(v))
                upsets.push_back({u, v});
    std::sort(upsets.begin(), upsets.end());
    EXPECT_EQ(upsets, fs.arcs);
}

TEST(MinimumFas, AcyclicIsEmpty)
{
    auto fs = minimum_fas(ordered(8));
    EXPECT_EQ(fs.k(), 0);
    EXPECT_EQ(order_of(fs.sigma), (std::vector<Player>{0, 1, 2, 3, 4, 5, 6, 7}));
    EXPECT_TRUE(fs.vertices().empty());
}

TEST(MinimumFas, SingleUpset)
{
    auto t = ordered_with_upsets(4, {{3, 0}});
    auto fs = minimum_fas(t);
    EXPECT_EQ(fs.arcs, (std::vector<Arc>{{3, 0}}));
    EXPECT_EQ(order_of(fs.sigma), (std::vector<Player>{0, 1, 2, 3}));
    EXPECT_EQ(fs.vertices().members(), (std::vector<Player>{0, 3}));
    EXPECT_EQ(fs.heads().members(), (std::vector<Player>{0}));
}

TEST(MinimumFas, TwoDisjointTrianglesNeedTwoArcs)
{
    auto t = ordered_with_upsets(6, {{2, 0}, {5, 3}});
    EXPECT_EQ(minimum_fas(t).k(), 2);
}

TEST(MinimumFas, MatchesExhaustiveSearch)
{
    for (int n : {3, 4, 5, 6})
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            auto t = testing::random_tournament(n, seed * 31 + n);
            auto fs = minimum_fas(t);
            EXPECT_EQ(fs.k(), testing::brute_min_fas(t)) << "n=" << n << " seed=" << seed;
            expect_consistent(t, fs);
            EXPECT_EQ(fs.k() == 0, testing::brute_min_fas(t) == 0);
        }
}

TEST(MinimumFas, Deterministic)
{
    auto t = testing::random_tournament(10, 77);
    auto a = minimum_fas(t);
    auto b = minimum_fas(t);
    EXPECT_EQ(a.arcs, b.arcs);
    EXPECT_EQ(a.sigma, b.sigma);
}

TEST(StrengthOrder, Examples)
{
    EXPECT_EQ(order_of(strength_order(ordered(4), {})), (std::vector<Player>{0, 1, 2, 3}));
    auto t = ordered_with_upsets(4, {{3, 0}});
    EXPECT_EQ(order_of(strength_order(t, {{3, 0}})), (std::vector<Player>{0, 1, 2, 3}));
    EXPECT_EQ(code_of([&] { strength_order(t, {}); }), ErrorCode::NotAFeedbackArcSet);

    std::vector<Arc> all;
    for (Player u = 0; u < 4; ++u)
        for (Player v = 0; v < 4; ++v)
            if (t.beats(u, v))
                all.push_back({u, v});
    EXPECT_EQ(order_of(strength_order(t, all)), (std::vector<Player>{0, 1, 2, 3}));
}

TEST(StrengthOrder, TopologicallyOrdersTheRest)
{
    auto t = testing::random_tournament(9, 5);
    auto fs = minimum_fas(t);
    auto sigma = strength_order(t, fs.arcs);
    for (Player u = 0; u < 9; ++u)
        for (Player v = 0; v < 9; ++v)
            if (t.beats(u, v) && !std::binary_search(fs.arcs.begin(), fs.arcs.end(), Arc{u, v}))
                EXPECT_TRUE(sigma.stronger(u, v));
}

}  // namespace
}  // namespace dtf
