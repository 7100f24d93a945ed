#include <gtest/gtest.h>

#include <random>

#include "dtf/arborescence.hpp"
#include "dtf/fas.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace dtf {
namespace {

using testing::code_of;
using testing::ordered;

RootedForest forest_of(const std::vector<std::vector<int>>& children)
{
    RootedForest f(static_cast<int>(children.size()));
    for (std::size_t v = 0; v < children.size(); ++v)
        for (int c : children[v])
            f.add_arc({static_cast<Player>(v), c});
    return f;
}

TEST(Alpha, Heights)
{
    auto sba = forest_of(testing::binomial_tree(3));
    EXPECT_EQ(alpha(sba, 0), 3);
    EXPECT_EQ(alpha(sba, 7), 0);
    auto path = RootedForest::from_arcs(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(code_of([&] { alpha(path, 0); }), ErrorCode::NotPowerOfTwoSubtree);
}

TEST(BinomialArborescence, Shapes)
{
    EXPECT_TRUE(is_binomial_arborescence(RootedForest(1), 0));
    EXPECT_FALSE(is_binomial_arborescence(RootedForest::from_arcs(3, {{0, 1}, {0, 2}}), 0));
    EXPECT_TRUE(is_binomial_arborescence(RootedForest::from_arcs(4, {{0, 1}, {0, 2}, {1, 3}}), 0));
    for (int h = 0; h <= 6; ++h)
        EXPECT_TRUE(is_spanning_binomial_arborescence(forest_of(testing::binomial_tree(h))));
    EXPECT_FALSE(is_spanning_binomial_arborescence(RootedForest(2)));
}

TEST(FeedbackDescendants, Definition)
{
    auto f = RootedForest::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_TRUE(feedback_descendants(f, 0, PlayerSet(4)).empty());
    EXPECT_EQ(feedback_descendants(f, 0, PlayerSet(4, {1})), (std::vector<Player>{2, 3}));
    EXPECT_EQ(feedback_descendants(f, 0, PlayerSet(4, {1, 2})), (std::vector<Player>{2, 3}));
    EXPECT_EQ(feedback_descendants(f, 1, PlayerSet(4, {1})), std::vector<Player>{});
    auto g = RootedForest::from_arcs(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(feedback_descendants(g, 0, PlayerSet(3, {1})), (std::vector<Player>{2}));
}

TEST(GuessedSize, Definition)
{
    HeightGuess none(4);
    EXPECT_EQ(guessed_size_beta(RootedForest(4), 0, none), 1);

    HeightGuess g(4);
    g.set(1, 3);
    auto f = RootedForest::from_arcs(4, {{1, 2}});
    EXPECT_EQ(guessed_size_beta(f, 1, g), 8);

    auto h = RootedForest::from_arcs(4, {{0, 1}, {0, 2}, {2, 3}});
    EXPECT_EQ(guessed_size_beta(h, 0, none), 4);
    EXPECT_EQ(guessed_sizes(h, none), (std::vector<std::int64_t>{4, 1, 2, 1}));
}

TEST(GuessedSize, MatchesSubtreeSizeUnderTrueHeights)
{
    std::mt19937_64 rng(9);
    auto t = testing::random_tournament(16, 4);
    std::vector<Player> order(16);
    std::iota(order.begin(), order.end(), 0);
    for (int round = 0; round < 50; ++round) {
        std::shuffle(order.begin(), order.end(), rng);
        auto sba = simulate(t, {order}).sba;
        HeightGuess g(16);
        for (Player v : {order[0], order[5], order[9]})
            g.set(v, alpha(sba, v));
        auto beta = guessed_sizes(sba, g);
        for (Player v = 0; v < 16; ++v)
            EXPECT_EQ(beta[v], std::int64_t{1} << alpha(sba, v));
    }
}

TEST(GuessedSize, UnchangedByDeletingFeedbackDescendants)
{
    auto host = testing::binomial_tree(3);
    auto full = forest_of(host);
    PlayerSet marks(8, {4});
    HeightGuess g(8);
    g.set(4, alpha(full, 4));
    // Drop 4's subtree below it: players 5, 6, 7.
    auto cut = RootedForest::from_arcs(8, {{0, 1}, {0, 2}, {0, 4}, {2, 3}});
    EXPECT_EQ(feedback_descendants(full, 0, marks), (std::vector<Player>{5, 6, 7}));
    EXPECT_EQ(guessed_size_beta(cut, 0, g), guessed_size_beta(full, 0, g));
    EXPECT_EQ(guessed_size_beta(cut, 0, g), 8);
}

TEST(PartialBa, Examples)
{
    auto b2 = RootedForest::from_arcs(4, {{0, 1}, {0, 2}, {1, 3}});
    HeightGuess none(4);
    EXPECT_TRUE(is_partial_ba(b2, 0, PlayerSet(4), none, 2));
    EXPECT_FALSE(is_partial_ba(b2, 0, PlayerSet(4), none, 1));

    auto missing_child = RootedForest::from_arcs(4, {{0, 2}});
    EXPECT_FALSE(is_partial_ba(missing_child, 0, PlayerSet(4), none, 2));

    // Feedback child 1 of height 1 lost its own child 3.
    HeightGuess g(4);
    g.set(1, 1);
    auto trimmed = RootedForest::from_arcs(4, {{0, 1}, {0, 2}});
    EXPECT_TRUE(is_partial_ba(trimmed, 0, PlayerSet(4, {1}), g, 2));
    EXPECT_FALSE(is_partial_ba(trimmed, 0, PlayerSet(4), none, 2));
}

TEST(PartialBa, JoiningPartialsUnderAFreshRoot)
{
    // Height-0, height-1 and a trimmed height-2 partial arborescence.
    auto f = RootedForest::from_arcs(8, {{2, 3}, {4, 5}, {4, 6}});
    PlayerSet marks(8, {5});
    HeightGuess g(8);
    g.set(5, 1);
    EXPECT_TRUE(is_partial_ba(f, 1, marks, g, 0));
    EXPECT_TRUE(is_partial_ba(f, 2, marks, g, 1));
    EXPECT_TRUE(is_partial_ba(f, 4, marks, g, 2));
    for (Player r : {1, 2, 4})
        f.add_arc({0, r});
    EXPECT_TRUE(is_partial_ba(f, 0, marks, g, 3));
}

TEST(AlphaStar, WorkedExample)
{
    auto t = ordered(4);
    DemandIndex s(4, std::vector<Arc>{{0, 1}, {0, 2}, {1, 3}});
    auto fs = minimum_fas(t);
    auto a = alpha_star(s, fs.sigma, HeightGuess(4));
    EXPECT_EQ(a, (std::vector<int>{2, 1, 0, 0}));
    EXPECT_EQ(alpha_star(s, fs.sigma, HeightGuess(4)), a);

    EXPECT_EQ(alpha_star(DemandIndex(4), fs.sigma, HeightGuess(4)), (std::vector<int>{0, 0, 0, 0}));

    HeightGuess g(4);
    g.set(3, 2);
    EXPECT_EQ(alpha_star(DemandIndex(4), fs.sigma, g)[3], 2);
}

TEST(AlphaStar, SiblingConstraintOnlyLooksAtWeakerOrGuessed)
{
    // 0 demands 1, 2, 3: weakest first gives 3 -> 0, 2 -> 1, 1 -> 2, 0 -> 3.
    DemandIndex s(8, std::vector<Arc>{{0, 1}, {0, 2}, {0, 3}});
    StrengthOrder sigma(std::vector<Player>{0, 1, 2, 3, 4, 5, 6, 7});
    EXPECT_EQ(alpha_star(s, sigma, HeightGuess(8)), (std::vector<int>{3, 2, 1, 0, 0, 0, 0, 0}));

    HeightGuess g(8);
    g.set(1, 0);
    auto a = alpha_star(s, sigma, g);
    // 3 must avoid guessed 1; 2 must avoid both.
    EXPECT_EQ(a, (std::vector<int>{3, 0, 2, 1, 0, 0, 0, 0}));
}

TEST(Compactness, Examples)
{
    auto t = ordered(4);
    auto sigma = minimum_fas(t).sigma;
    auto sba = RootedForest::from_arcs(4, {{0, 1}, {0, 2}, {1, 3}});
    EXPECT_TRUE(is_compact(sba, DemandIndex(4), sigma, HeightGuess(4)));
    DemandIndex s(4, std::vector<Arc>{{0, 1}, {0, 2}, {1, 3}});
    EXPECT_TRUE(is_compact(sba, s, sigma, HeightGuess(4)));
    EXPECT_TRUE(is_weakly_compact(sba, s, sigma, PlayerSet(4)));
    EXPECT_TRUE(is_valid_for(sba, s.arcs()));

    // 2 plays in the final instead of round 0: valid but not compact.
    auto other = RootedForest::from_arcs(4, {{0, 2}, {0, 1}, {2, 3}});
    DemandIndex only(4, std::vector<Arc>{{0, 2}});
    EXPECT_FALSE(is_compact(other, only, sigma, HeightGuess(4)));
}

TEST(Compactness, HeightsDominateAlphaStar)
{
    // For every bracket, the demand set of its own matches is compact under
    // some guess; whenever it is compact, every height is at least alpha*.
    auto t = testing::random_tournament(8, 21);
    auto fs = minimum_fas(t);
    int compact = 0;
    testing::for_each_seeding(8, [&](const std::vector<Player>& order) {
        auto sim = simulate(t, {order});
        std::vector<Arc> arcs;
        for (std::size_t i = 0; i < sim.matches.size(); i += 2)
            arcs.push_back({sim.matches[i].winner, sim.matches[i].loser});
        DemandIndex s(8, arcs);
        PlayerSet fv = fs.vertices();
        if (!is_weakly_compact(sim.sba, s, fs.sigma, fv))
            return false;
        ++compact;
        HeightGuess g(8);
        for (Player f : fv.members())
            g.set(f, alpha(sim.sba, f));
        auto a = alpha_star(s, fs.sigma, g);
        for (Player v = 0; v < 8; ++v)
            EXPECT_GE(alpha(sim.sba, v), a[v]);
        return false;
    });
    EXPECT_GT(compact, 0);
}

}  // namespace
}  // namespace dtf
