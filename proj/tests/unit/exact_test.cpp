#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "dtf/arborescence.hpp"
#include "dtf/exact.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace dtf {
namespace {

using testing::code_of;
using testing::make;
using testing::ordered;

std::vector<Arc> random_demands(const TournamentDigraph& t, int count, std::mt19937_64& rng)
{
    std::vector<Arc> arcs;
    for (Player u = 0; u < t.size(); ++u)
        for (Player v = 0; v < t.size(); ++v)
            if (t.beats(u, v))
                arcs.push_back({u, v});
    std::shuffle(arcs.begin(), arcs.end(), rng);
    std::vector<Arc> out;
    std::vector<char> lost(static_cast<std::size_t>(t.size()), 0);
    for (const Arc& a : arcs) {
        if (static_cast<int>(out.size()) == count)
            break;
        if (!lost[a.loser]) {
            lost[a.loser] = 1;
            out.push_back(a);
        }
    }
    return out;
}

TEST(Oracle, Examples)
{
    auto two = make(ordered(2), {{0, 1}});
    auto s = oracle_solve(two);
    ASSERT_TRUE(s);
    EXPECT_TRUE(check_solution(two, *s).ok);

    auto four = make(ordered(4), {{1, 2}});
    auto w = oracle_solve(four);
    ASSERT_TRUE(w);
    EXPECT_TRUE(check_solution(four, *w).ok);

    EXPECT_EQ(code_of([] { make(ordered(4), {{3, 2}}); }), ErrorCode::DemandNotAnArc);
}

TEST(Oracle, Guard)
{
    auto big = make(ordered(16), {});
    EXPECT_EQ(code_of([&] { oracle_solve(big); }), ErrorCode::TooLarge);
    EXPECT_EQ(code_of([&] { dp_solve(make(ordered(32), {})); }), ErrorCode::TooLarge);
}

TEST(Dp, Examples)
{
    auto empty = make(testing::random_tournament(8, 2), {});
    auto s = dp_solve(empty);
    ASSERT_TRUE(s);
    EXPECT_TRUE(is_bijection(*s, 8));

    auto worked = make(ordered(4), {{0, 1}, {0, 2}, {1, 3}});
    auto res = dp_solve_detailed(worked);
    ASSERT_TRUE(res.seeding);
    EXPECT_EQ(res.sba->arcs(), (std::vector<Arc>{{0, 1}, {0, 2}, {1, 3}}));
    EXPECT_TRUE(check_solution(worked, *res.seeding).ok);

    auto chain = make(ordered(4), {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_EQ(dp_solve(chain).has_value(), oracle_solve(chain).has_value());
    EXPECT_FALSE(dp_solve(chain));
}

TEST(Dp, TriviallyNo)
{
    auto inst = make(ordered(4), {{0, 3}, {1, 3}});
    EXPECT_FALSE(dp_solve(inst));
    EXPECT_FALSE(oracle_solve(inst));
}

TEST(Dp, AgreesWithOracleAtFour)
{
    // All demand sets of size <= 3 over several tournaments on 4 players.
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto t = testing::random_tournament(4, seed);
        std::vector<Arc> arcs;
        for (Player u = 0; u < 4; ++u)
            for (Player v = 0; v < 4; ++v)
                if (t.beats(u, v))
                    arcs.push_back({u, v});
        for (std::uint32_t mask = 0; mask < (1u << arcs.size()); ++mask) {
            if (std::popcount(mask) > 3)
                continue;
            std::vector<Arc> s;
            for (std::size_t i = 0; i < arcs.size(); ++i)
                if ((mask >> i) & 1u)
                    s.push_back(arcs[i]);
            auto inst = make(t, s);
            auto d = dp_solve(inst);
            EXPECT_EQ(d.has_value(), oracle_solve(inst).has_value());
            EXPECT_EQ(d.has_value(), testing::brute_demand_tf(t, s));
            if (d)
                EXPECT_TRUE(check_solution(inst, *d).ok);
        }
    }
}

TEST(Dp, AgreesWithBruteForceAtEightWithRounds)
{
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> round(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        auto t = testing::random_tournament(8, 900 + trial);
        auto s = random_demands(t, 1 + trial % 4, rng);
        std::map<Arc, int> rounds;
        if (trial % 2)
            for (const Arc& a : s)
                if (round(rng) != 0)
                    rounds[a] = round(rng);
        auto inst = make(t, s, rounds);
        auto d = dp_solve(inst);
        EXPECT_EQ(d.has_value(), testing::brute_demand_tf(t, s, rounds));
        if (d)
            EXPECT_TRUE(check_solution(inst, *d).ok);
    }
}

TEST(Dp, SplitsRespectTheCrossingRule)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        auto t = testing::random_tournament(8, 60 + trial);
        auto s = random_demands(t, 3, rng);
        auto inst = make(t, s);
        auto res = dp_solve_detailed(inst);
        if (!res.seeding)
            continue;
        EXPECT_EQ(res.splits.size(), 7u);
        for (const SplitRecord& r : res.splits) {
            EXPECT_EQ(r.own & r.other, 0u);
            EXPECT_EQ(std::popcount(r.own), std::popcount(r.other));
            EXPECT_TRUE(t.beats(r.winner, r.runner_up));
            for (const Arc& a : s) {
                bool w_own = (r.own >> a.winner) & 1u, w_other = (r.other >> a.winner) & 1u;
                bool l_own = (r.own >> a.loser) & 1u, l_other = (r.other >> a.loser) & 1u;
                bool crosses = (w_own && l_other) || (w_other && l_own);
                if (crosses)
                    EXPECT_EQ(a, (Arc{r.winner, r.runner_up}));
            }
        }
    }
}

TEST(Dp, AddingADemandNeverTurnsNoIntoYes)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto t = testing::random_tournament(8, 200 + trial);
        auto s = random_demands(t, 4, rng);
        bool prev = true;
        for (std::size_t i = 0; i <= s.size(); ++i) {
            std::vector<Arc> prefix(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
            bool yes = dp_solve(make(t, prefix)).has_value();
            EXPECT_FALSE(yes && !prev);
            prev = yes;
        }
    }
}

TEST(Weighted, Examples)
{
    auto both = make(ordered(4), {{0, 3}, {1, 3}});
    auto r = dp_max_weight(both, {{{0, 3}, 1}, {{1, 3}, 1}});
    EXPECT_EQ(r.best, 1);
    EXPECT_EQ(r.satisfied.size(), 1u);

    auto worked = make(ordered(4), {{0, 1}, {0, 2}, {1, 3}});
    std::map<Arc, std::int64_t> unit;
    for (const Arc& a : worked.demands())
        unit[a] = 1;
    auto u = dp_max_weight(worked, unit);
    EXPECT_EQ(u.best, 3);
    EXPECT_TRUE(check_solution(worked, u.seeding).ok);

    auto none = dp_max_weight(make(ordered(4), {}), {});
    EXPECT_EQ(none.best, 0);
}

TEST(Weighted, Errors)
{
    auto inst = make(ordered(4), {{0, 1}, {2, 3}});
    EXPECT_EQ(code_of([&] { dp_max_weight(inst, {{{0, 1}, 1}}); }), ErrorCode::PreconditionViolated);
    EXPECT_EQ(code_of([&] { dp_max_weight(inst, {{{0, 1}, 1}, {{2, 3}, -1}}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { dp_max_weight(inst, {{{0, 1}, 1}, {{2, 3}, 2'000'000}}); }),
              ErrorCode::WeightCapExceeded);
}

TEST(Weighted, MatchesExhaustiveMaximum)
{
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<std::int64_t> weight(0, 8);
    for (int trial = 0; trial < 30; ++trial) {
        auto t = testing::random_tournament(8, 500 + trial);
        auto s = random_demands(t, 2 + trial % 5, rng);
        std::map<Arc, std::int64_t> w;
        for (const Arc& a : s)
            w[a] = weight(rng);
        auto inst = make(t, s);
        auto r = dp_max_weight(inst, w);
        EXPECT_EQ(r.best, testing::brute_max_weight(t, w));
        std::int64_t sum = 0;
        auto played = simulate(t, r.seeding).matches;
        for (const Arc& a : r.satisfied) {
            sum += w.at(a);
            EXPECT_TRUE(std::any_of(played.begin(), played.end(), [&](const MatchRecord& m) {
                return m.winner == a.winner && m.loser == a.loser;
            }));
        }
        EXPECT_EQ(sum, r.best);

        std::map<Arc, std::int64_t> unit;
        for (const Arc& a : s)
            unit[a] = 1;
        EXPECT_GE(dp_max_weight(inst, unit).best, 1);
    }
}

}  // namespace
}  // namespace dtf
