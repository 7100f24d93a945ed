#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond its value types.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dtf/model.hpp"

namespace dtf::testing {

/// Played matches (winner, loser, round) of the bracket `order`.
struct PlayedMatch {
    Player winner;
    Player loser;
    int round;
};
std::vector<PlayedMatch> play_bracket(const TournamentDigraph& t, const std::vector<Player>& order);

/// Calls `visit` on every seeding of n players until it returns true.
bool for_each_seeding(int n, const std::function<bool(const std::vector<Player>&)>& visit);

/// Whether some seeding plays every demand (and in its round, when given).
bool brute_demand_tf(const TournamentDigraph& t, const std::vector<Arc>& demands,
                     const std::map<Arc, int>& rounds = {});

/// Whether `target` wins some bracket.
bool brute_tf(const TournamentDigraph& t, Player target);

/// Largest total weight of played demands (round-matched if given) over all seedings.
std::int64_t brute_max_weight(const TournamentDigraph& t, const std::map<Arc, std::int64_t>& weights,
                              const std::map<Arc, int>& rounds = {});

/// Fewest backward arcs over all orderings of the players.
int brute_min_fas(const TournamentDigraph& t);

/// Random tournament drawn uniformly over all orientations.
TournamentDigraph random_tournament(int n, std::uint64_t seed);

/// Rooted trees as child lists over 0..size-1, root 0.
struct ShapedTree {
    std::vector<std::vector<int>> children;
    std::vector<int> marks;  // -1 unmarked, else the guessed height
};

/// Canonical text of a marked rooted tree: equal iff isomorphic with marks.
std::string canonical(const ShapedTree& tree);

/// The binomial tree of height h as a child list.
std::vector<std::vector<int>> binomial_tree(int h);

/// Every rooted tree with 1..max_size vertices up to isomorphism.
std::vector<std::vector<std::vector<int>>> all_rooted_trees(int max_size);

/// Canonical forms of every partial binomial arborescence of height h on at
/// most 8 vertices with at most `max_marks` marked players, obtained by
/// deleting feedback-descendant subsets from binomial trees. Marks carry
/// the true host height.
std::set<std::string> partial_ba_catalogue(int h, int max_marks);

}  // namespace dtf::testing
