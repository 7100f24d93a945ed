#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dtf/forest.hpp"
#include "dtf/model.hpp"

namespace dtf {

/// Partial map from players to heights. The players it is defined on play
/// the role of feedback vertices in the guessed-size computation.
class HeightGuess {
public:
    HeightGuess() = default;
    explicit HeightGuess(int n) : height_(static_cast<std::size_t>(n), kUndefined) {}

    int universe() const noexcept { return static_cast<int>(height_.size()); }
    bool defined(Player v) const { return height_[v] != kUndefined; }
    int at(Player v) const;
    void set(Player v, int h) { height_.at(v) = h; }
    void clear(Player v) { height_.at(v) = kUndefined; }
    std::vector<Player> domain() const;

    bool operator==(const HeightGuess&) const = default;

private:
    static constexpr int kUndefined = -1;
    std::vector<int> height_;
};

/// log2 |Desc(v)|. Throws NotPowerOfTwoSubtree.
int alpha(const RootedForest& forest, Player v);

/// Whether the subtree at `root` is a binomial arborescence: its children
/// root binomial arborescences of heights exactly 0..h-1.
bool is_binomial_arborescence(const RootedForest& forest, Player root);

/// Single root, every player reached, binomial shape.
bool is_spanning_binomial_arborescence(const RootedForest& forest);

/// Vertices lying strictly below some feedback vertex f that is itself a
/// strict descendant of v. Sorted ascending.
std::vector<Player> feedback_descendants(const RootedForest& forest, Player v,
                                         const PlayerSet& feedback);

/// Guessed size: 2^g(v) on g's domain, else 1 + sum over children.
std::int64_t guessed_size_beta(const RootedForest& forest, Player v, const HeightGuess& g);

/// Guessed size of every player in one bottom-up pass.
std::vector<std::int64_t> guessed_sizes(const RootedForest& forest, const HeightGuess& g);

/// Decides whether the subtree at `root` is a binomial arborescence of
/// height `claimed_height` with some subset of the root's feedback
/// descendants removed, where every present feedback vertex f has height
/// g(f) in that host arborescence.
///
/// Vertices neither marked nor below a marked non-root vertex must carry a
/// complete set of children; inside a marked vertex's subtree children may
/// be missing, so the children only need distinct feasible heights.
bool is_partial_ba(const RootedForest& forest, Player root, const PlayerSet& feedback,
                   const HeightGuess& g, int claimed_height);

/// Height lower bounds derived from demand structure.
///
/// Players in g's domain take g's value. Every other player v takes the
/// least value that exceeds all its demand children and differs from every
/// demand sibling that is weaker than v or lies in g's domain. Evaluated
/// weakest-first so each rule only references settled values.
std::vector<int> alpha_star(const DemandIndex& demands, const StrengthOrder& order,
                            const HeightGuess& g);

/// alpha(v) == alpha_star(v) for every demand loser in the forest.
/// Heights must be well-defined on the forest.
bool is_compact(const RootedForest& sba, const DemandIndex& demands, const StrengthOrder& order,
                const HeightGuess& g);

/// Compactness with g taken as the forest's own heights on `feedback`.
bool is_weakly_compact(const RootedForest& sba, const DemandIndex& demands,
                       const StrengthOrder& order, const PlayerSet& feedback);

/// Every demand arc between two players of the forest is a forest arc.
bool is_valid_for(const RootedForest& forest, std::span<const Arc> demands);

}  // namespace dtf
