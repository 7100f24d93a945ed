#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dtf/model.hpp"

namespace dtf {

struct OracleOptions {
    int max_players = 8;
};

/// Tries every permutation of the players. Exponential; a ground truth
/// for small instances only. Throws TooLarge above the guard.
std::optional<Seeding> oracle_solve(const ValidatedInstance& inst, OracleOptions opts = {});

struct DpOptions {
    int max_players = 24;
};

/// One recorded split of the reconstruction: `winner` won `own`, beat
/// `runner_up` who won `other`.
struct SplitRecord {
    std::uint32_t own = 0;
    std::uint32_t other = 0;
    Player winner = kNoPlayer;
    Player runner_up = kNoPlayer;
};

struct DpResult {
    std::optional<Seeding> seeding;
    std::optional<RootedForest> sba;
    std::vector<SplitRecord> splits;
};

/// Subset dynamic program over (player set, winner) pairs; O*(3^n).
DpResult dp_solve_detailed(const ValidatedInstance& inst, DpOptions opts = {});
std::optional<Seeding> dp_solve(const ValidatedInstance& inst, DpOptions opts = {});

struct WeightedOptions {
    int max_players = 16;
    std::int64_t weight_cap = 1'000'000;
};

struct WeightedResult {
    std::int64_t best = 0;
    Seeding seeding;
    std::vector<Arc> satisfied;  // sorted; weights sum to best
};

/// Maximises the total weight of demand matches that are played (and, when a
/// round is given for a demand, played in that round). Missing weights are
/// not allowed; throws WeightCapExceeded for a weight above the cap.
WeightedResult dp_max_weight(const ValidatedInstance& inst,
                             const std::map<Arc, std::int64_t>& weights,
                             WeightedOptions opts = {});

}  // namespace dtf
