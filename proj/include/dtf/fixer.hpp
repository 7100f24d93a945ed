#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dtf/arborescence.hpp"
#include "dtf/fas.hpp"
#include "dtf/model.hpp"

namespace dtf {

/// Partial solution of the fixing pass. Arcs are only ever added; guessed
/// sizes are maintained incrementally (players in g's domain keep 2^g).
class WorkForest {
public:
    WorkForest(int n, HeightGuess g);

    int size() const noexcept { return forest_.size(); }
    const RootedForest& forest() const noexcept { return forest_; }
    const HeightGuess& guess() const noexcept { return g_; }
    std::int64_t beta(Player v) const { return beta_[v]; }
    bool has_parent(Player v) const { return forest_.has_parent(v); }
    const std::vector<Player>& children(Player v) const { return forest_.children(v); }

    void add_arc(Arc a);

private:
    RootedForest forest_;
    HeightGuess g_;
    std::vector<std::int64_t> beta_;
};

/// Per-iteration record of a pack() call, for property checks.
struct PackTrace {
    std::vector<std::int64_t> beta_sums;               // before each iteration
    std::vector<std::vector<std::int64_t>> root_betas;  // before each iteration
    int joins = 0;
};

/// Greedily glues the parentless roots in `candidates` into one partial
/// binomial arborescence of height `height` and returns its root. While no
/// root has guessed size 2^height, the two strongest roots among those
/// sharing the largest repeated size are joined, stronger as parent.
/// Throws PreconditionViolated when a candidate has a parent or the sizes
/// cannot reach 2^height.
Player pack(WorkForest& q, std::vector<Player> candidates, int height, const StrengthOrder& sigma,
            PackTrace* trace = nullptr);

/// Necessary conditions on a height guess: every augmented demand arc goes
/// from a strictly higher player to a lower one, demand siblings differ,
/// no height exceeds log n, and a guessed root (if any) has height log n.
bool sanity_check_guess(const DemandIndex& s_aug, const HeightGuess& g,
                        std::span<const int> alpha_star, int n,
                        Player guessed_root = kNoPlayer);

/// Further necessary conditions used to skip guesses early: an SBA on n
/// players has at most n / 2^h players of height >= h, and only the root
/// reaches log n.
bool height_profile_feasible(std::span<const int> alpha_star, int n);

/// Upper bound on each player's height in any SBA of `t`: a player wins at
/// most out-degree matches and collects at most as many descendants as it
/// reaches.
std::vector<int> height_caps(const TournamentDigraph& t);

/// One fixing pass for a fixed guess. Returns a spanning binomial
/// arborescence containing every augmented demand arc, or nothing when the
/// pass rejects (including when the post-check fails).
std::optional<RootedForest> run_fixing_pass(const TournamentDigraph& t, const DemandIndex& s_aug,
                                            const StrengthOrder& sigma, const HeightGuess& g,
                                            std::span<const int> alpha_star);

struct FixerOptions {
    int max_players = 64;
    int max_k = 4;
    /// solve_with_rounds only: every demand must carry a round.
    bool require_all_rounds = false;
    /// Skip guesses outside the per-player height bounds (demand-forest
    /// lower bounds, height_caps) and the height profile. Off runs only the
    /// sanity checks.
    bool prune = true;
};

struct FixerStats {
    std::uint64_t parent_guesses = 0;
    std::uint64_t height_guesses = 0;
    std::uint64_t sane_guesses = 0;
    std::uint64_t passes = 0;
};

struct FixerResult {
    std::optional<Seeding> seeding;
    std::optional<RootedForest> sba;
    FeedbackStructure fas;
    FixerStats stats;
};

/// Heights pinned by round constraints: the loser of a demand played in
/// round r has height r. Throws RoundConflict on pins that contradict each
/// other (a loser that must win a later round, equal sibling rounds, or more
/// pinned players at a height than the bracket has).
HeightGuess round_pins(const ValidatedInstance& inst);

/// Guesses parents and heights of the feedback vertices. Round constraints
/// on the instance, if any, are honoured.
FixerResult solve_xp_detailed(const ValidatedInstance& inst, FixerOptions opts = {});
std::optional<Seeding> solve_xp(const ValidatedInstance& inst, FixerOptions opts = {});

/// For instances whose feedback-arc heads all lose a demand match: no
/// parent guesses, heights guessed only on those heads.
/// Throws PropertyOneViolated otherwise.
FixerResult solve_fpt_detailed(const ValidatedInstance& inst, FixerOptions opts = {});
std::optional<Seeding> solve_fpt(const ValidatedInstance& inst, FixerOptions opts = {});

/// solve_xp with the demand losers' heights pinned to their rounds.
std::optional<Seeding> solve_with_rounds(const ValidatedInstance& inst, FixerOptions opts = {});

}  // namespace dtf
