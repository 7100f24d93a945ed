#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dtf/error.hpp"
#include "dtf/forest.hpp"

namespace dtf {

/// A complete asymmetric "beats" relation over players 0..n-1.
///
/// Rows are stored as packed bit sets so membership tests and out-neighbour
/// scans stay cheap for the exponential solvers.
class TournamentDigraph {
public:
    TournamentDigraph() = default;

    /// Builds the transitive tournament in which players earlier in
    /// `strongest_first` beat every player after them.
    static TournamentDigraph acyclic(std::span<const Player> strongest_first);

    /// Builds from a predicate queried once per unordered pair u < v; the
    /// predicate answers whether u beats v.
    template <typename BeatsFn>
    static TournamentDigraph from_predicate(int n, BeatsFn&& u_beats_v)
    {
        TournamentDigraph t(n);
        for (Player u = 0; u < n; ++u)
            for (Player v = u + 1; v < n; ++v) {
                if (u_beats_v(u, v))
                    t.set(u, v);
                else
                    t.set(v, u);
            }
        return t;
    }

    int size() const noexcept { return n_; }
    bool beats(Player u, Player v) const
    {
        return (rows_[index(u) + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
    }
    bool has_arc(Arc a) const { return a.winner != a.loser && beats(a.winner, a.loser); }

    /// Copy with the orientation of one pair flipped.
    TournamentDigraph with_reversed(Arc a) const;

    /// Out-neighbourhood as a 64-bit mask; requires size() <= 64.
    std::uint64_t out_mask(Player u) const;

    int out_degree(Player u) const;

    bool operator==(const TournamentDigraph&) const = default;

private:
    explicit TournamentDigraph(int n);
    std::size_t index(Player u) const { return static_cast<std::size_t>(u) * words_; }
    void set(Player winner, Player loser);

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Ranking of players from strongest (rank 0) to weakest.
class StrengthOrder {
public:
    StrengthOrder() = default;
    explicit StrengthOrder(std::vector<Player> strongest_first);

    int size() const noexcept { return static_cast<int>(order_.size()); }
    Player at(int rank) const { return order_.at(rank); }
    int rank(Player v) const { return rank_.at(v); }
    bool stronger(Player a, Player b) const { return rank_[a] < rank_[b]; }
    bool weaker(Player a, Player b) const { return rank_[a] > rank_[b]; }
    std::span<const Player> strongest_first() const noexcept { return order_; }

    bool operator==(const StrengthOrder&) const = default;

private:
    std::vector<Player> order_;
    std::vector<int> rank_;
};

/// Demand arcs indexed by endpoint. Only representable when every player
/// has demand in-degree at most one, which is all the solvers ever need.
class DemandIndex {
public:
    DemandIndex() = default;
    explicit DemandIndex(int n);
    DemandIndex(int n, std::span<const Arc> arcs);

    int size() const noexcept { return static_cast<int>(parent_.size()); }
    Player parent(Player v) const { return parent_[v]; }
    bool has_parent(Player v) const { return parent_[v] != kNoPlayer; }
    const std::vector<Player>& children(Player u) const { return children_[u]; }
    bool contains(Arc a) const { return parent_[a.loser] == a.winner; }
    std::size_t arc_count() const noexcept { return count_; }
    std::vector<Arc> arcs() const;

    /// Throws PreconditionViolated if `a.loser` already has a demand parent.
    void add(Arc a);

private:
    std::vector<Player> parent_;
    std::vector<std::vector<Player>> children_;
    std::size_t count_ = 0;
};

struct DemandInstance {
    TournamentDigraph tournament;
    std::vector<Arc> demands;
    std::map<Arc, int> rounds;
    std::map<Arc, std::int64_t> weights;
};

/// A demand instance that passed validate_instance. Demands are stored
/// sorted; `trivially_no()` flags a player with two demand parents.
class ValidatedInstance {
public:
    const DemandInstance& instance() const noexcept { return inst_; }
    const TournamentDigraph& tournament() const noexcept { return inst_.tournament; }
    std::span<const Arc> demands() const noexcept { return inst_.demands; }
    int size() const noexcept { return inst_.tournament.size(); }
    int log_size() const noexcept { return log_n_; }
    bool trivially_no() const noexcept { return trivially_no_; }
    bool has_rounds() const noexcept { return !inst_.rounds.empty(); }
    std::optional<int> round_of(Arc a) const;

    /// Requires !trivially_no().
    const DemandIndex& demand_index() const;

private:
    friend ValidatedInstance validate_instance(DemandInstance inst);
    ValidatedInstance() = default;

    DemandInstance inst_;
    int log_n_ = 0;
    bool trivially_no_ = false;
    DemandIndex index_;
};

/// First-round bracket: position i meets position i^1, winners fold upward.
struct Seeding {
    std::vector<Player> order;
    bool operator==(const Seeding&) const = default;
};

struct MatchRecord {
    Player winner = kNoPlayer;
    Player loser = kNoPlayer;
    int round = 0;
    bool operator==(const MatchRecord&) const = default;
};

struct SimulationResult {
    RootedForest sba;
    std::vector<MatchRecord> matches;  // ordered by round, then bracket position
    Player champion = kNoPlayer;
};

struct RoundViolation {
    Arc demand;
    int required = 0;
    int played = 0;
    bool operator==(const RoundViolation&) const = default;
};

struct SolutionReport {
    bool ok = false;
    std::vector<Arc> missed;
    std::vector<RoundViolation> round_violations;
};

/// Returns log2(n) when n is a positive power of two.
std::optional<int> exact_log2(std::int64_t n);

ValidatedInstance validate_instance(DemandInstance inst);

bool is_bijection(const Seeding& s, int n);

/// Plays the bracket. Requires the player count to be a power of two and
/// the seeding to be a permutation.
SimulationResult simulate(const TournamentDigraph& t, const Seeding& s);

/// Unfolds a spanning binomial arborescence into a seeding that reproduces
/// it under simulate(). Throws NotAnSBA otherwise.
Seeding sba_to_seeding(const RootedForest& sba);

SolutionReport check_solution(const ValidatedInstance& inst, const Seeding& s);

}  // namespace dtf
