#pragma once

#include <vector>

#include "dtf/model.hpp"

namespace dtf {

/// A minimum feedback arc set together with the strength order it induces:
/// the arcs of F are exactly the arcs running from weaker to stronger.
struct FeedbackStructure {
    std::vector<Arc> arcs;  // sorted
    StrengthOrder sigma;

    int k() const noexcept { return static_cast<int>(arcs.size()); }

    /// Endpoints of feedback arcs.
    PlayerSet vertices() const;

    /// Heads of feedback arcs (players that lose an upset).
    PlayerSet heads() const;
};

/// Exact minimum feedback arc set by iterative deepening on the budget,
/// branching three ways on the first directed triangle found. Requires
/// at most 64 players.
FeedbackStructure minimum_fas(const TournamentDigraph& t);

/// Topological order of T - F, ties broken by smallest id.
/// Throws NotAFeedbackArcSet if T - F has a cycle.
StrengthOrder strength_order(const TournamentDigraph& t, const std::vector<Arc>& feedback);

}  // namespace dtf
