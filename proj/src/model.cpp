#include "dtf/model.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "dtf/arborescence.hpp"

namespace dtf {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::DemandNotAnArc: return "DemandNotAnArc";
    case ErrorCode::BadRound: return "BadRound";
    case ErrorCode::DuplicateDemand: return "DuplicateDemand";
    case ErrorCode::NotPowerOfTwoSubtree: return "NotPowerOfTwoSubtree";
    case ErrorCode::NotAnSBA: return "NotAnSBA";
    case ErrorCode::NotAFeedbackArcSet: return "NotAFeedbackArcSet";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::WeightCapExceeded: return "WeightCapExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::PropertyOneViolated: return "PropertyOneViolated";
    case ErrorCode::RoundConflict: return "RoundConflict";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InfeasibleDemandCount: return "InfeasibleDemandCount";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

std::string arc_str(Arc a)
{
    return "(" + std::to_string(a.winner) + "," + std::to_string(a.loser) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// TournamentDigraph

TournamentDigraph::TournamentDigraph(int n)
    : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64),
      rows_(static_cast<std::size_t>(n) * words_, 0)
{
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "negative player count");
}

void TournamentDigraph::set(Player winner, Player loser)
{
    rows_[index(winner) + static_cast<std::size_t>(loser) / 64] |= std::uint64_t{1} << (loser % 64);
    rows_[index(loser) + static_cast<std::size_t>(winner) / 64] &=
        ~(std::uint64_t{1} << (winner % 64));
}

TournamentDigraph TournamentDigraph::acyclic(std::span<const Player> strongest_first)
{
    const int n = static_cast<int>(strongest_first.size());
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        Player v = strongest_first[i];
        if (v < 0 || v >= n || rank[v] != -1)
            throw Error(ErrorCode::InvalidArgument, "strength order is not a permutation");
        rank[v] = i;
    }
    return from_predicate(n, [&](Player u, Player v) { return rank[u] < rank[v]; });
}

TournamentDigraph TournamentDigraph::with_reversed(Arc a) const
{
    if (!has_arc(a))
        throw Error(ErrorCode::InvalidArgument, "not an arc: " + arc_str(a));
    TournamentDigraph t = *this;
    t.set(a.loser, a.winner);
    return t;
}

std::uint64_t TournamentDigraph::out_mask(Player u) const
{
    if (n_ > 64)
        throw Error(ErrorCode::TooLarge, "out_mask needs at most 64 players");
    return rows_[index(u)];
}

int TournamentDigraph::out_degree(Player u) const
{
    int d = 0;
    for (std::size_t w = 0; w < words_; ++w)
        d += std::popcount(rows_[index(u) + w]);
    return d;
}

// ---------------------------------------------------------------------------
// StrengthOrder, DemandIndex

StrengthOrder::StrengthOrder(std::vector<Player> strongest_first)
    : order_(std::move(strongest_first)), rank_(order_.size(), -1)
{
    const int n = static_cast<int>(order_.size());
    for (int i = 0; i < n; ++i) {
        Player v = order_[i];
        if (v < 0 || v >= n || rank_[v] != -1)
            throw Error(ErrorCode::InvalidArgument, "strength order is not a permutation");
        rank_[v] = i;
    }
}

DemandIndex::DemandIndex(int n)
    : parent_(static_cast<std::size_t>(n), kNoPlayer), children_(static_cast<std::size_t>(n))
{
}

DemandIndex::DemandIndex(int n, std::span<const Arc> arcs) : DemandIndex(n)
{
    for (const Arc& a : arcs)
        add(a);
}

void DemandIndex::add(Arc a)
{
    if (parent_.at(a.loser) != kNoPlayer)
        throw Error(ErrorCode::PreconditionViolated,
                    "player " + std::to_string(a.loser) + " has demand in-degree above one");
    parent_[a.loser] = a.winner;
    children_.at(a.winner).push_back(a.loser);
    ++count_;
}

std::vector<Arc> DemandIndex::arcs() const
{
    std::vector<Arc> out;
    for (Player v = 0; v < size(); ++v)
        if (parent_[v] != kNoPlayer)
            out.push_back({parent_[v], v});
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Validation

std::optional<int> exact_log2(std::int64_t n)
{
    if (n <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(n)))
        return std::nullopt;
    return std::bit_width(static_cast<std::uint64_t>(n)) - 1;
}

std::optional<int> ValidatedInstance::round_of(Arc a) const
{
    auto it = inst_.rounds.find(a);
    if (it == inst_.rounds.end())
        return std::nullopt;
    return it->second;
}

const DemandIndex& ValidatedInstance::demand_index() const
{
    if (trivially_no_)
        throw Error(ErrorCode::PreconditionViolated, "instance has a player with two demand parents");
    return index_;
}

ValidatedInstance validate_instance(DemandInstance inst)
{
    const int n = inst.tournament.size();
    auto log_n = exact_log2(n);
    if (!log_n)
        throw Error(ErrorCode::NotPowerOfTwo, "player count " + std::to_string(n));

    std::set<Arc> seen;
    std::vector<int> in_degree(static_cast<std::size_t>(n), 0);
    for (const Arc& a : inst.demands) {
        if (a.winner < 0 || a.winner >= n || a.loser < 0 || a.loser >= n || a.winner == a.loser)
            throw Error(ErrorCode::DemandNotAnArc, "demand " + arc_str(a) + " is not a pair of players");
        if (!inst.tournament.beats(a.winner, a.loser))
            throw Error(ErrorCode::DemandNotAnArc,
                        "demand " + arc_str(a) + ": " + std::to_string(a.loser) + " beats " +
                            std::to_string(a.winner));
        if (!seen.insert(a).second)
            throw Error(ErrorCode::DuplicateDemand, "demand " + arc_str(a) + " repeated");
        ++in_degree[a.loser];
    }
    for (const auto& [a, r] : inst.rounds) {
        if (!seen.contains(a))
            throw Error(ErrorCode::BadRound, "round given for non-demand " + arc_str(a));
        if (r < 0 || r > *log_n - 1)
            throw Error(ErrorCode::BadRound, "round " + std::to_string(r) + " for " + arc_str(a) +
                                                 " outside [0, " + std::to_string(*log_n - 1) + "]");
    }
    for (const auto& [a, w] : inst.weights) {
        if (!seen.contains(a))
            throw Error(ErrorCode::InvalidArgument, "weight given for non-demand " + arc_str(a));
        if (w < 0)
            throw Error(ErrorCode::InvalidArgument, "negative weight for " + arc_str(a));
    }

    ValidatedInstance v;
    std::sort(inst.demands.begin(), inst.demands.end());
    v.log_n_ = *log_n;
    v.trivially_no_ = std::any_of(in_degree.begin(), in_degree.end(), [](int d) { return d > 1; });
    if (!v.trivially_no_)
        v.index_ = DemandIndex(n, inst.demands);
    v.inst_ = std::move(inst);
    return v;
}

// ---------------------------------------------------------------------------
// Brackets

bool is_bijection(const Seeding& s, int n)
{
    if (static_cast<int>(s.order.size()) != n)
        return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Player v : s.order) {
        if (v < 0 || v >= n || seen[v])
            return false;
        seen[v] = 1;
    }
    return true;
}

SimulationResult simulate(const TournamentDigraph& t, const Seeding& s)
{
    const int n = t.size();
    if (!exact_log2(n))
        throw Error(ErrorCode::NotPowerOfTwo, "player count " + std::to_string(n));
    if (!is_bijection(s, n))
        throw Error(ErrorCode::InvalidArgument, "seeding is not a permutation of the players");

    SimulationResult res;
    res.sba = RootedForest(n);
    res.matches.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    std::vector<Player> alive = s.order;
    for (int round = 0; alive.size() > 1; ++round) {
        std::vector<Player> next;
        next.reserve(alive.size() / 2);
        for (std::size_t i = 0; i < alive.size(); i += 2) {
            Player a = alive[i];
            Player b = alive[i + 1];
            Arc m = t.beats(a, b) ? Arc{a, b} : Arc{b, a};
            res.matches.push_back({m.winner, m.loser, round});
            res.sba.add_arc(m);
            next.push_back(m.winner);
        }
        alive = std::move(next);
    }
    res.champion = alive.front();
    return res;
}

namespace {

// Lists the players of the height-`h` binomial arborescence rooted at `v` in
// bracket order. `child_at[v][t]` is v's child of height t.
void unfold(Player v, int h, const std::vector<std::vector<Player>>& child_at,
            std::vector<Player>& out)
{
    if (h == 0) {
        out.push_back(v);
        return;
    }
    unfold(v, h - 1, child_at, out);
    unfold(child_at[v][h - 1], h - 1, child_at, out);
}

}  // namespace

Seeding sba_to_seeding(const RootedForest& sba)
{
    if (!is_spanning_binomial_arborescence(sba))
        throw Error(ErrorCode::NotAnSBA, "forest is not a spanning binomial arborescence");
    const int n = sba.size();
    std::vector<std::vector<Player>> child_at(static_cast<std::size_t>(n));
    for (Player v = 0; v < n; ++v) {
        child_at[v].assign(sba.children(v).size(), kNoPlayer);
        for (Player c : sba.children(v))
            child_at[v][alpha(sba, c)] = c;
    }
    Player root = sba.roots().front();
    Seeding s;
    s.order.reserve(static_cast<std::size_t>(n));
    unfold(root, alpha(sba, root), child_at, s.order);
    return s;
}

SolutionReport check_solution(const ValidatedInstance& inst, const Seeding& s)
{
    SimulationResult sim = simulate(inst.tournament(), s);
    std::map<Arc, int> played;
    for (const MatchRecord& m : sim.matches)
        played[{m.winner, m.loser}] = m.round;

    SolutionReport rep;
    for (const Arc& a : inst.demands()) {
        auto it = played.find(a);
        if (it == played.end()) {
            rep.missed.push_back(a);
            continue;
        }
        if (auto want = inst.round_of(a); want && *want != it->second)
            rep.round_violations.push_back({a, *want, it->second});
    }
    rep.ok = rep.missed.empty() && rep.round_violations.empty();
    return rep;
}

}  // namespace dtf
