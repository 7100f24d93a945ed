#include "dtf/exact.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dtf/arborescence.hpp"

namespace dtf {

std::optional<Seeding> oracle_solve(const ValidatedInstance& inst, OracleOptions opts)
{
    const int n = inst.size();
    if (n > opts.max_players)
        throw Error(ErrorCode::TooLarge, "oracle limited to " + std::to_string(opts.max_players) +
                                             " players, got " + std::to_string(n));
    if (inst.trivially_no())
        return std::nullopt;
    Seeding s;
    s.order.resize(static_cast<std::size_t>(n));
    for (Player v = 0; v < n; ++v)
        s.order[v] = v;
    do {
        if (check_solution(inst, s).ok)
            return s;
    } while (std::next_permutation(s.order.begin(), s.order.end()));
    return std::nullopt;
}

namespace {

using Mask = std::uint32_t;

Mask bit(Player v) { return Mask{1} << v; }

struct MaskedDemand {
    Player winner;
    Player loser;
    int round;  // -1 when unconstrained
};

// Shared state of the subset recurrences. A split of S keeps S's lowest
// player in the first part so each unordered equi-partition is seen once.
class SubsetTables {
public:
    explicit SubsetTables(const ValidatedInstance& inst) : n_(inst.size())
    {
        beats_.resize(static_cast<std::size_t>(n_));
        for (Player u = 0; u < n_; ++u)
            for (Player v = 0; v < n_; ++v)
                if (u != v && inst.tournament().beats(u, v))
                    beats_[u] |= bit(v);
        for (const Arc& a : inst.demands())
            demands_.push_back({a.winner, a.loser, inst.round_of(a).value_or(-1)});
    }

    int size() const { return n_; }
    Mask beaten_by(Player u) const { return beats_[u]; }

    template <typename Visit>
    static void for_each_split(Mask s, Visit&& visit)
    {
        const Mask anchor = s & (~s + 1);
        const Mask rest = s ^ anchor;
        const int half_minus_one = std::popcount(s) / 2 - 1;
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            if (std::popcount(sub) == half_minus_one) {
                const Mask s1 = sub | anchor;
                if (visit(s1, s ^ s1))
                    return;
            }
            if (sub == 0)
                return;
        }
    }

    // Demand arcs with one end in each part. Stops counting at two.
    int crossing(Mask s1, Mask s2, const MaskedDemand** only) const
    {
        int count = 0;
        for (const MaskedDemand& d : demands_) {
            const bool across = ((s1 & bit(d.winner)) && (s2 & bit(d.loser))) ||
                                ((s2 & bit(d.winner)) && (s1 & bit(d.loser)));
            if (across) {
                *only = &d;
                if (++count == 2)
                    return count;
            }
        }
        return count;
    }

    const std::vector<MaskedDemand>& demands() const { return demands_; }

private:
    int n_;
    std::vector<Mask> beats_;
    std::vector<MaskedDemand> demands_;
};

class DecisionDp {
public:
    explicit DecisionDp(const ValidatedInstance& inst)
        : tables_(inst), winners_(std::size_t{1} << inst.size(), 0)
    {
        const int n = tables_.size();
        for (Player v = 0; v < n; ++v)
            winners_[bit(v)] = bit(v);
        const Mask full = static_cast<Mask>((std::uint64_t{1} << n) - 1);
        // Proper submasks are numerically smaller, so increasing order is a
        // valid evaluation order.
        for (Mask s = 1; s != 0 && s <= full; ++s) {
            const int size = std::popcount(s);
            if (size >= 2 && std::has_single_bit(static_cast<unsigned>(size)))
                winners_[s] = compute(s);
        }
    }

    Mask winners(Mask s) const { return winners_[s]; }

    // Rebuilds one arborescence in which `x` wins `s`, appending arcs.
    void reconstruct(Mask s, Player x, RootedForest& out, std::vector<SplitRecord>& splits) const
    {
        if (std::popcount(s) == 1)
            return;
        const int round = std::countr_zero(static_cast<unsigned>(std::popcount(s))) - 1;
        bool found = false;
        SubsetTables::for_each_split(s, [&](Mask s1, Mask s2) {
            const Mask own = (s1 & bit(x)) ? s1 : s2;
            const Mask other = s ^ own;
            if (!(winners_[own] & bit(x)))
                return false;
            const MaskedDemand* only = nullptr;
            const int cross = tables_.crossing(own, other, &only);
            if (cross >= 2)
                return false;
            Player y = kNoPlayer;
            if (cross == 1) {
                if (only->winner != x || !(winners_[other] & bit(only->loser)) ||
                    (only->round >= 0 && only->round != round))
                    return false;
                y = only->loser;
            } else {
                Mask ys = winners_[other] & tables_.beaten_by(x);
                if (!ys)
                    return false;
                y = std::countr_zero(ys);
            }
            splits.push_back({own, other, x, y});
            out.add_arc({x, y});
            reconstruct(own, x, out, splits);
            reconstruct(other, y, out, splits);
            found = true;
            return true;
        });
        if (!found)
            throw Error(ErrorCode::PreconditionViolated, "no witness split for a true entry");
    }

private:
    Mask compute(Mask s) const
    {
        const int round = std::countr_zero(static_cast<unsigned>(std::popcount(s))) - 1;
        Mask result = 0;
        SubsetTables::for_each_split(s, [&](Mask s1, Mask s2) {
            const Mask w1 = winners_[s1];
            const Mask w2 = winners_[s2];
            if (!w1 || !w2)
                return false;
            const MaskedDemand* only = nullptr;
            const int cross = tables_.crossing(s1, s2, &only);
            if (cross == 0) {
                for (Mask xs = w1; xs; xs &= xs - 1) {
                    Player x = std::countr_zero(xs);
                    if (tables_.beaten_by(x) & w2)
                        result |= bit(x);
                }
                for (Mask ys = w2; ys; ys &= ys - 1) {
                    Player y = std::countr_zero(ys);
                    if (tables_.beaten_by(y) & w1)
                        result |= bit(y);
                }
            } else if (cross == 1) {
                const Mask wins = w1 | w2;
                const bool opposite = ((s1 & bit(only->winner)) != 0) != ((s1 & bit(only->loser)) != 0);
                if (opposite && (wins & bit(only->winner)) && (wins & bit(only->loser)) &&
                    (only->round < 0 || only->round == round))
                    result |= bit(only->winner);
            }
            return result == s;
        });
        return result;
    }

    SubsetTables tables_;
    std::vector<Mask> winners_;
};

void check_dp_size(int n, int limit)
{
    if (n > limit || n > 30)
        throw Error(ErrorCode::TooLarge, "subset DP limited to " + std::to_string(std::min(limit, 30)) +
                                             " players, got " + std::to_string(n));
}

}  // namespace

DpResult dp_solve_detailed(const ValidatedInstance& inst, DpOptions opts)
{
    const int n = inst.size();
    check_dp_size(n, opts.max_players);
    DpResult res;
    if (inst.trivially_no())
        return res;

    DecisionDp dp(inst);
    const Mask full = static_cast<Mask>((std::uint64_t{1} << n) - 1);
    const Mask champions = dp.winners(full);
    if (!champions)
        return res;
    RootedForest sba(n);
    dp.reconstruct(full, std::countr_zero(champions), sba, res.splits);
    res.seeding = sba_to_seeding(sba);
    res.sba = std::move(sba);
    return res;
}

std::optional<Seeding> dp_solve(const ValidatedInstance& inst, DpOptions opts)
{
    return dp_solve_detailed(inst, opts).seeding;
}

namespace {

class WeightedDp {
public:
    WeightedDp(const ValidatedInstance& inst, const std::map<Arc, std::int64_t>& weights)
        : tables_(inst), n_(inst.size()),
          best_((std::size_t{1} << n_) * static_cast<std::size_t>(n_), -1),
          gain_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) * kMaxRounds, 0)
    {
        for (const MaskedDemand& d : tables_.demands()) {
            const std::int64_t w = weights.at({d.winner, d.loser});
            for (int r = 0; r < kMaxRounds; ++r)
                if (d.round < 0 || d.round == r)
                    gain_[gain_index(d.winner, d.loser, r)] = w;
        }
        for (Player v = 0; v < n_; ++v)
            at(bit(v), v) = 0;
        const Mask full = static_cast<Mask>((std::uint64_t{1} << n_) - 1);
        for (Mask s = 1; s != 0 && s <= full; ++s) {
            const int size = std::popcount(s);
            if (size >= 2 && std::has_single_bit(static_cast<unsigned>(size)))
                compute(s);
        }
    }

    std::int64_t best(Mask s, Player x) const { return best_[index(s, x)]; }

    void reconstruct(Mask s, Player x, RootedForest& out) const
    {
        if (std::popcount(s) == 1)
            return;
        const int round = std::countr_zero(static_cast<unsigned>(std::popcount(s))) - 1;
        const std::int64_t target = best(s, x);
        bool found = false;
        SubsetTables::for_each_split(s, [&](Mask s1, Mask s2) {
            const Mask own = (s1 & bit(x)) ? s1 : s2;
            const Mask other = s ^ own;
            if (best(own, x) < 0)
                return false;
            for (Mask ys = other & tables_.beaten_by(x); ys; ys &= ys - 1) {
                Player y = std::countr_zero(ys);
                if (best(other, y) < 0)
                    continue;
                if (best(own, x) + best(other, y) + gain(x, y, round) == target) {
                    out.add_arc({x, y});
                    reconstruct(own, x, out);
                    reconstruct(other, y, out);
                    found = true;
                    return true;
                }
            }
            return false;
        });
        if (!found)
            throw Error(ErrorCode::PreconditionViolated, "no witness split for a weighted entry");
    }

private:
    static constexpr int kMaxRounds = 32;

    std::size_t index(Mask s, Player x) const
    {
        return static_cast<std::size_t>(s) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x);
    }
    std::int64_t& at(Mask s, Player x) { return best_[index(s, x)]; }
    std::size_t gain_index(Player x, Player y, int round) const
    {
        return (static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)) *
                   kMaxRounds +
               static_cast<std::size_t>(round);
    }
    std::int64_t gain(Player x, Player y, int round) const { return gain_[gain_index(x, y, round)]; }

    void compute(Mask s)
    {
        const int round = std::countr_zero(static_cast<unsigned>(std::popcount(s))) - 1;
        SubsetTables::for_each_split(s, [&](Mask s1, Mask s2) {
            for (Mask xs = s1; xs; xs &= xs - 1) {
                Player x = std::countr_zero(xs);
                const std::int64_t bx = best(s1, x);
                if (bx < 0)
                    continue;
                for (Mask ys = s2; ys; ys &= ys - 1) {
                    Player y = std::countr_zero(ys);
                    const std::int64_t by = best(s2, y);
                    if (by < 0)
                        continue;
                    if (tables_.beaten_by(x) & bit(y))
                        at(s, x) = std::max(at(s, x), bx + by + gain(x, y, round));
                    else
                        at(s, y) = std::max(at(s, y), bx + by + gain(y, x, round));
                }
            }
            return false;
        });
    }

    SubsetTables tables_;
    int n_;
    std::vector<std::int64_t> best_;
    std::vector<std::int64_t> gain_;
};

}  // namespace

WeightedResult dp_max_weight(const ValidatedInstance& inst, const std::map<Arc, std::int64_t>& weights,
                             WeightedOptions opts)
{
    const int n = inst.size();
    check_dp_size(n, opts.max_players);
    for (const Arc& a : inst.demands()) {
        auto it = weights.find(a);
        if (it == weights.end())
            throw Error(ErrorCode::PreconditionViolated, "missing weight for a demand");
        if (it->second < 0)
            throw Error(ErrorCode::InvalidArgument, "negative weight");
        if (it->second > opts.weight_cap)
            throw Error(ErrorCode::WeightCapExceeded,
                        "weight " + std::to_string(it->second) + " above cap " +
                            std::to_string(opts.weight_cap));
    }

    WeightedDp dp(inst, weights);
    const Mask full = static_cast<Mask>((std::uint64_t{1} << n) - 1);
    Player champion = 0;
    for (Player x = 1; x < n; ++x)
        if (dp.best(full, x) > dp.best(full, champion))
            champion = x;

    RootedForest sba(n);
    dp.reconstruct(full, champion, sba);
    WeightedResult res;
    res.best = dp.best(full, champion);
    res.seeding = sba_to_seeding(sba);
    SimulationResult sim = simulate(inst.tournament(), res.seeding);
    for (const MatchRecord& m : sim.matches) {
        Arc a{m.winner, m.loser};
        auto it = weights.find(a);
        if (it == weights.end())
            continue;
        if (auto r = inst.round_of(a); r && *r != m.round)
            continue;
        res.satisfied.push_back(a);
    }
    std::sort(res.satisfied.begin(), res.satisfied.end());
    return res;
}

}  // namespace dtf
