#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "dtf/app.hpp"

namespace dtf {

DemandInstance gen_instance(const GenParams& p)
{
    const int n = p.n;
    const auto log_n = exact_log2(n);
    if (!log_n)
        throw Error(ErrorCode::NotPowerOfTwo, "player count " + std::to_string(n));
    const int pairs = n * (n - 1) / 2;
    if (p.k_target < 0 || p.k_target > p.max_k_target || p.k_target > pairs)
        throw Error(ErrorCode::InvalidArgument, "k_target " + std::to_string(p.k_target) + " out of range");
    if (p.demands < 0)
        throw Error(ErrorCode::InvalidArgument, "negative demand count");

    std::mt19937_64 rng(p.seed);
    std::vector<Player> strongest_first(static_cast<std::size_t>(n));
    std::iota(strongest_first.begin(), strongest_first.end(), 0);
    std::shuffle(strongest_first.begin(), strongest_first.end(), rng);
    TournamentDigraph t = TournamentDigraph::acyclic(strongest_first);

    std::vector<Arc> all_pairs;
    for (Player u = 0; u < n; ++u)
        for (Player v = u + 1; v < n; ++v)
            all_pairs.push_back({u, v});
    std::shuffle(all_pairs.begin(), all_pairs.end(), rng);
    for (int i = 0; i < p.k_target; ++i) {
        Arc a = all_pairs[i];
        t = t.with_reversed(t.beats(a.winner, a.loser) ? a : Arc{a.loser, a.winner});
    }

    DemandInstance inst{t, {}, {}, {}};
    if (p.mode == GenMode::Yes) {
        if (p.demands > n - 1)
            throw Error(ErrorCode::InfeasibleDemandCount,
                        std::to_string(p.demands) + " demands, a bracket has " + std::to_string(n - 1) + " matches");
        Seeding s;
        s.order = strongest_first;
        std::shuffle(s.order.begin(), s.order.end(), rng);
        std::vector<MatchRecord> matches = simulate(t, s).matches;
        std::shuffle(matches.begin(), matches.end(), rng);
        matches.resize(static_cast<std::size_t>(p.demands));
        for (const MatchRecord& m : matches) {
            inst.demands.push_back({m.winner, m.loser});
            if (p.with_rounds)
                inst.rounds[{m.winner, m.loser}] = m.round;
        }
    } else {
        std::vector<Arc> arcs;
        for (Player u = 0; u < n; ++u)
            for (Player v = 0; v < n; ++v)
                if (u != v && t.beats(u, v))
                    arcs.push_back({u, v});
        std::shuffle(arcs.begin(), arcs.end(), rng);
        std::vector<char> has_parent(static_cast<std::size_t>(n), 0);
        for (const Arc& a : arcs) {
            if (static_cast<int>(inst.demands.size()) == p.demands)
                break;
            if (has_parent[a.loser])
                continue;
            has_parent[a.loser] = 1;
            inst.demands.push_back(a);
        }
        if (static_cast<int>(inst.demands.size()) < p.demands)
            throw Error(ErrorCode::InfeasibleDemandCount,
                        "only " + std::to_string(inst.demands.size()) + " demands fit");
        if (p.with_rounds) {
            std::uniform_int_distribution<int> round(0, *log_n - 1);
            for (const Arc& a : inst.demands)
                inst.rounds[a] = round(rng);
        }
    }
    std::sort(inst.demands.begin(), inst.demands.end());
    return inst;
}

DemandInstance reduce_tf(const TfInstance& tf)
{
    const int n = tf.tournament.size();
    if (!exact_log2(n))
        throw Error(ErrorCode::NotPowerOfTwo, "player count " + std::to_string(n));
    if (tf.target < 0 || tf.target >= n)
        throw Error(ErrorCode::InvalidArgument, "target out of range");

    const Player source = n;
    auto beats = [&](Player u, Player v) {
        if (v < n)
            return tf.tournament.beats(u, v);  // both original
        if (u < n)
            return v != source || u != tf.target;
        return true;  // dummies ordered by id
    };
    DemandInstance out{TournamentDigraph::from_predicate(2 * n, beats), {}, {}, {}};

    // The dummy block seeded in id order: the source beats source + 2^r in round r.
    out.demands.push_back({source, tf.target});
    for (int step = 1; step < n; step *= 2)
        out.demands.push_back({source, source + step});
    std::sort(out.demands.begin(), out.demands.end());
    return out;
}

}  // namespace dtf
