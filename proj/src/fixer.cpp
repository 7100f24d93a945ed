#include "dtf/fixer.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace dtf {

// ---------------------------------------------------------------------------
// WorkForest, Pack

WorkForest::WorkForest(int n, HeightGuess g)
    : forest_(n), g_(std::move(g)), beta_(static_cast<std::size_t>(n), 1)
{
    for (Player v : g_.domain())
        beta_[v] = std::int64_t{1} << g_.at(v);
}

void WorkForest::add_arc(Arc a)
{
    forest_.add_arc(a);
    const std::int64_t gained = beta_[a.loser];
    for (Player x = a.winner; x != kNoPlayer; x = forest_.parent(x)) {
        if (g_.defined(x))
            break;
        beta_[x] += gained;
    }
}

Player pack(WorkForest& q, std::vector<Player> candidates, int height, const StrengthOrder& sigma,
            PackTrace* trace)
{
    const std::int64_t target = std::int64_t{1} << height;
    std::int64_t sum = 0;
    for (Player w : candidates) {
        if (q.has_parent(w))
            throw Error(ErrorCode::PreconditionViolated, "pack candidate " + std::to_string(w) + " has a parent");
        const std::int64_t b = q.beta(w);
        if (!std::has_single_bit(static_cast<std::uint64_t>(b)) || b > target)
            throw Error(ErrorCode::PreconditionViolated,
                        "pack candidate " + std::to_string(w) + " has guessed size " + std::to_string(b));
        // Joining below a guessed player would not grow its guessed size.
        if (q.guess().defined(w) && b < target)
            throw Error(ErrorCode::PreconditionViolated,
                        "pack candidate " + std::to_string(w) + " has a guessed height below " + std::to_string(height));
        sum += b;
    }
    if (sum < target)
        throw Error(ErrorCode::PreconditionViolated,
                    "guessed sizes sum to " + std::to_string(sum) + ", need " + std::to_string(target));

    // Strongest first, so the first hit of any scan is the strongest.
    std::sort(candidates.begin(), candidates.end(),
              [&](Player a, Player b) { return sigma.stronger(a, b); });
    for (;;) {
        if (trace) {
            std::vector<std::int64_t> betas;
            betas.reserve(candidates.size());
            std::int64_t s = 0;
            for (Player w : candidates) {
                betas.push_back(q.beta(w));
                s += q.beta(w);
            }
            trace->beta_sums.push_back(s);
            trace->root_betas.push_back(std::move(betas));
        }
        for (Player w : candidates)
            if (q.beta(w) == target)
                return w;

        std::int64_t best = 0;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            for (std::size_t k = i + 1; k < candidates.size(); ++k)
                if (q.beta(candidates[i]) == q.beta(candidates[k]))
                    best = std::max(best, q.beta(candidates[i]));
        if (best == 0)
            throw Error(ErrorCode::PreconditionViolated, "no two roots share a guessed size");

        auto x = std::find_if(candidates.begin(), candidates.end(),
                              [&](Player w) { return q.beta(w) == best; });
        auto y = std::find_if(std::next(x), candidates.end(),
                              [&](Player w) { return q.beta(w) == best; });
        q.add_arc({*x, *y});
        candidates.erase(y);
        if (trace)
            ++trace->joins;
    }
}

// ---------------------------------------------------------------------------
// Guess checks

bool sanity_check_guess(const DemandIndex& s_aug, const HeightGuess& g, std::span<const int> alpha_star,
                        int n, Player guessed_root)
{
    const int log_n = std::bit_width(static_cast<unsigned>(n)) - 1;
    for (int a : alpha_star)
        if (a < 0 || a > log_n)
            return false;
    for (Player u = 0; u < s_aug.size(); ++u) {
        const auto& kids = s_aug.children(u);
        for (std::size_t i = 0; i < kids.size(); ++i) {
            if (alpha_star[u] <= alpha_star[kids[i]])
                return false;
            for (std::size_t k = i + 1; k < kids.size(); ++k)
                if (alpha_star[kids[i]] == alpha_star[kids[k]])
                    return false;
        }
    }
    if (guessed_root != kNoPlayer) {
        if (!g.defined(guessed_root) || g.at(guessed_root) != log_n)
            return false;
        for (Player v = 0; v < n; ++v)
            if (v != guessed_root && alpha_star[v] == log_n)
                return false;
    }
    return true;
}

bool height_profile_feasible(std::span<const int> alpha_star, int n)
{
    const int log_n = std::bit_width(static_cast<unsigned>(n)) - 1;
    std::vector<int> at_least(static_cast<std::size_t>(log_n) + 2, 0);
    for (int a : alpha_star) {
        if (a < 0 || a > log_n)
            return false;
        ++at_least[a];
    }
    for (int h = log_n - 1; h >= 0; --h)
        at_least[h] += at_least[h + 1];
    for (int h = 0; h <= log_n; ++h)
        if (at_least[h] > (n >> h))
            return false;
    return true;
}

std::vector<int> height_caps(const TournamentDigraph& t)
{
    const int n = t.size();
    const int log_n = std::bit_width(static_cast<unsigned>(std::max(n, 1))) - 1;
    std::vector<int> caps(static_cast<std::size_t>(n), 0);
    for (Player v = 0; v < n; ++v) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<Player> stack{v};
        seen[v] = 1;
        int reach = 1;
        while (!stack.empty()) {
            Player x = stack.back();
            stack.pop_back();
            for (Player y = 0; y < n; ++y)
                if (!seen[y] && x != y && t.beats(x, y)) {
                    seen[y] = 1;
                    ++reach;
                    stack.push_back(y);
                }
        }
        const int by_reach = std::bit_width(static_cast<unsigned>(reach)) - 1;
        caps[v] = std::min({t.out_degree(v), by_reach, log_n});
    }
    return caps;
}

// ---------------------------------------------------------------------------
// Fixing pass

namespace {

bool verify_pass_output(const TournamentDigraph& t, const DemandIndex& s_aug, const RootedForest& q)
{
    if (!is_spanning_binomial_arborescence(q))
        return false;
    for (const Arc& a : q.arcs())
        if (!t.beats(a.winner, a.loser))
            return false;
    for (const Arc& a : s_aug.arcs())
        if (q.parent(a.loser) != a.winner)
            return false;
    return true;
}

std::optional<RootedForest> fixing_pass(const TournamentDigraph& t, const DemandIndex& s_aug,
                                        const StrengthOrder& sigma, const HeightGuess& g,
                                        std::span<const int> alpha_star)
{
    const int n = t.size();
    WorkForest q(n, g);
    for (const Arc& a : s_aug.arcs())
        q.add_arc(a);

    std::vector<std::int64_t> child_betas;
    std::vector<Player> pool;
    for (int rank = n - 1; rank >= 0; --rank) {
        const Player v = sigma.at(rank);
        child_betas.clear();
        for (Player c : q.children(v))
            child_betas.push_back(q.beta(c));
        for (int j = 0; j < alpha_star[v]; ++j) {
            const std::int64_t size = std::int64_t{1} << j;
            if (std::find(child_betas.begin(), child_betas.end(), size) != child_betas.end())
                continue;
            pool.clear();
            std::int64_t sum = 0;
            for (int r = rank + 1; r < n; ++r) {
                Player w = sigma.at(r);
                if (!q.has_parent(w) && q.beta(w) <= size && t.beats(v, w)) {
                    pool.push_back(w);
                    sum += q.beta(w);
                }
            }
            if (sum < size)
                return std::nullopt;
            Player root = pack(q, pool, j, sigma);
            q.add_arc({v, root});
        }
    }

    pool.clear();
    std::int64_t sum = 0;
    for (Player v = 0; v < n; ++v)
        if (!q.has_parent(v)) {
            pool.push_back(v);
            sum += q.beta(v);
        }
    if (sum < n)
        return std::nullopt;
    pack(q, pool, std::bit_width(static_cast<unsigned>(n)) - 1, sigma);
    if (!verify_pass_output(t, s_aug, q.forest()))
        return std::nullopt;
    return q.forest();
}

}  // namespace

std::optional<RootedForest> run_fixing_pass(const TournamentDigraph& t, const DemandIndex& s_aug,
                                            const StrengthOrder& sigma, const HeightGuess& g,
                                            std::span<const int> alpha_star)
{
    try {
        return fixing_pass(t, s_aug, sigma, g, alpha_star);
    } catch (const Error& e) {
        // A pack precondition or a forest arc that does not fit means the
        // guess was wrong; anything else is a bug and propagates.
        if (e.code() == ErrorCode::PreconditionViolated || e.code() == ErrorCode::InvalidArgument)
            return std::nullopt;
        throw;
    }
}

// ---------------------------------------------------------------------------
// Rounds

HeightGuess round_pins(const ValidatedInstance& inst)
{
    const int n = inst.size();
    HeightGuess pins(n);
    std::vector<int> per_height(static_cast<std::size_t>(inst.log_size()) + 1, 0);
    for (const Arc& a : inst.demands()) {
        auto r = inst.round_of(a);
        if (!r)
            continue;
        if (pins.defined(a.loser) && pins.at(a.loser) != *r)
            throw Error(ErrorCode::RoundConflict,
                        "player " + std::to_string(a.loser) + " pinned to two rounds");
        if (!pins.defined(a.loser))
            ++per_height[*r];
        pins.set(a.loser, *r);
    }
    for (int h = 0; h < inst.log_size(); ++h)
        if (per_height[h] > (n >> (h + 1)))
            throw Error(ErrorCode::RoundConflict,
                        std::to_string(per_height[h]) + " players lose in round " + std::to_string(h));

    for (const Arc& a : inst.demands()) {
        if (!pins.defined(a.loser))
            continue;
        // The winner of a round-r match plays on, so it cannot lose in round <= r.
        if (pins.defined(a.winner) && pins.at(a.winner) <= pins.at(a.loser))
            throw Error(ErrorCode::RoundConflict,
                        "player " + std::to_string(a.winner) + " loses in round " +
                            std::to_string(pins.at(a.winner)) + " but must win in round " +
                            std::to_string(pins.at(a.loser)));
        for (const Arc& b : inst.demands())
            if (b.winner == a.winner && b.loser > a.loser && pins.defined(b.loser) &&
                pins.at(b.loser) == pins.at(a.loser))
                throw Error(ErrorCode::RoundConflict,
                            "player " + std::to_string(a.winner) + " must play two matches in round " +
                                std::to_string(pins.at(a.loser)));
    }
    return pins;
}

// ---------------------------------------------------------------------------
// Guess enumeration

namespace {

constexpr Player kBottom = kNoPlayer;

struct SearchSetup {
    const ValidatedInstance& inst;
    const FeedbackStructure& fas;
    HeightGuess pins;
    std::vector<Player> parent_vertices;  // feedback players whose parent is guessed
    std::vector<Player> height_vertices;  // players whose height is guessed
    std::vector<int> caps;
    bool prune = true;
};

class GuessSearch {
public:
    GuessSearch(const SearchSetup& setup, FixerStats& stats)
        : setup_(setup), t_(setup.inst.tournament()), sigma_(setup.fas.sigma), n_(t_.size()),
          log_n_(setup.inst.log_size()), stats_(stats)
    {
        base_ = setup.inst.demand_index();
        for (Player v : setup.parent_vertices) {
            std::vector<Player> cands;
            for (Player u = 0; u < n_; ++u)
                if (u != v && t_.beats(u, v))
                    cands.push_back(u);
            if (!setup.prune || setup.caps[v] == log_n_)
                cands.push_back(kBottom);
            candidates_.push_back(std::move(cands));
        }
    }

    std::optional<RootedForest> run()
    {
        parents_.assign(setup_.parent_vertices.size(), kBottom);
        if (parent_dfs(0, false))
            return std::move(found_);
        return std::nullopt;
    }

private:
    bool parent_dfs(std::size_t i, bool bottom_used)
    {
        if (i == setup_.parent_vertices.size())
            return with_parents();
        for (Player u : candidates_[i]) {
            if (u == kBottom && bottom_used)
                continue;
            parents_[i] = u;
            if (parent_dfs(i + 1, bottom_used || u == kBottom))
                return true;
        }
        return false;
    }

    // Least height each player can take given only the augmented demand
    // forest: demand children need distinct smaller heights.
    bool lower_bounds()
    {
        lb_.assign(static_cast<std::size_t>(n_), -1);
        for (Player v = 0; v < n_; ++v)
            if (!s_aug_.has_parent(v) && !bound(v))
                return false;
        // Players left unbounded sit on a demand cycle.
        return std::none_of(lb_.begin(), lb_.end(), [](int b) { return b < 0; });
    }

    bool bound(Player v)
    {
        std::vector<int> kids;
        for (Player c : s_aug_.children(v)) {
            if (!bound(c))
                return false;
            kids.push_back(lb_[c]);
        }
        std::sort(kids.begin(), kids.end());
        int next = 0;
        for (int k : kids)
            next = std::max(next, k) + 1;
        if (setup_.pins.defined(v)) {
            if (next > setup_.pins.at(v))
                return false;
            next = setup_.pins.at(v);
        }
        if (next > setup_.caps[v])
            return false;
        lb_[v] = next;
        return true;
    }

    bool with_parents()
    {
        ++stats_.parent_guesses;
        s_aug_ = base_;
        root_ = kNoPlayer;
        for (std::size_t i = 0; i < parents_.size(); ++i) {
            if (parents_[i] == kBottom)
                root_ = setup_.parent_vertices[i];
            else
                s_aug_.add({parents_[i], setup_.parent_vertices[i]});
        }
        if (setup_.prune) {
            if (!lower_bounds())
                return false;
        } else {
            lb_.assign(static_cast<std::size_t>(n_), 0);
        }
        guess_ = setup_.pins;
        return height_dfs(0);
    }

    // Pairwise conditions involving v and already guessed players.
    bool consistent(Player v, int h) const
    {
        if (Player u = s_aug_.parent(v); u != kNoPlayer) {
            if (guess_.defined(u) && guess_.at(u) <= h)
                return false;
            for (Player w : s_aug_.children(u))
                if (w != v && guess_.defined(w) && guess_.at(w) == h)
                    return false;
        }
        for (Player c : s_aug_.children(v))
            if (guess_.defined(c) && guess_.at(c) >= h)
                return false;
        return true;
    }

    bool height_dfs(std::size_t i)
    {
        if (i == setup_.height_vertices.size())
            return evaluate();
        const Player v = setup_.height_vertices[i];
        int lo = lb_[v];
        int hi = setup_.prune ? setup_.caps[v] : log_n_;
        if (v == root_)
            lo = log_n_;
        else
            hi = std::min(hi, log_n_ - 1);
        for (int h = lo; h <= hi; ++h) {
            if (!consistent(v, h))
                continue;
            guess_.set(v, h);
            if (height_dfs(i + 1))
                return true;
        }
        guess_.clear(v);
        return false;
    }

    bool evaluate()
    {
        ++stats_.height_guesses;
        std::vector<int> a = alpha_star(s_aug_, sigma_, guess_);
        if (!sanity_check_guess(s_aug_, guess_, a, n_, root_))
            return false;
        if (setup_.prune) {
            if (!height_profile_feasible(a, n_))
                return false;
            for (Player v = 0; v < n_; ++v)
                if (a[v] > setup_.caps[v])
                    return false;
        }
        ++stats_.sane_guesses;
        ++stats_.passes;
        auto sba = run_fixing_pass(t_, s_aug_, sigma_, guess_, a);
        if (!sba)
            return false;
        // Round constraints are re-checked on the bracket itself.
        if (setup_.inst.has_rounds() && !check_solution(setup_.inst, sba_to_seeding(*sba)).ok)
            return false;
        found_ = std::move(sba);
        return true;
    }

    const SearchSetup& setup_;
    const TournamentDigraph& t_;
    const StrengthOrder& sigma_;
    int n_;
    int log_n_;
    FixerStats& stats_;

    DemandIndex base_;
    std::vector<std::vector<Player>> candidates_;
    std::vector<Player> parents_;
    DemandIndex s_aug_;
    Player root_ = kNoPlayer;
    std::vector<int> lb_;
    HeightGuess guess_;
    std::optional<RootedForest> found_;
};

enum class Mode { Xp, Fpt };

FixerResult solve_impl(const ValidatedInstance& inst, const FixerOptions& opts, Mode mode)
{
    const int n = inst.size();
    if (n > opts.max_players)
        throw Error(ErrorCode::TooLarge,
                    "fixer limited to " + std::to_string(opts.max_players) + " players, got " + std::to_string(n));
    FixerResult res;
    if (inst.trivially_no())
        return res;

    res.fas = minimum_fas(inst.tournament());
    if (res.fas.k() > opts.max_k)
        throw Error(ErrorCode::TooLarge, "feedback arc set of size " + std::to_string(res.fas.k()) +
                                             " above limit " + std::to_string(opts.max_k));
    const DemandIndex& demands = inst.demand_index();
    if (mode == Mode::Fpt) {
        for (Player h : res.fas.heads().members())
            if (!demands.has_parent(h))
                throw Error(ErrorCode::PropertyOneViolated,
                            "feedback arc head " + std::to_string(h) + " loses no demand match");
    }

    SearchSetup setup{inst, res.fas, round_pins(inst), {}, {}, height_caps(inst.tournament()), opts.prune};
    const PlayerSet domain = mode == Mode::Xp ? res.fas.vertices() : res.fas.heads();
    for (Player v : domain.members()) {
        if (mode == Mode::Xp && !demands.has_parent(v))
            setup.parent_vertices.push_back(v);
        if (!setup.pins.defined(v))
            setup.height_vertices.push_back(v);
    }

    GuessSearch search(setup, res.stats);
    res.sba = search.run();
    if (res.sba)
        res.seeding = sba_to_seeding(*res.sba);
    return res;
}

}  // namespace

FixerResult solve_xp_detailed(const ValidatedInstance& inst, FixerOptions opts)
{
    return solve_impl(inst, opts, Mode::Xp);
}

std::optional<Seeding> solve_xp(const ValidatedInstance& inst, FixerOptions opts)
{
    return solve_xp_detailed(inst, opts).seeding;
}

FixerResult solve_fpt_detailed(const ValidatedInstance& inst, FixerOptions opts)
{
    return solve_impl(inst, opts, Mode::Fpt);
}

std::optional<Seeding> solve_fpt(const ValidatedInstance& inst, FixerOptions opts)
{
    return solve_fpt_detailed(inst, opts).seeding;
}

std::optional<Seeding> solve_with_rounds(const ValidatedInstance& inst, FixerOptions opts)
{
    if (opts.require_all_rounds)
        for (const Arc& a : inst.demands())
            if (!inst.round_of(a))
                throw Error(ErrorCode::InvalidArgument,
                            "demand (" + std::to_string(a.winner) + "," + std::to_string(a.loser) +
                                ") has no round");
    return solve_xp(inst, opts);
}

}  // namespace dtf
