#include "dtf/arborescence.hpp"

#include <algorithm>
#include <string>

namespace dtf {

int HeightGuess::at(Player v) const
{
    int h = height_.at(v);
    if (h == kUndefined)
        throw Error(ErrorCode::PreconditionViolated, "no height guessed for player " + std::to_string(v));
    return h;
}

std::vector<Player> HeightGuess::domain() const
{
    std::vector<Player> out;
    for (Player v = 0; v < universe(); ++v)
        if (height_[v] != kUndefined)
            out.push_back(v);
    return out;
}

int alpha(const RootedForest& forest, Player v)
{
    int size = forest.descendant_count(v);
    auto h = exact_log2(size);
    if (!h)
        throw Error(ErrorCode::NotPowerOfTwoSubtree,
                    "player " + std::to_string(v) + " has " + std::to_string(size) + " descendants");
    return *h;
}

namespace {

// Height of the binomial arborescence at v, or -1 if the subtree is not one.
int ba_height(const RootedForest& forest, Player v)
{
    std::vector<int> heights;
    heights.reserve(forest.children(v).size());
    for (Player c : forest.children(v)) {
        int h = ba_height(forest, c);
        if (h < 0)
            return -1;
        heights.push_back(h);
    }
    std::sort(heights.begin(), heights.end());
    for (std::size_t i = 0; i < heights.size(); ++i)
        if (heights[i] != static_cast<int>(i))
            return -1;
    return static_cast<int>(heights.size());
}

}  // namespace

bool is_binomial_arborescence(const RootedForest& forest, Player root)
{
    return ba_height(forest, root) >= 0;
}

bool is_spanning_binomial_arborescence(const RootedForest& forest)
{
    if (forest.size() == 0)
        return false;
    auto roots = forest.roots();
    return roots.size() == 1 && ba_height(forest, roots.front()) >= 0;
}

std::vector<Player> feedback_descendants(const RootedForest& forest, Player v,
                                         const PlayerSet& feedback)
{
    std::vector<Player> out;
    // (vertex, whether the path from v already passed a feedback vertex other than v)
    std::vector<std::pair<Player, bool>> stack{{v, false}};
    while (!stack.empty()) {
        auto [x, past] = stack.back();
        stack.pop_back();
        bool below = past || (x != v && feedback.contains(x));
        for (Player c : forest.children(x)) {
            if (below)
                out.push_back(c);
            stack.push_back({c, below});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> guessed_sizes(const RootedForest& forest, const HeightGuess& g)
{
    const int n = forest.size();
    std::vector<std::int64_t> beta(static_cast<std::size_t>(n), 0);
    for (Player r : forest.roots()) {
        // Preorder reversed is a valid bottom-up order.
        auto order = forest.descendants(r);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            Player v = *it;
            if (g.defined(v)) {
                beta[v] = std::int64_t{1} << g.at(v);
                continue;
            }
            std::int64_t b = 1;
            for (Player c : forest.children(v))
                b += beta[c];
            beta[v] = b;
        }
    }
    return beta;
}

std::int64_t guessed_size_beta(const RootedForest& forest, Player v, const HeightGuess& g)
{
    if (g.defined(v))
        return std::int64_t{1} << g.at(v);
    std::int64_t b = 1;
    for (Player c : forest.children(v))
        b += guessed_size_beta(forest, c, g);
    return b;
}

namespace {

// Kuhn's augmenting paths: can every child be matched to a distinct height
// below `limit`, using only heights allowed by the child's feasibility mask?
bool children_fit(const std::vector<std::uint64_t>& masks, int limit)
{
    std::vector<int> owner(static_cast<std::size_t>(limit), -1);
    for (std::size_t c = 0; c < masks.size(); ++c) {
        std::vector<char> seen(static_cast<std::size_t>(limit), 0);
        auto augment = [&](auto&& self, std::size_t child) -> bool {
            for (int t = 0; t < limit; ++t) {
                if (!((masks[child] >> t) & 1u) || seen[t])
                    continue;
                seen[t] = 1;
                if (owner[t] < 0 || self(self, static_cast<std::size_t>(owner[t]))) {
                    owner[t] = static_cast<int>(child);
                    return true;
                }
            }
            return false;
        };
        if (!augment(augment, c))
            return false;
    }
    return true;
}

struct PartialBaChecker {
    const RootedForest& forest;
    Player root;
    const PlayerSet& feedback;
    const HeightGuess& g;
    int max_height;

    // Bit t set iff the subtree at v can occupy height t in some host.
    // `in_zone`: v lies strictly below a marked non-root vertex, so children
    // of v may be absent from the host.
    std::uint64_t feasible(Player v, bool in_zone) const
    {
        const bool marked = feedback.contains(v);
        const bool may_miss = in_zone || (marked && v != root);
        std::vector<std::uint64_t> masks;
        masks.reserve(forest.children(v).size());
        for (Player c : forest.children(v)) {
            std::uint64_t m = feasible(c, may_miss);
            if (m == 0)
                return 0;
            masks.push_back(m);
        }
        const int kids = static_cast<int>(masks.size());
        int lo = 0;
        int hi = max_height;
        if (marked) {
            lo = hi = g.at(v);
            if (lo > max_height)
                return 0;
        }
        std::uint64_t out = 0;
        for (int t = lo; t <= hi; ++t) {
            if (may_miss ? kids > t : kids != t)
                continue;
            if (children_fit(masks, t))
                out |= std::uint64_t{1} << t;
        }
        return out;
    }
};

}  // namespace

bool is_partial_ba(const RootedForest& forest, Player root, const PlayerSet& feedback,
                   const HeightGuess& g, int claimed_height)
{
    if (claimed_height < 0 || claimed_height > 62)
        return false;
    PartialBaChecker check{forest, root, feedback, g, claimed_height};
    if (!((check.feasible(root, false) >> claimed_height) & 1u))
        return false;
    return guessed_size_beta(forest, root, g) == (std::int64_t{1} << claimed_height);
}

std::vector<int> alpha_star(const DemandIndex& demands, const StrengthOrder& order,
                            const HeightGuess& g)
{
    const int n = order.size();
    std::vector<int> a(static_cast<std::size_t>(n), -1);
    for (Player v : g.domain())
        a[v] = g.at(v);
    std::vector<char> forbidden;
    for (int rank = n - 1; rank >= 0; --rank) {
        Player v = order.at(rank);
        if (g.defined(v))
            continue;
        int lo = 0;
        for (Player c : demands.children(v)) {
            if (a[c] < 0)
                throw Error(ErrorCode::PreconditionViolated,
                            "demand child " + std::to_string(c) + " of " + std::to_string(v) +
                                " is stronger but has no guessed height");
            lo = std::max(lo, a[c] + 1);
        }
        forbidden.assign(static_cast<std::size_t>(n) + 2, 0);
        if (Player u = demands.parent(v); u != kNoPlayer) {
            for (Player w : demands.children(u))
                if (w != v && (order.weaker(w, v) || g.defined(w)) && a[w] >= 0 &&
                    a[w] < static_cast<int>(forbidden.size()))
                    forbidden[a[w]] = 1;
        }
        int t = lo;
        while (t < static_cast<int>(forbidden.size()) && forbidden[t])
            ++t;
        a[v] = t;
    }
    return a;
}

bool is_compact(const RootedForest& sba, const DemandIndex& demands, const StrengthOrder& order,
                const HeightGuess& g)
{
    auto a = alpha_star(demands, order, g);
    for (Player v = 0; v < sba.size(); ++v)
        if (demands.has_parent(v) && alpha(sba, v) != a[v])
            return false;
    return true;
}

bool is_weakly_compact(const RootedForest& sba, const DemandIndex& demands,
                       const StrengthOrder& order, const PlayerSet& feedback)
{
    HeightGuess g(sba.size());
    for (Player f : feedback.members())
        g.set(f, alpha(sba, f));
    return is_compact(sba, demands, order, g);
}

bool is_valid_for(const RootedForest& forest, std::span<const Arc> demands)
{
    return std::all_of(demands.begin(), demands.end(),
                       [&](const Arc& a) { return forest.parent(a.loser) == a.winner; });
}

}  // namespace dtf
