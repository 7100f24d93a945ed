#include "dtf/fas.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <queue>
#include <string>

namespace dtf {

PlayerSet FeedbackStructure::vertices() const
{
    PlayerSet s(sigma.size());
    for (const Arc& a : arcs) {
        s.insert(a.winner);
        s.insert(a.loser);
    }
    return s;
}

PlayerSet FeedbackStructure::heads() const
{
    PlayerSet s(sigma.size());
    for (const Arc& a : arcs)
        s.insert(a.loser);
    return s;
}

StrengthOrder strength_order(const TournamentDigraph& t, const std::vector<Arc>& feedback)
{
    const int n = t.size();
    std::vector<std::vector<char>> removed(static_cast<std::size_t>(n),
                                           std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const Arc& a : feedback)
        removed.at(a.winner).at(a.loser) = 1;

    std::vector<int> in_degree(static_cast<std::size_t>(n), 0);
    for (Player u = 0; u < n; ++u)
        for (Player v = 0; v < n; ++v)
            if (u != v && t.beats(u, v) && !removed[u][v])
                ++in_degree[v];

    std::priority_queue<Player, std::vector<Player>, std::greater<>> ready;
    for (Player v = 0; v < n; ++v)
        if (in_degree[v] == 0)
            ready.push(v);
    std::vector<Player> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        Player u = ready.top();
        ready.pop();
        order.push_back(u);
        for (Player v = 0; v < n; ++v)
            if (u != v && t.beats(u, v) && !removed[u][v] && --in_degree[v] == 0)
                ready.push(v);
    }
    if (static_cast<int>(order.size()) != n)
        throw Error(ErrorCode::NotAFeedbackArcSet, "T - F still contains a cycle");
    return StrengthOrder(std::move(order));
}

namespace {

// Reversal search: a minimal feedback arc set of a tournament is exactly a
// set whose reversal leaves a transitive tournament, and a tournament is
// transitive iff it has no directed triangle.
class TriangleBrancher {
public:
    explicit TriangleBrancher(const TournamentDigraph& t) : n_(t.size())
    {
        out_.resize(static_cast<std::size_t>(n_));
        reversed_.assign(static_cast<std::size_t>(n_), 0);
        for (Player u = 0; u < n_; ++u)
            out_[u] = t.out_mask(u);
    }

    bool search(int budget)
    {
        auto tri = first_triangle();
        if (!tri)
            return true;
        if (budget == 0)
            return false;
        const auto [a, b, c] = *tri;
        const Arc arcs[3] = {{a, b}, {b, c}, {c, a}};
        for (const Arc& arc : arcs) {
            // An arc already flipped stays flipped.
            if ((reversed_[arc.winner] >> arc.loser) & 1u)
                continue;
            flip(arc);
            reversed_[arc.loser] |= bit(arc.winner);
            if (search(budget - 1))
                return true;
            reversed_[arc.loser] &= ~bit(arc.winner);
            flip({arc.loser, arc.winner});
        }
        return false;
    }

    // Arcs of the original tournament that were flipped.
    std::vector<Arc> flipped() const
    {
        std::vector<Arc> out;
        for (Player u = 0; u < n_; ++u)
            for (Player v = 0; v < n_; ++v)
                if ((reversed_[u] >> v) & 1u)
                    out.push_back({v, u});
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static std::uint64_t bit(Player v) { return std::uint64_t{1} << v; }

    void flip(Arc a)
    {
        out_[a.winner] &= ~bit(a.loser);
        out_[a.loser] |= bit(a.winner);
    }

    struct Triangle {
        Player a, b, c;
    };

    std::optional<Triangle> first_triangle() const
    {
        for (Player u = 0; u < n_; ++u) {
            std::uint64_t in_u = 0;
            for (Player w = 0; w < n_; ++w)
                if ((out_[w] >> u) & 1u)
                    in_u |= bit(w);
            for (std::uint64_t outs = out_[u]; outs; outs &= outs - 1) {
                Player v = std::countr_zero(outs);
                if (std::uint64_t closing = out_[v] & in_u)
                    return Triangle{u, v, static_cast<Player>(std::countr_zero(closing))};
            }
        }
        return std::nullopt;
    }

    int n_;
    std::vector<std::uint64_t> out_;
    std::vector<std::uint64_t> reversed_;  // reversed_[x] bit y: original arc (y, x) now reads (x, y)
};

}  // namespace

FeedbackStructure minimum_fas(const TournamentDigraph& t)
{
    if (t.size() > 64)
        throw Error(ErrorCode::TooLarge, "minimum_fas supports at most 64 players");
    TriangleBrancher brancher(t);
    for (int budget = 0;; ++budget) {
        if (brancher.search(budget)) {
            FeedbackStructure fs;
            fs.arcs = brancher.flipped();
            fs.sigma = strength_order(t, fs.arcs);
            return fs;
        }
    }
}

}  // namespace dtf
