#include "dtf/forest.hpp"

#include <algorithm>
#include <string>

#include "dtf/error.hpp"

namespace dtf {

PlayerSet::PlayerSet(int universe, std::initializer_list<Player> members) : PlayerSet(universe)
{
    for (Player v : members)
        insert(v);
}

std::size_t PlayerSet::count() const
{
    return static_cast<std::size_t>(std::count(in_.begin(), in_.end(), 1));
}

std::vector<Player> PlayerSet::members() const
{
    std::vector<Player> out;
    for (Player v = 0; v < universe(); ++v)
        if (in_[v])
            out.push_back(v);
    return out;
}

RootedForest::RootedForest(int n)
    : parent_(static_cast<std::size_t>(n), kNoPlayer), children_(static_cast<std::size_t>(n))
{
}

RootedForest RootedForest::from_arcs(int n, const std::vector<Arc>& arcs)
{
    RootedForest f(n);
    for (const Arc& a : arcs)
        f.add_arc(a);
    return f;
}

void RootedForest::add_arc(Arc a)
{
    const int n = size();
    if (a.winner < 0 || a.winner >= n || a.loser < 0 || a.loser >= n)
        throw Error(ErrorCode::InvalidArgument, "arc endpoint out of range");
    if (a.winner == a.loser)
        throw Error(ErrorCode::InvalidArgument, "self-loop on " + std::to_string(a.winner));
    if (parent_[a.loser] != kNoPlayer)
        throw Error(ErrorCode::InvalidArgument,
                    "player " + std::to_string(a.loser) + " already has a parent");
    if (is_ancestor(a.loser, a.winner))
        throw Error(ErrorCode::InvalidArgument, "arc would close a cycle");
    parent_[a.loser] = a.winner;
    children_[a.winner].push_back(a.loser);
    ++arcs_;
}

bool RootedForest::is_ancestor(Player ancestor, Player v) const
{
    for (Player x = v; x != kNoPlayer; x = parent_[x])
        if (x == ancestor)
            return true;
    return false;
}

std::vector<Player> RootedForest::roots() const
{
    std::vector<Player> out;
    for (Player v = 0; v < size(); ++v)
        if (parent_[v] == kNoPlayer)
            out.push_back(v);
    return out;
}

std::vector<Player> RootedForest::descendants(Player v) const
{
    std::vector<Player> out;
    std::vector<Player> stack{v};
    while (!stack.empty()) {
        Player x = stack.back();
        stack.pop_back();
        out.push_back(x);
        const auto& ch = children_[x];
        for (auto it = ch.rbegin(); it != ch.rend(); ++it)
            stack.push_back(*it);
    }
    return out;
}

int RootedForest::descendant_count(Player v) const
{
    int count = 1;
    for (Player c : children_[v])
        count += descendant_count(c);
    return count;
}

std::vector<Player> RootedForest::siblings(Player v) const
{
    std::vector<Player> out;
    if (parent_[v] == kNoPlayer)
        return out;
    for (Player c : children_[parent_[v]])
        if (c != v)
            out.push_back(c);
    return out;
}

std::vector<Arc> RootedForest::arcs() const
{
    std::vector<Arc> out;
    out.reserve(arcs_);
    for (Player v = 0; v < size(); ++v)
        if (parent_[v] != kNoPlayer)
            out.push_back({parent_[v], v});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dtf
