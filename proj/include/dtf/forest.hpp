#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace dtf {

using Player = int;
inline constexpr Player kNoPlayer = -1;

/// A played or demanded match: `winner` beats `loser`.
struct Arc {
    Player winner = kNoPlayer;
    Player loser = kNoPlayer;
    auto operator<=>(const Arc&) const = default;
};

/// Membership set over players 0..n-1.
class PlayerSet {
public:
    PlayerSet() = default;
    explicit PlayerSet(int universe) : in_(static_cast<std::size_t>(universe), 0) {}
    PlayerSet(int universe, std::initializer_list<Player> members);

    int universe() const noexcept { return static_cast<int>(in_.size()); }
    bool contains(Player v) const { return v >= 0 && v < universe() && in_[v] != 0; }
    void insert(Player v) { in_.at(v) = 1; }
    void erase(Player v) { in_.at(v) = 0; }
    std::size_t count() const;
    bool empty() const { return count() == 0; }
    std::vector<Player> members() const;

    bool operator==(const PlayerSet&) const = default;

private:
    std::vector<char> in_;
};

/// Parent-map forest over players 0..n-1. Arcs point parent -> child.
/// Children are kept in insertion order.
class RootedForest {
public:
    RootedForest() = default;
    explicit RootedForest(int n);

    /// Throws InvalidArgument if the arcs do not form a forest.
    static RootedForest from_arcs(int n, const std::vector<Arc>& arcs);

    int size() const noexcept { return static_cast<int>(parent_.size()); }
    Player parent(Player v) const { return parent_[v]; }
    bool has_parent(Player v) const { return parent_[v] != kNoPlayer; }
    const std::vector<Player>& children(Player v) const { return children_[v]; }

    /// Adds parent -> child. Throws InvalidArgument on a self-loop, a second
    /// parent, or a cycle.
    void add_arc(Arc a);

    bool is_ancestor(Player ancestor, Player v) const;
    std::vector<Player> roots() const;
    std::vector<Player> descendants(Player v) const;  // preorder, v first
    int descendant_count(Player v) const;
    std::vector<Player> siblings(Player v) const;
    std::size_t arc_count() const noexcept { return arcs_; }
    std::vector<Arc> arcs() const;  // sorted

    bool operator==(const RootedForest& other) const { return parent_ == other.parent_; }

private:
    std::vector<Player> parent_;
    std::vector<std::vector<Player>> children_;
    std::size_t arcs_ = 0;
};

}  // namespace dtf
