#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "dtf/model.hpp"

namespace dtf::testing {

/// Transitive tournament in which lower ids are stronger.
inline TournamentDigraph ordered(int n)
{
    std::vector<Player> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return TournamentDigraph::acyclic(order);
}

/// `ordered(n)` with the listed pairs turned into upsets (weaker beats stronger).
inline TournamentDigraph ordered_with_upsets(int n, std::initializer_list<Arc> upsets)
{
    TournamentDigraph t = ordered(n);
    for (const Arc& a : upsets)
        t = t.with_reversed({a.loser, a.winner});
    return t;
}

inline ValidatedInstance make(TournamentDigraph t, std::vector<Arc> demands, std::map<Arc, int> rounds = {})
{
    return validate_instance({std::move(t), std::move(demands), std::move(rounds), {}});
}

/// Code of the Error thrown by `fn`, or nothing if it returns normally.
inline std::optional<ErrorCode> code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace dtf::testing
