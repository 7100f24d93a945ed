#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "dtf/app.hpp"
#include "dtf/arborescence.hpp"

namespace dtf {

std::string render_bracket(const RootedForest& sba, RenderFormat format, std::span<const Arc> demands)
{
    if (!is_spanning_binomial_arborescence(sba))
        throw Error(ErrorCode::NotAnSBA, "cannot render a forest that is not a bracket");

    // (round, winner, loser); a match is played in the round equal to the loser's height.
    std::vector<std::tuple<int, Player, Player>> matches;
    for (const Arc& a : sba.arcs())
        matches.emplace_back(alpha(sba, a.loser), a.winner, a.loser);
    std::sort(matches.begin(), matches.end());

    std::ostringstream out;
    if (format == RenderFormat::Text) {
        for (const auto& [round, w, l] : matches)
            out << "round " << round << ": " << w << " def " << l << '\n';
        return out.str();
    }

    const std::set<Arc> wanted(demands.begin(), demands.end());
    const Player champion = sba.roots().front();
    out << "digraph bracket {\n";
    out << "  node [shape=circle];\n";
    for (Player v = 0; v < sba.size(); ++v) {
        out << "  " << v;
        if (v == champion)
            out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (const auto& [round, w, l] : matches) {
        out << "  " << w << " -> " << l << " [label=\"r" << round << "\"";
        if (wanted.contains({w, l}))
            out << ", color=red, penwidth=2";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace dtf
