#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "dtf/model.hpp"

namespace dtf {

/// Tournament Fixing instance: can `target` win some bracket?
struct TfInstance {
    TournamentDigraph tournament;
    Player target = kNoPlayer;
};

using ParsedFile = std::variant<DemandInstance, TfInstance>;

/// Line format:
///   n <int>
///   matrix <row>          (n lines; '1' at column j means row beats j)
///   demand <u> <v>
///   round <u> <v> <r>
///   weight <u> <v> <w>
///   target <v>            (Tournament Fixing files only)
/// '#' starts a comment. Throws ParseError with the line number; demand
/// instances are also run through validate_instance.
ParsedFile parse_instance(std::string_view text);

/// Canonical form: demand, round and weight lines sorted.
std::string serialize_instance(const DemandInstance& inst);
std::string serialize_instance(const TfInstance& tf);

enum class GenMode { Yes, Uniform };

struct GenParams {
    int n = 4;
    int k_target = 0;
    int demands = 0;
    GenMode mode = GenMode::Yes;
    std::uint64_t seed = 0;
    /// Attach rounds: the realised rounds in Yes mode, uniform random
    /// rounds in Uniform mode.
    bool with_rounds = false;
    int max_k_target = 16;
};

/// Random acyclic tournament with k_target random pairs flipped; Yes mode
/// samples demands from the bracket of a random seeding, Uniform mode
/// samples arcs keeping demand in-degree <= 1. Deterministic per seed.
DemandInstance gen_instance(const GenParams& params);

/// Doubles the player set with an acyclic dummy block whose source must
/// beat the target in the final. The result is a yes-instance iff the
/// target can win the original tournament. Dummies are n..2n-1, source n.
DemandInstance reduce_tf(const TfInstance& tf);

enum class RenderFormat { Text, Dot };

/// Text lists "round r: w def l" lines; DOT draws winner -> loser arcs with
/// demand arcs highlighted. Throws NotAnSBA.
std::string render_bracket(const RootedForest& sba, RenderFormat format,
                           std::span<const Arc> demands = {});

}  // namespace dtf
