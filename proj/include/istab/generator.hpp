#pragma once

#include <istab/model.hpp>

#include <cstdint>

namespace istab {

struct GenParams {
    GameKind kind = GameKind::Roommate;
    int players = 0; // roommate games
    int men = 0;     // marriage games
    int women = 0;
    double tie_probability = 0.0;
    double acceptability_probability = 1.0;
    /// Acceptability is drawn once per pair and shared by both players.
    bool mutual = false;
    /// Every eligible partner is listed; acceptability_probability is ignored.
    bool complete = false;
    std::uint64_t seed = 0;
};

/// Deterministic for a fixed seed. Each player's acceptable partners are
/// shuffled and adjacent ranks are merged into ties with tie_probability;
/// being alone joins the last tier with the same probability.
/// Throws std::invalid_argument on out-of-range parameters.
Game random_game(const GenParams & params);

} // namespace istab
