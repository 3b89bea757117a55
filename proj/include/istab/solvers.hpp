#pragma once

#include <istab/matching.hpp>
#include <istab/model.hpp>
#include <istab/stability.hpp>

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace istab {

struct SolverReport {
    Matching matching;
    std::size_t deviation_count = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// From all singletons, applies CIS deviations (deterministic witness order)
/// until none is left. The result is CIS and IR after at most n(n-1)
/// deviations; exceeding that throws InternalError.
SolverReport compute_cis_ir(const Game & game);

/// From all singletons, applies CNS deviations until none is left. The
/// singleton start is what guarantees termination. Throws InternalError
/// after more than 2n^2 deviations.
SolverReport compute_cns(const Game & game);

enum class Side { Men, Women };

/// Deferred acceptance with the given side proposing. Ties are broken by
/// lowest id; a player only proposes to, or holds, partners it strictly
/// prefers to being alone. Throws PreconditionError for roommate games.
Matching gale_shapley(const Game & game, Side proposers);

/// Individually stable matching of a marriage game: raise the preferences,
/// then run women-proposing deferred acceptance. The output is checked for
/// IS and IR against the original preferences; a failure throws InternalError.
Matching compute_is_marriage(const Game & game);

/// Nash stable matching of a marriage game in which everybody accepts every
/// member of the opposite sex. Throws PreconditionError otherwise.
Matching compute_ns_marriage_complete(const Game & game);

/// Roommate games without unacceptability: a Nash stable matching (which is
/// also individually stable) if one exists. Even n: a perfect matching. Odd
/// n: for each candidate single i, a perfect matching of the graph on the
/// others with j - k whenever both weakly prefer each other to i.
/// Throws PreconditionError for other games.
std::optional<Matching> exists_ns_is_roommate_complete(const Game & game);

inline constexpr int kDefaultBruteForceCap = 12;

struct BruteForceResult {
    /// First stable matching in enumeration order.
    std::optional<Matching> first;
    std::uint64_t count = 0;
};

/// Checks every matching on the game's players. Throws PreconditionError
/// when the game has more than `max_players` players.
BruteForceResult brute_force(const Game & game, Concept stability, int max_players = kDefaultBruteForceCap);

/// Exhaustive existence search for larger games: backtracking over partial
/// matchings, rejecting a branch as soon as two decided players certify
/// instability, and trying only one of several interchangeable partners.
/// Returns some stable matching iff one exists. Any concept.
std::optional<Matching> exhaustive_search(const Game & game, Concept stability);

enum class DynamicsOutcome { Stable, CycleDetected, StepLimit };

struct DynamicsStep {
    Matching before;
    DeviationWitness move;
};

struct DynamicsTrace {
    std::vector<DynamicsStep> steps;
    DynamicsOutcome outcome = DynamicsOutcome::StepLimit;
    Matching final_matching;
    /// For CycleDetected: index of the step whose `before` matching recurred
    /// as `final_matching`.
    std::size_t first_repeat = 0;
};

/// Follows deterministic deviations (see find_deviation) from `initial`
/// until the matching is stable, a matching repeats, or max_steps moves
/// have been made. `stability` must be NS, IS, CNS or CIS.
DynamicsTrace run_dynamics(const Game & game, Concept stability, const Matching & initial, std::size_t max_steps);

} // namespace istab
