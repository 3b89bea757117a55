#include <istab/errors.hpp>
#include <istab/solvers.hpp>

#include <string>
#include <unordered_map>

namespace istab {

namespace {

SolverReport improve_from_singletons(const Game & game, Concept stability, std::size_t bound)
{
    const auto start = std::chrono::steady_clock::now();
    SolverReport report{Matching::singletons(game.size()), 0, {}};
    while (auto move = find_deviation(game, report.matching, stability)) {
        if (++report.deviation_count > bound)
            throw InternalError(std::string(name(stability)) + " deviations exceeded the bound of "
                                + std::to_string(bound));
        report.matching = apply_deviation(report.matching, *move);
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

} // namespace

SolverReport compute_cis_ir(const Game & game)
{
    const auto n = static_cast<std::size_t>(game.size());
    auto report = improve_from_singletons(game, Concept::CIS, n * (n == 0 ? 0 : n - 1));
    if (!is_individually_rational(game, report.matching))
        throw InternalError("CIS dynamics from singletons left an individually irrational matching");
    return report;
}

SolverReport compute_cns(const Game & game)
{
    const auto n = static_cast<std::size_t>(game.size());
    return improve_from_singletons(game, Concept::CNS, 2 * n * n);
}

DynamicsTrace run_dynamics(const Game & game, Concept stability, const Matching & initial, std::size_t max_steps)
{
    if (initial.size() != game.size())
        throw std::invalid_argument("initial matching has the wrong number of players");
    DynamicsTrace trace;
    Matching current = initial;
    std::unordered_map<Matching, std::size_t, MatchingHash> seen{{current, 0}};
    while (true) {
        auto move = find_deviation(game, current, stability);
        if (!move) {
            trace.outcome = DynamicsOutcome::Stable;
            break;
        }
        if (trace.steps.size() == max_steps) {
            trace.outcome = DynamicsOutcome::StepLimit;
            break;
        }
        trace.steps.push_back({current, *move});
        current = apply_deviation(current, *move);
        auto [it, inserted] = seen.try_emplace(current, trace.steps.size());
        if (!inserted) {
            trace.outcome = DynamicsOutcome::CycleDetected;
            trace.first_repeat = it->second;
            break;
        }
    }
    trace.final_matching = std::move(current);
    return trace;
}

} // namespace istab
