#include <istab/errors.hpp>
#include <istab/solvers.hpp>

#include <algorithm>
#include <deque>
#include <utility>

namespace istab {

Matching gale_shapley(const Game & game, Side proposers)
{
    if (!game.is_marriage())
        throw PreconditionError("deferred acceptance needs a marriage game");
    const int n = game.size();
    auto proposing = [&](PlayerId i) { return game.is_man(i) == (proposers == Side::Men); };
    // Strict order after lowest-id tie-breaking.
    auto key = [&](PlayerId who, PlayerId other) { return std::pair{game.level(who, other), other}; };

    std::vector<std::vector<PlayerId>> order(static_cast<std::size_t>(n) + 1);
    std::deque<PlayerId> free;
    for (PlayerId p = 1; p <= n; ++p) {
        if (!proposing(p))
            continue;
        auto & list = order[static_cast<std::size_t>(p)];
        for (PlayerId r = 1; r <= n; ++r)
            if (game.opposite_sides(p, r) && game.likes(p, r))
                list.push_back(r);
        std::sort(list.begin(), list.end(), [&](PlayerId a, PlayerId b) { return key(p, a) < key(p, b); });
        free.push_back(p);
    }

    std::vector<std::size_t> next(static_cast<std::size_t>(n) + 1, 0);
    std::vector<PlayerId> held(static_cast<std::size_t>(n) + 1, 0);
    while (!free.empty()) {
        PlayerId p = free.front();
        free.pop_front();
        const auto & list = order[static_cast<std::size_t>(p)];
        auto & cursor = next[static_cast<std::size_t>(p)];
        while (cursor < list.size()) {
            PlayerId r = list[cursor++];
            if (!game.likes(r, p))
                continue;
            PlayerId & current = held[static_cast<std::size_t>(r)];
            if (current == 0) {
                current = p;
                break;
            }
            if (key(r, p) < key(r, current)) {
                free.push_back(current);
                current = p;
                break;
            }
        }
    }

    Matching result = Matching::singletons(n);
    for (PlayerId r = 1; r <= n; ++r)
        if (held[static_cast<std::size_t>(r)] != 0)
            result.pair(r, held[static_cast<std::size_t>(r)]);
    return result;
}

Matching compute_is_marriage(const Game & game)
{
    if (!game.is_marriage())
        throw PreconditionError("an individually stable matching is only guaranteed for marriage games");
    Matching result = gale_shapley(raise_preferences(game), Side::Women);
    if (!is_individually_rational(game, result) || find_deviation(game, result, Concept::IS))
        throw InternalError("women-proposing deferred acceptance on raised preferences is not individually stable");
    return result;
}

Matching compute_ns_marriage_complete(const Game & game)
{
    if (!game.is_marriage() || !has_no_unacceptability(game))
        throw PreconditionError("needs a marriage game in which everyone accepts every member of the opposite sex");
    Matching result = compute_is_marriage(game);
    if (find_deviation(game, result, Concept::NS))
        throw InternalError("individually stable matching with complete lists is not Nash stable");
    return result;
}

} // namespace istab
