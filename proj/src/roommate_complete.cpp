#include <istab/errors.hpp>
#include <istab/graph_matching.hpp>
#include <istab/solvers.hpp>

namespace istab {

std::optional<Matching> exists_ns_is_roommate_complete(const Game & game)
{
    if (game.is_marriage() || !has_no_unacceptability(game))
        throw PreconditionError("needs a roommate game in which everyone accepts everyone");
    const int n = game.size();
    if (n % 2 == 0) {
        Matching m = Matching::singletons(n);
        for (PlayerId i = 1; i < n; i += 2)
            m.pair(i, i + 1);
        return m;
    }

    // Players other than `single` map to vertices 0..n-2.
    for (PlayerId single = 1; single <= n; ++single) {
        auto player = [single](Vertex v) { return v + 1 < single ? v + 1 : v + 2; };
        Graph g(n - 1);
        for (Vertex a = 0; a < n - 1; ++a)
            for (Vertex b = a + 1; b < n - 1; ++b) {
                PlayerId j = player(a), k = player(b);
                if (game.weakly_prefers(j, k, single) && game.weakly_prefers(k, j, single))
                    g.add_edge(a, b);
            }
        auto edges = max_matching(g);
        if (2 * static_cast<int>(edges.size()) != n - 1)
            continue;
        Matching m = Matching::singletons(n);
        for (auto [a, b] : edges)
            m.pair(player(a), player(b));
        if (find_deviation(game, m, Concept::NS))
            throw InternalError("perfect matching of the no-envy graph is not Nash stable");
        return m;
    }
    return std::nullopt;
}

} // namespace istab
