#include <istab/errors.hpp>
#include <istab/solvers.hpp>

#include <string>

namespace istab {

BruteForceResult brute_force(const Game & game, Concept stability, int max_players)
{
    if (game.size() > max_players)
        throw PreconditionError("brute force is capped at " + std::to_string(max_players) + " players, game has "
                                + std::to_string(game.size()));
    BruteForceResult result;
    for_each_matching(game.size(), [&](const Matching & m) {
        if (is_stable(game, m, stability)) {
            if (!result.first)
                result.first = m;
            ++result.count;
        }
        return true;
    });
    return result;
}

namespace {

class StableSearch {
public:
    StableSearch(const Game & game, Concept stability)
        : game_(game), stability_(stability), n_(game.size()), state_(static_cast<std::size_t>(n_) + 1, 0),
          clones_(static_cast<std::size_t>(n_) + 1, std::vector<bool>(static_cast<std::size_t>(n_) + 1, false))
    {
        for (PlayerId a = 1; a <= n_; ++a)
            for (PlayerId b = a + 1; b <= n_; ++b)
                clones_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                    = clones_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = interchangeable(a, b);
    }

    std::optional<Matching> run()
    {
        if (!descend(1))
            return std::nullopt;
        std::vector<PlayerId> partner(state_.begin() + 1, state_.end());
        return Matching::from_partners(partner);
    }

private:
    // Swapping a and b is an automorphism of the game.
    bool interchangeable(PlayerId a, PlayerId b) const
    {
        if (game_.level(a, a) != game_.level(b, b) || game_.level(a, b) != game_.level(b, a))
            return false;
        for (PlayerId k = 1; k <= n_; ++k) {
            if (k == a || k == b)
                continue;
            if (game_.level(k, a) != game_.level(k, b) || game_.level(a, k) != game_.level(b, k))
                return false;
        }
        return true;
    }

    PlayerId partner(PlayerId i) const { return state_[static_cast<std::size_t>(i)]; }
    bool single(PlayerId i) const { return partner(i) == i; }

    bool partner_consents(PlayerId mover) const
    {
        PlayerId p = partner(mover);
        return p == mover || game_.weakly_prefers(p, p, mover);
    }

    // Decided player i can profitably join decided single j.
    bool move_blocks(PlayerId i, PlayerId j) const
    {
        if (!game_.strictly_prefers(i, j, partner(i)))
            return false;
        switch (stability_) {
        case Concept::NS: return true;
        case Concept::IS: return game_.acceptable(j, i);
        case Concept::CNS: return partner_consents(i);
        case Concept::CIS: return game_.acceptable(j, i) && partner_consents(i);
        default: return false;
        }
    }

    bool violates_alone(PlayerId i) const
    {
        if (!game_.strictly_prefers(i, i, partner(i)))
            return false;
        if (stability_ == Concept::CNS || stability_ == Concept::CIS)
            return partner_consents(i);
        return true;
    }

    bool violates_pair(PlayerId i, PlayerId j) const
    {
        switch (stability_) {
        case Concept::IR: return false;
        case Concept::Core:
        case Concept::StrictCore: {
            if (partner(i) == j)
                return false;
            int li = game_.level(i, partner(i)), lj = game_.level(j, partner(j));
            int ij = game_.level(i, j), ji = game_.level(j, i);
            if (stability_ == Concept::Core)
                return ij < li && ji < lj;
            return ij <= li && ji <= lj && (ij < li || ji < lj);
        }
        default:
            return (single(j) && move_blocks(i, j)) || (single(i) && move_blocks(j, i));
        }
    }

    bool consistent(std::initializer_list<PlayerId> fresh) const
    {
        for (PlayerId x : fresh) {
            if (violates_alone(x))
                return false;
            for (PlayerId d : decided_)
                if (d != x && violates_pair(x, d))
                    return false;
        }
        return true;
    }

    bool descend(PlayerId from)
    {
        while (from <= n_ && partner(from) != 0)
            ++from;
        if (from > n_)
            return true;
        const PlayerId p = from;

        std::vector<PlayerId> tried;
        for (PlayerId q = p + 1; q <= n_; ++q) {
            if (partner(q) != 0)
                continue;
            bool redundant = false;
            for (PlayerId t : tried)
                if (clones_[static_cast<std::size_t>(t)][static_cast<std::size_t>(q)]) {
                    redundant = true;
                    break;
                }
            if (redundant)
                continue;
            tried.push_back(q);
            state_[static_cast<std::size_t>(p)] = q;
            state_[static_cast<std::size_t>(q)] = p;
            // violates_pair(p, q) only matters for the pair blocks of the core concepts, where partners never block.
            if (consistent({p, q})) {
                decided_.push_back(p);
                decided_.push_back(q);
                if (descend(p + 1))
                    return true;
                decided_.resize(decided_.size() - 2);
            }
            state_[static_cast<std::size_t>(p)] = state_[static_cast<std::size_t>(q)] = 0;
        }

        state_[static_cast<std::size_t>(p)] = p;
        if (consistent({p})) {
            decided_.push_back(p);
            if (descend(p + 1))
                return true;
            decided_.pop_back();
        }
        state_[static_cast<std::size_t>(p)] = 0;
        return false;
    }

    const Game & game_;
    Concept stability_;
    int n_;
    std::vector<PlayerId> state_; // 0 undecided, i single, otherwise the partner
    std::vector<std::vector<bool>> clones_;
    std::vector<PlayerId> decided_;
};

} // namespace

std::optional<Matching> exhaustive_search(const Game & game, Concept stability)
{
    return StableSearch(game, stability).run();
}

} // namespace istab
