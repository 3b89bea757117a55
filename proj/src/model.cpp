#include <istab/model.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace istab {

PreferenceList::PreferenceList(PlayerId owner, std::vector<std::vector<PlayerId>> tiers)
    : PreferenceList(owner, std::move(tiers), SelfPosition{})
{
    self_ = SelfPosition{tiers_.size(), false};
}

PreferenceList::PreferenceList(PlayerId owner, std::vector<std::vector<PlayerId>> tiers, SelfPosition self)
    : owner_(owner), tiers_(std::move(tiers)), self_(self)
{
    if (owner_ < 1)
        throw std::invalid_argument("preference list owner must be a positive id");
    std::vector<PlayerId> seen;
    for (auto & tier : tiers_) {
        if (tier.empty())
            throw std::invalid_argument("empty tie group in list of player " + std::to_string(owner_));
        std::sort(tier.begin(), tier.end());
        for (PlayerId p : tier) {
            if (p == owner_)
                throw std::invalid_argument("player " + std::to_string(owner_) + " lists itself");
            seen.push_back(p);
        }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("player listed twice by player " + std::to_string(owner_));
    if (self_.tier > tiers_.size() || (self_.tied && self_.tier == tiers_.size()))
        throw std::invalid_argument("self position out of range for player " + std::to_string(owner_));
}

int PreferenceList::self_level() const
{
    int level = 2 * static_cast<int>(self_.tier);
    return self_.tied ? level + 1 : level;
}

PreferenceList PreferenceList::raised() const
{
    if (!self_.tied)
        return *this;
    return PreferenceList(owner_, tiers_, SelfPosition{self_.tier + 1, false});
}

Game::Game(GameKind kind, int men, std::vector<PreferenceList> profile)
    : kind_(kind), n_(static_cast<int>(profile.size())), men_(men), profile_(std::move(profile))
{
    stride_ = static_cast<std::size_t>(n_) + 1;
    levels_.assign(stride_ * stride_, 0);
    for (PlayerId i = 1; i <= n_; ++i) {
        const auto & list = preferences(i);
        if (list.owner() != i)
            throw std::invalid_argument("profile entry " + std::to_string(i) + " is owned by player "
                                        + std::to_string(list.owner()));
        int * row = &levels_[static_cast<std::size_t>(i) * stride_];
        std::fill(row, row + stride_, list.unlisted_level());
        row[0] = list.unlisted_level();
        for (std::size_t t = 0; t < list.tiers().size(); ++t)
            for (PlayerId j : list.tiers()[t]) {
                if (j < 1 || j > n_)
                    throw std::invalid_argument("player " + std::to_string(i) + " lists unknown player "
                                                + std::to_string(j));
                if (!opposite_sides(i, j))
                    throw std::invalid_argument("player " + std::to_string(i) + " lists same-sex player "
                                                + std::to_string(j));
                row[j] = PreferenceList::tier_level(t);
            }
        row[i] = list.self_level();
    }
}

Game Game::roommate(std::vector<PreferenceList> profile)
{
    return Game(GameKind::Roommate, 0, std::move(profile));
}

Game Game::marriage(int men, int women, std::vector<PreferenceList> profile)
{
    if (men < 0 || women < 0 || static_cast<std::size_t>(men + women) != profile.size())
        throw std::invalid_argument("marriage side sizes do not match the profile");
    return Game(GameKind::Marriage, men, std::move(profile));
}

bool Game::opposite_sides(PlayerId i, PlayerId j) const
{
    if (i == j)
        return false;
    if (!is_marriage())
        return true;
    return (i <= men_) != (j <= men_);
}

bool is_mutual(const Game & game)
{
    for (PlayerId i = 1; i <= game.size(); ++i)
        for (PlayerId j = i + 1; j <= game.size(); ++j)
            if (game.acceptable(i, j) != game.acceptable(j, i))
                return false;
    return true;
}

bool has_no_unacceptability(const Game & game)
{
    for (PlayerId i = 1; i <= game.size(); ++i)
        for (PlayerId j = 1; j <= game.size(); ++j)
            if (game.opposite_sides(i, j) && !game.acceptable(i, j))
                return false;
    return true;
}

Game raise_preferences(const Game & game)
{
    std::vector<PreferenceList> profile;
    profile.reserve(game.profile().size());
    for (const auto & list : game.profile())
        profile.push_back(list.raised());
    if (game.is_marriage())
        return Game::marriage(game.men(), game.women(), std::move(profile));
    return Game::roommate(std::move(profile));
}

} // namespace istab
