#include <istab/generator.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace istab {

namespace {

void validate(const GenParams & params)
{
    auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!in_unit(params.tie_probability))
        throw std::invalid_argument("tie probability must lie in [0, 1]");
    if (!params.complete && !in_unit(params.acceptability_probability))
        throw std::invalid_argument("acceptability probability must lie in [0, 1]");
    if (params.kind == GameKind::Roommate && params.players < 0)
        throw std::invalid_argument("player count must be non-negative");
    if (params.kind == GameKind::Marriage && (params.men < 0 || params.women < 0))
        throw std::invalid_argument("side sizes must be non-negative");
}

} // namespace

Game random_game(const GenParams & params)
{
    validate(params);
    const bool marriage = params.kind == GameKind::Marriage;
    const int n = marriage ? params.men + params.women : params.players;
    auto eligible = [&](PlayerId i, PlayerId j) {
        if (i == j)
            return false;
        return !marriage || ((i <= params.men) != (j <= params.men));
    };

    std::mt19937_64 rng(params.seed);
    std::bernoulli_distribution accept(params.complete ? 1.0 : params.acceptability_probability);
    std::bernoulli_distribution tie(params.tie_probability);

    std::vector<std::vector<PlayerId>> acceptable(static_cast<std::size_t>(n) + 1);
    for (PlayerId i = 1; i <= n; ++i)
        for (PlayerId j = params.mutual ? i + 1 : 1; j <= n; ++j) {
            if (!eligible(i, j) || !accept(rng))
                continue;
            acceptable[static_cast<std::size_t>(i)].push_back(j);
            if (params.mutual)
                acceptable[static_cast<std::size_t>(j)].push_back(i);
        }

    std::vector<PreferenceList> profile;
    profile.reserve(static_cast<std::size_t>(n));
    for (PlayerId i = 1; i <= n; ++i) {
        auto & order = acceptable[static_cast<std::size_t>(i)];
        std::sort(order.begin(), order.end());
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<std::vector<PlayerId>> tiers;
        for (PlayerId j : order) {
            if (!tiers.empty() && tie(rng))
                tiers.back().push_back(j);
            else
                tiers.push_back({j});
        }
        SelfPosition self{tiers.size(), false};
        if (!tiers.empty() && tie(rng))
            self = {tiers.size() - 1, true};
        profile.emplace_back(i, std::move(tiers), self);
    }
    if (marriage)
        return Game::marriage(params.men, params.women, std::move(profile));
    return Game::roommate(std::move(profile));
}

} // namespace istab
