#include <istab/stability.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace istab {

std::string_view name(Concept c)
{
    switch (c) {
    case Concept::IR: return "IR";
    case Concept::NS: return "NS";
    case Concept::IS: return "IS";
    case Concept::CNS: return "CNS";
    case Concept::CIS: return "CIS";
    case Concept::Core: return "CORE";
    case Concept::StrictCore: return "STRICT_CORE";
    }
    return "?";
}

std::optional<Concept> parse_concept(std::string_view text)
{
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::replace(s.begin(), s.end(), '_', '-');
    if (s == "ir") return Concept::IR;
    if (s == "ns") return Concept::NS;
    if (s == "is") return Concept::IS;
    if (s == "cns") return Concept::CNS;
    if (s == "cis") return Concept::CIS;
    if (s == "core" || s == "c") return Concept::Core;
    if (s == "strict-core" || s == "sc") return Concept::StrictCore;
    return std::nullopt;
}

namespace {

bool needs_target_consent(Concept c) { return c == Concept::IS || c == Concept::CIS; }
bool needs_partner_consent(Concept c) { return c == Concept::CNS || c == Concept::CIS; }

bool individual_concept(Concept c)
{
    return c == Concept::NS || c == Concept::IS || c == Concept::CNS || c == Concept::CIS;
}

// Consent of everyone affected when `mover` leaves its partner for `target`.
bool consents(const Game & game, const Matching & matching, PlayerId mover, PlayerId target, Concept c)
{
    PlayerId partner = matching.partner(mover);
    if (needs_partner_consent(c) && partner != mover && !game.weakly_prefers(partner, partner, mover))
        return false;
    if (needs_target_consent(c) && target != kAlone && !game.acceptable(target, mover))
        return false;
    return true;
}

} // namespace

std::optional<PlayerId> find_ir_violation(const Game & game, const Matching & matching)
{
    for (PlayerId i = 1; i <= game.size(); ++i)
        if (!game.acceptable(i, matching.partner(i)))
            return i;
    return std::nullopt;
}

bool is_individually_rational(const Game & game, const Matching & matching)
{
    return !find_ir_violation(game, matching);
}

std::optional<DeviationWitness> find_deviation(const Game & game, const Matching & matching, Concept stability)
{
    if (!individual_concept(stability))
        throw std::invalid_argument("find_deviation supports NS, IS, CNS and CIS only");
    const int n = game.size();
    std::vector<PlayerId> singles;
    for (PlayerId j = 1; j <= n; ++j)
        if (matching.is_single(j))
            singles.push_back(j);

    for (PlayerId i = 1; i <= n; ++i) {
        const PlayerId current = matching.partner(i);
        const int current_level = game.level(i, current);
        std::optional<DeviationWitness> best;
        int best_level = 0;
        auto consider = [&](PlayerId target, int level) {
            if (level >= current_level)
                return;
            if (best && best_level <= level)
                return;
            if (!consents(game, matching, i, target, stability))
                return;
            best = DeviationWitness{i, target, stability};
            best_level = level;
        };
        if (current != i)
            consider(kAlone, game.level(i, i));
        for (PlayerId j : singles)
            if (j != i)
                consider(j, game.level(i, j));
        if (best)
            return best;
    }
    return std::nullopt;
}

std::optional<PairBlockWitness> find_pair_block(const Game & game, const Matching & matching, bool strict)
{
    if (auto i = find_ir_violation(game, matching))
        return PairBlockWitness{*i, *i};
    const int n = game.size();
    for (PlayerId i = 1; i <= n; ++i) {
        const int li = game.level(i, matching.partner(i));
        for (PlayerId j = i + 1; j <= n; ++j) {
            if (matching.partner(i) == j)
                continue;
            const int lj = game.level(j, matching.partner(j));
            const int ij = game.level(i, j);
            const int ji = game.level(j, i);
            bool blocks = strict ? (ij <= li && ji <= lj && (ij < li || ji < lj)) : (ij < li && ji < lj);
            if (blocks)
                return PairBlockWitness{i, j};
        }
    }
    return std::nullopt;
}

bool is_stable(const Game & game, const Matching & matching, Concept stability)
{
    switch (stability) {
    case Concept::IR: return is_individually_rational(game, matching);
    case Concept::Core: return !find_pair_block(game, matching, false);
    case Concept::StrictCore: return !find_pair_block(game, matching, true);
    default: return !find_deviation(game, matching, stability);
    }
}

bool is_valid_deviation(const Game & game, const Matching & matching, const DeviationWitness & w)
{
    const int n = game.size();
    if (w.mover < 1 || w.mover > n || w.target < 0 || w.target > n || w.target == w.mover)
        return false;
    if (!individual_concept(w.stability))
        return false;
    const PlayerId current = matching.partner(w.mover);
    if (w.target == kAlone && current == w.mover)
        return false;
    if (w.target != kAlone && !matching.is_single(w.target))
        return false;
    const PlayerId destination = w.target == kAlone ? w.mover : w.target;
    if (!game.strictly_prefers(w.mover, destination, current))
        return false;
    return consents(game, matching, w.mover, w.target, w.stability);
}

Matching apply_deviation(const Matching & matching, const DeviationWitness & w)
{
    Matching next = matching;
    if (w.target == kAlone)
        next.separate(w.mover);
    else
        next.pair(w.mover, w.target);
    return next;
}

} // namespace istab
