#pragma once

#include <cstddef>
#include <vector>

namespace istab {

/// Players are numbered densely from 1.
using PlayerId = int;

enum class GameKind { Roommate, Marriage };

/// Position of the owner's own singleton inside a preference list. When
/// `tied` is set the owner is indifferent between being alone and
/// `tiers[tier]`; otherwise being alone sits strictly between
/// `tiers[tier - 1]` and `tiers[tier]` (tier == tiers.size() means below
/// every listed player).
struct SelfPosition {
    std::size_t tier = 0;
    bool tied = false;

    friend bool operator==(const SelfPosition &, const SelfPosition &) = default;
};

/// A weak order over the other players, most preferred tier first, with the
/// owner's singleton placed somewhere in it. Unlisted players form one
/// implicit tier strictly below everything listed (and below being alone).
class PreferenceList {
public:
    PreferenceList() = default;

    /// Being alone sits strictly below every listed tier.
    PreferenceList(PlayerId owner, std::vector<std::vector<PlayerId>> tiers);
    PreferenceList(PlayerId owner, std::vector<std::vector<PlayerId>> tiers, SelfPosition self);

    PlayerId owner() const { return owner_; }
    const std::vector<std::vector<PlayerId>> & tiers() const { return tiers_; }
    SelfPosition self_position() const { return self_; }

    // Levels are comparable ranks: lower is better.
    static int tier_level(std::size_t tier) { return 2 * static_cast<int>(tier) + 1; }
    int self_level() const;
    int unlisted_level() const { return 2 * static_cast<int>(tiers_.size()) + 2; }

    /// Same list with the self position moved strictly below any tier it was tied with.
    PreferenceList raised() const;

    friend bool operator==(const PreferenceList &, const PreferenceList &) = default;

private:
    PlayerId owner_ = 0;
    std::vector<std::vector<PlayerId>> tiers_;
    SelfPosition self_;
};

/// A roommate or marriage game. Marriage games number men 1..m and women
/// m+1..m+w; no list may contain a same-sex player.
class Game {
public:
    static Game roommate(std::vector<PreferenceList> profile);
    static Game marriage(int men, int women, std::vector<PreferenceList> profile);

    int size() const { return n_; }
    GameKind kind() const { return kind_; }
    bool is_marriage() const { return kind_ == GameKind::Marriage; }
    int men() const { return men_; }
    int women() const { return n_ - men_; }
    bool is_man(PlayerId i) const { return is_marriage() && i <= men_; }
    /// Roommate games have no sides: any two distinct players qualify.
    bool opposite_sides(PlayerId i, PlayerId j) const;

    const PreferenceList & preferences(PlayerId i) const { return profile_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<PreferenceList> & profile() const { return profile_; }

    /// Rank of `partner` in `who`'s order; `partner == who` means being alone.
    int level(PlayerId who, PlayerId partner) const
    {
        return levels_[static_cast<std::size_t>(who) * stride_ + static_cast<std::size_t>(partner)];
    }

    bool weakly_prefers(PlayerId who, PlayerId a, PlayerId b) const { return level(who, a) <= level(who, b); }
    bool strictly_prefers(PlayerId who, PlayerId a, PlayerId b) const { return level(who, a) < level(who, b); }
    /// Pairing with `partner` is at least as good as being alone.
    bool acceptable(PlayerId who, PlayerId partner) const { return weakly_prefers(who, partner, who); }
    bool likes(PlayerId who, PlayerId partner) const { return strictly_prefers(who, partner, who); }

    friend bool operator==(const Game & a, const Game & b)
    {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.men_ == b.men_ && a.profile_ == b.profile_;
    }

private:
    Game(GameKind kind, int men, std::vector<PreferenceList> profile);

    GameKind kind_ = GameKind::Roommate;
    int n_ = 0;
    int men_ = 0;
    std::vector<PreferenceList> profile_;
    std::size_t stride_ = 1;
    std::vector<int> levels_;
};

/// Acceptability (weakly above being alone) is symmetric.
bool is_mutual(const Game & game);

/// Every player finds every eligible partner (everyone else, or everyone of
/// the opposite sex) acceptable.
bool has_no_unacceptability(const Game & game);

/// Every player tied with being alone becomes strictly acceptable; all other
/// comparisons are unchanged.
Game raise_preferences(const Game & game);

} // namespace istab
