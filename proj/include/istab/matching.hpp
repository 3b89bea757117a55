#pragma once

#include <istab/errors.hpp>
#include <istab/model.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace istab {

/// A partition of players 1..n into pairs and singletons, kept as a
/// self-inverse partner map (partner(i) == i for a singleton).
class Matching {
public:
    Matching() = default;

    static Matching singletons(int n);
    /// `partner[i - 1]` is i's partner. Throws std::invalid_argument unless it is an involution on 1..n.
    static Matching from_partners(const std::vector<PlayerId> & partner);
    /// Throws std::invalid_argument on overlapping or out-of-range pairs.
    static Matching from_pairs(int n, const std::vector<std::pair<PlayerId, PlayerId>> & pairs);

    int size() const { return static_cast<int>(partner_.size()) - 1; }
    PlayerId partner(PlayerId i) const { return partner_[static_cast<std::size_t>(i)]; }
    bool is_single(PlayerId i) const { return partner(i) == i; }

    /// Pairs i and j, leaving their previous partners single.
    void pair(PlayerId i, PlayerId j);
    /// Makes i single, leaving its previous partner single too.
    void separate(PlayerId i);

    /// Pairs as (i, j) with i < j, in increasing i.
    std::vector<std::pair<PlayerId, PlayerId>> pairs() const;

    friend bool operator==(const Matching &, const Matching &) = default;
    friend auto operator<=>(const Matching &, const Matching &) = default;

private:
    explicit Matching(std::vector<PlayerId> partner) : partner_(std::move(partner)) {}

    std::vector<PlayerId> partner_{0}; // index 0 unused
};

struct MatchingHash {
    std::size_t operator()(const Matching & m) const noexcept;
};

/// Reads `i j` (pair, i < j) and `i -` (singleton) lines; every player must
/// appear exactly once. Throws ParseError.
Matching parse_matching(std::string_view text, int n);
std::string format_matching(const Matching & matching);

/// Visits every matching on 1..n exactly once: the smallest undecided player
/// is paired with each larger undecided player in turn, then left single.
/// The visitor returns false to stop early.
void for_each_matching(int n, const std::function<bool(const Matching &)> & visit);
std::vector<Matching> enumerate_matchings(int n);

/// Number of matchings on n players, I(n) = I(n-1) + (n-1) I(n-2).
std::uint64_t involution_number(int n);

} // namespace istab
