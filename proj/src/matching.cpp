#include <istab/matching.hpp>

#include "text_util.hpp"

#include <sstream>
#include <stdexcept>

namespace istab {

Matching Matching::singletons(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative player count");
    std::vector<PlayerId> partner(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        partner[static_cast<std::size_t>(i)] = i;
    return Matching(std::move(partner));
}

Matching Matching::from_partners(const std::vector<PlayerId> & partner)
{
    const int n = static_cast<int>(partner.size());
    std::vector<PlayerId> map(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        PlayerId p = partner[static_cast<std::size_t>(i - 1)];
        if (p < 1 || p > n)
            throw std::invalid_argument("partner of " + std::to_string(i) + " out of range");
        map[static_cast<std::size_t>(i)] = p;
    }
    for (int i = 1; i <= n; ++i)
        if (map[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] != i)
            throw std::invalid_argument("partner map is not an involution at " + std::to_string(i));
    return Matching(std::move(map));
}

Matching Matching::from_pairs(int n, const std::vector<std::pair<PlayerId, PlayerId>> & pairs)
{
    Matching m = singletons(n);
    for (auto [i, j] : pairs) {
        if (i < 1 || i > n || j < 1 || j > n || i == j)
            throw std::invalid_argument("invalid pair");
        if (!m.is_single(i) || !m.is_single(j))
            throw std::invalid_argument("player in two pairs");
        m.pair(i, j);
    }
    return m;
}

void Matching::pair(PlayerId i, PlayerId j)
{
    separate(i);
    separate(j);
    partner_[static_cast<std::size_t>(i)] = j;
    partner_[static_cast<std::size_t>(j)] = i;
}

void Matching::separate(PlayerId i)
{
    PlayerId p = partner(i);
    partner_[static_cast<std::size_t>(p)] = p;
    partner_[static_cast<std::size_t>(i)] = i;
}

std::vector<std::pair<PlayerId, PlayerId>> Matching::pairs() const
{
    std::vector<std::pair<PlayerId, PlayerId>> result;
    for (PlayerId i = 1; i <= size(); ++i)
        if (partner(i) > i)
            result.emplace_back(i, partner(i));
    return result;
}

std::size_t MatchingHash::operator()(const Matching & m) const noexcept
{
    std::uint64_t h = 1469598103934665603ULL;
    for (PlayerId i = 1; i <= m.size(); ++i) {
        h ^= static_cast<std::uint64_t>(m.partner(i));
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

Matching parse_matching(std::string_view text, int n)
{
    std::vector<PlayerId> partner(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> first_line(static_cast<std::size_t>(n) + 1, 0);

    auto player = [&](const detail::Token & token, int line) {
        auto value = detail::to_integer(token.text);
        if (!value)
            throw ParseError(ParseErrorKind::Syntax, line, token.column,
                             "expected a player id, got '" + std::string(token.text) + "'");
        if (*value < 1 || *value > n)
            throw ParseError(ParseErrorKind::OutOfRange, line, token.column,
                             "player " + std::string(token.text) + " does not exist");
        return static_cast<PlayerId>(*value);
    };
    auto assign = [&](PlayerId i, PlayerId p, const detail::Token & token, int line) {
        auto & slot = partner[static_cast<std::size_t>(i)];
        if (slot == p)
            throw ParseError(ParseErrorKind::RepeatedPlayer, line, token.column,
                             "player " + std::to_string(i) + " already placed on line "
                                 + std::to_string(first_line[static_cast<std::size_t>(i)]));
        if (slot != 0)
            throw ParseError(ParseErrorKind::NonInvolution, line, token.column,
                             "player " + std::to_string(i) + " already has partner "
                                 + (slot == i ? std::string("-") : std::to_string(slot)));
        slot = p;
        first_line[static_cast<std::size_t>(i)] = line;
    };

    for (const auto & line : detail::content_lines(text)) {
        auto tokens = detail::tokenize(line.text);
        if (tokens.size() != 2)
            throw ParseError(ParseErrorKind::Syntax, line.number, 0, "expected 'i j' or 'i -'");
        PlayerId i = player(tokens[0], line.number);
        if (tokens[1].text == "-") {
            assign(i, i, tokens[0], line.number);
            continue;
        }
        PlayerId j = player(tokens[1], line.number);
        if (i == j)
            throw ParseError(ParseErrorKind::RepeatedPlayer, line.number, tokens[1].column,
                             "player " + std::to_string(i) + " paired with itself; write 'i -'");
        assign(i, j, tokens[0], line.number);
        assign(j, i, tokens[1], line.number);
    }
    for (PlayerId i = 1; i <= n; ++i)
        if (partner[static_cast<std::size_t>(i)] == 0)
            throw ParseError(ParseErrorKind::MissingPlayer, 0, 0, "player " + std::to_string(i) + " not placed");
    partner.erase(partner.begin());
    return Matching::from_partners(partner);
}

std::string format_matching(const Matching & matching)
{
    std::ostringstream out;
    for (PlayerId i = 1; i <= matching.size(); ++i) {
        PlayerId p = matching.partner(i);
        if (p == i)
            out << i << " -\n";
        else if (p > i)
            out << i << ' ' << p << '\n';
    }
    return out.str();
}

namespace {

bool visit_from(Matching & m, std::vector<bool> & decided, PlayerId next, int n,
                const std::function<bool(const Matching &)> & visit)
{
    while (next <= n && decided[static_cast<std::size_t>(next)])
        ++next;
    if (next > n)
        return visit(m);
    decided[static_cast<std::size_t>(next)] = true;
    for (PlayerId j = next + 1; j <= n; ++j) {
        if (decided[static_cast<std::size_t>(j)])
            continue;
        decided[static_cast<std::size_t>(j)] = true;
        m.pair(next, j);
        bool more = visit_from(m, decided, next + 1, n, visit);
        m.separate(next);
        decided[static_cast<std::size_t>(j)] = false;
        if (!more)
            return false;
    }
    bool more = visit_from(m, decided, next + 1, n, visit);
    decided[static_cast<std::size_t>(next)] = false;
    return more;
}

} // namespace

void for_each_matching(int n, const std::function<bool(const Matching &)> & visit)
{
    Matching m = Matching::singletons(n);
    std::vector<bool> decided(static_cast<std::size_t>(n) + 1, false);
    visit_from(m, decided, 1, n, visit);
}

std::vector<Matching> enumerate_matchings(int n)
{
    std::vector<Matching> all;
    all.reserve(static_cast<std::size_t>(involution_number(n)));
    for_each_matching(n, [&](const Matching & m) {
        all.push_back(m);
        return true;
    });
    return all;
}

std::uint64_t involution_number(int n)
{
    std::uint64_t prev = 1, cur = 1;
    for (int k = 2; k <= n; ++k) {
        std::uint64_t next = cur + static_cast<std::uint64_t>(k - 1) * prev;
        prev = cur;
        cur = next;
    }
    return n < 0 ? 0 : cur;
}

} // namespace istab
