#include <istab/instance_io.hpp>

#include "text_util.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace istab {

namespace {

using detail::Token;

[[noreturn]] void fail(ParseErrorKind kind, int line, int column, const std::string & message)
{
    throw ParseError(kind, line, column, message);
}

struct Header {
    GameKind kind;
    int men = 0;
    int n = 0;
};

int parse_count(const Token & token, int line)
{
    auto value = detail::to_integer(token.text);
    if (!value || *value < 0 || *value > 1'000'000)
        fail(ParseErrorKind::Syntax, line, token.column, "expected a player count, got '" + std::string(token.text) + "'");
    return static_cast<int>(*value);
}

Header parse_header(const detail::Line & line)
{
    auto tokens = detail::tokenize(line.text);
    if (tokens.empty())
        fail(ParseErrorKind::Syntax, line.number, 0, "missing header");
    if (tokens[0].text == "roommate") {
        if (tokens.size() != 2)
            fail(ParseErrorKind::Syntax, line.number, 0, "expected 'roommate <n>'");
        return {GameKind::Roommate, 0, parse_count(tokens[1], line.number)};
    }
    if (tokens[0].text == "marriage") {
        if (tokens.size() != 3)
            fail(ParseErrorKind::Syntax, line.number, 0, "expected 'marriage <m> <w>'");
        int men = parse_count(tokens[1], line.number);
        int women = parse_count(tokens[2], line.number);
        return {GameKind::Marriage, men, men + women};
    }
    fail(ParseErrorKind::Syntax, line.number, tokens[0].column,
         "expected 'roommate' or 'marriage', got '" + std::string(tokens[0].text) + "'");
}

class ListParser {
public:
    ListParser(const Header & header, int line) : header_(header), line_(line) {}

    PreferenceList parse(PlayerId owner, const std::vector<Token> & tokens)
    {
        owner_ = owner;
        seen_.assign(static_cast<std::size_t>(header_.n) + 1, false);
        std::vector<std::vector<PlayerId>> tiers;
        SelfPosition self{0, false};
        bool self_seen = false;
        bool in_group = false;
        bool group_has_self = false;
        std::vector<PlayerId> group;

        auto place_self = [&](const Token & token, bool tied) {
            if (self_seen)
                fail(ParseErrorKind::DuplicateEntry, line_, token.column, "'self' appears twice");
            self_seen = true;
            self = {tiers.size(), tied};
        };

        for (const auto & token : tokens) {
            if (token.text == "(") {
                if (in_group)
                    fail(ParseErrorKind::Syntax, line_, token.column, "nested tie group");
                in_group = true;
                group.clear();
                group_has_self = false;
            }
            else if (token.text == ")") {
                if (!in_group)
                    fail(ParseErrorKind::Syntax, line_, token.column, "unbalanced ')'");
                in_group = false;
                if (group.empty() && !group_has_self)
                    fail(ParseErrorKind::Syntax, line_, token.column, "empty tie group");
                if (group.empty())
                    continue; // "( self )" is plain self
                if (group_has_self)
                    self = {tiers.size(), true};
                tiers.push_back(group);
            }
            else if (token.text == "self") {
                if (in_group) {
                    if (self_seen)
                        fail(ParseErrorKind::DuplicateEntry, line_, token.column, "'self' appears twice");
                    self_seen = true;
                    group_has_self = true;
                    self = {tiers.size(), false};
                }
                else
                    place_self(token, false);
            }
            else {
                PlayerId id = parse_entry(token);
                if (in_group)
                    group.push_back(id);
                else
                    tiers.push_back({id});
            }
        }
        if (in_group)
            fail(ParseErrorKind::Syntax, line_, 0, "unterminated tie group");
        if (!self_seen)
            self = {tiers.size(), false};
        return PreferenceList(owner, std::move(tiers), self);
    }

private:
    PlayerId parse_entry(const Token & token)
    {
        auto value = detail::to_integer(token.text);
        if (!value)
            fail(ParseErrorKind::Syntax, line_, token.column, "unexpected token '" + std::string(token.text) + "'");
        if (*value < 1 || *value > header_.n)
            fail(ParseErrorKind::OutOfRange, line_, token.column, "player " + std::string(token.text) + " does not exist");
        auto id = static_cast<PlayerId>(*value);
        if (header_.kind == GameKind::Marriage && ((id <= header_.men) == (owner_ <= header_.men)))
            fail(ParseErrorKind::SameSex, line_, token.column,
                 "player " + std::to_string(owner_) + " lists same-sex player " + std::to_string(id));
        if (id == owner_)
            fail(ParseErrorKind::SelfReference, line_, token.column, "use 'self' to place the own singleton");
        if (seen_[static_cast<std::size_t>(id)])
            fail(ParseErrorKind::DuplicateEntry, line_, token.column, "player " + std::to_string(id) + " listed twice");
        seen_[static_cast<std::size_t>(id)] = true;
        return id;
    }

    const Header & header_;
    int line_;
    PlayerId owner_ = 0;
    std::vector<bool> seen_;
};

} // namespace

Game parse_instance(std::string_view text)
{
    auto lines = detail::content_lines(text);
    if (lines.empty())
        fail(ParseErrorKind::Syntax, 1, 0, "empty instance");
    Header header = parse_header(lines.front());

    std::vector<PreferenceList> profile(static_cast<std::size_t>(header.n));
    std::vector<bool> defined(static_cast<std::size_t>(header.n) + 1, false);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto & line = lines[li];
        auto colon = line.text.find(':');
        if (colon == std::string_view::npos)
            fail(ParseErrorKind::Syntax, line.number, 0, "expected '<id>: <entries>'");
        auto head = detail::tokenize(line.text.substr(0, colon));
        if (head.size() != 1)
            fail(ParseErrorKind::Syntax, line.number, 1, "expected a single player id before ':'");
        auto owner = detail::to_integer(head[0].text);
        if (!owner)
            fail(ParseErrorKind::Syntax, line.number, head[0].column, "expected a player id");
        if (*owner < 1 || *owner > header.n)
            fail(ParseErrorKind::OutOfRange, line.number, head[0].column, "player " + std::string(head[0].text) + " does not exist");
        auto id = static_cast<PlayerId>(*owner);
        if (defined[static_cast<std::size_t>(id)])
            fail(ParseErrorKind::Syntax, line.number, head[0].column, "second list for player " + std::to_string(id));
        defined[static_cast<std::size_t>(id)] = true;

        auto tokens = detail::tokenize(line.text.substr(colon + 1), static_cast<int>(colon) + 1, "()");
        profile[static_cast<std::size_t>(id - 1)] = ListParser(header, line.number).parse(id, tokens);
    }
    for (PlayerId i = 1; i <= header.n; ++i)
        if (!defined[static_cast<std::size_t>(i)])
            fail(ParseErrorKind::MissingPlayer, lines.back().number, 0, "no preference line for player " + std::to_string(i));

    if (header.kind == GameKind::Marriage)
        return Game::marriage(header.men, header.n - header.men, std::move(profile));
    return Game::roommate(std::move(profile));
}

std::string format_instance(const Game & game)
{
    std::ostringstream out;
    if (game.is_marriage())
        out << "marriage " << game.men() << ' ' << game.women() << '\n';
    else
        out << "roommate " << game.size() << '\n';
    for (const auto & list : game.profile()) {
        out << list.owner() << ':';
        auto self = list.self_position();
        const auto & tiers = list.tiers();
        for (std::size_t t = 0; t <= tiers.size(); ++t) {
            if (t == self.tier && !self.tied && t != tiers.size())
                out << " self";
            if (t == tiers.size())
                break;
            bool tied_self = self.tied && self.tier == t;
            if (tiers[t].size() == 1 && !tied_self) {
                out << ' ' << tiers[t].front();
                continue;
            }
            out << " (";
            for (PlayerId p : tiers[t])
                out << ' ' << p;
            if (tied_self)
                out << " self";
            out << " )";
        }
        out << '\n';
    }
    return out.str();
}

} // namespace istab
