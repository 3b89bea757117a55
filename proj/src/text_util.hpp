#pragma once

#include <charconv>
#include <optional>
#include <string_view>
#include <vector>

namespace istab::detail {

struct Token {
    std::string_view text;
    int column; // 1-based
};

struct Line {
    int number; // 1-based
    std::string_view text;
};

/// Non-blank lines with `#` comments stripped.
inline std::vector<Line> content_lines(std::string_view text)
{
    std::vector<Line> lines;
    int number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        auto end = text.find('\n');
        auto line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.find_first_not_of(" \t") != std::string_view::npos)
            lines.push_back({number, line});
        if (end == std::string_view::npos)
            break;
    }
    return lines;
}

/// Whitespace-separated tokens; characters in `singles` always form their own token.
inline std::vector<Token> tokenize(std::string_view line, int column_offset = 0, std::string_view singles = {})
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == ' ' || c == '\t') {
            ++i;
            continue;
        }
        if (singles.find(c) != std::string_view::npos) {
            tokens.push_back({line.substr(i, 1), static_cast<int>(i) + 1 + column_offset});
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && singles.find(line[j]) == std::string_view::npos)
            ++j;
        tokens.push_back({line.substr(i, j - i), static_cast<int>(i) + 1 + column_offset});
        i = j;
    }
    return tokens;
}

inline std::optional<long long> to_integer(std::string_view s)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        return std::nullopt;
    return value;
}

} // namespace istab::detail
