#pragma once

#include <istab/errors.hpp>
#include <istab/model.hpp>

#include <string>
#include <string_view>

namespace istab {

/// Reads the instance format:
///
///     # comment
///     roommate <n>            | marriage <m> <w>
///     <id>: <entry> <entry> ...
///
/// Entries are player ids, `self`, or a parenthesised tie group `( a b self )`,
/// listed in decreasing preference. Every player needs exactly one line.
/// Throws ParseError.
Game parse_instance(std::string_view text);

/// Inverse of parse_instance. `self` is written only when it is not in its
/// default position below every listed player.
std::string format_instance(const Game & game);

} // namespace istab
