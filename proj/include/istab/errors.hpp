#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace istab {

enum class ParseErrorKind {
    Syntax,
    DuplicateEntry,
    SelfReference,
    OutOfRange,
    SameSex,
    MissingPlayer,
    RepeatedPlayer,
    NonInvolution,
};

std::string_view to_string(ParseErrorKind kind);

/// Malformed instance, matching or graph text. Line and column are 1-based;
/// column 0 means the whole line.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, int column, const std::string & message);

    ParseErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    ParseErrorKind kind_;
    int line_;
    int column_;
};

/// An operation was called on an input outside its domain (e.g. an incomplete
/// game handed to a complete-lists algorithm, or a brute-force cap exceeded).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A guarantee that should hold by construction did not. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace istab
