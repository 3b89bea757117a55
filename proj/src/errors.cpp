#include <istab/errors.hpp>

namespace istab {

std::string_view to_string(ParseErrorKind kind)
{
    switch (kind) {
    case ParseErrorKind::Syntax: return "syntax error";
    case ParseErrorKind::DuplicateEntry: return "duplicate entry";
    case ParseErrorKind::SelfReference: return "self reference";
    case ParseErrorKind::OutOfRange: return "id out of range";
    case ParseErrorKind::SameSex: return "same-sex entry";
    case ParseErrorKind::MissingPlayer: return "missing player";
    case ParseErrorKind::RepeatedPlayer: return "repeated player";
    case ParseErrorKind::NonInvolution: return "not an involution";
    }
    return "parse error";
}

namespace {

std::string describe(ParseErrorKind kind, int line, int column, const std::string & message)
{
    std::string where = "line " + std::to_string(line);
    if (column > 0)
        where += ", column " + std::to_string(column);
    return where + ": " + std::string(to_string(kind)) + ": " + message;
}

} // namespace

ParseError::ParseError(ParseErrorKind kind, int line, int column, const std::string & message)
    : std::runtime_error(describe(kind, line, column, message)), kind_(kind), line_(line), column_(column)
{
}

} // namespace istab
