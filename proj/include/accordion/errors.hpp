#pragma once

#include <stdexcept>
#include <string>

namespace accordion {

enum class ErrorKind {
    ParseError,
    BadLabel,
    CrossingPair,
    BoundaryInput,
    NotAccordion,
    NotMaximal,
    NotMember,
    CyclicGraph,
    NoDecomposition,
    RankDeficient,
    EmptyReference,
    NotNested,
    DfanUnavailable,
    Unbounded,
    NotInvariant,
    NotRotation,
    WrongDimension,
};

const char* kind_name(ErrorKind kind);

// Every failure the library reports on bad input carries one of the kinds
// above, so the CLI can map it to an exit code without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorKind::ParseError, "at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace accordion
