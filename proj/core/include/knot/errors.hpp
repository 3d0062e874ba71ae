#pragma once

#include <stdexcept>
#include <string>

namespace knot {

enum class ErrorKind {
    SyntaxError,
    NotDoubleOccurrence,
    InconsistentOU,
    MixedDecoration,
    Undecorated,
    OddGap,
    NotRealizable,
    SignMismatch,
    MissingOU,
    MissingSigns,
    NotReduced,
    NotAlternating,
    NotATangle,
    NotABundle,
    WouldSplit,
    SplitsIntoLink,
    InvalidOpportunity,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace knot
