#pragma once

#include <stdexcept>
#include <string>

namespace tgp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct MalformedPresentation : Error {
    using Error::Error;
};

struct UnknownEdge : Error {
    explicit UnknownEdge(const std::string& label) : Error("unknown edge: " + label) {}
};

struct TooLarge : Error {
    using Error::Error;
};

struct VariableMismatch : Error {
    using Error::Error;
};

struct MissingVariable : Error {
    explicit MissingVariable(const std::string& var) : Error("missing variable: " + var) {}
};

struct InsufficientAdmissiblePoints : Error {
    using Error::Error;
};

struct SingularSystem : Error {
    using Error::Error;
};

struct LoopPattern : Error {
    using Error::Error;
};

struct NotAValuation : Error {
    using Error::Error;
};

struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& id) : Error("unknown identity id: " + id) {}
};

}  // namespace tgp
