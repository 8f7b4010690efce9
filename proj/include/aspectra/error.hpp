#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aspectra {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed word or rep-spec text; `position` is the 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A generator index or rank outside the admissible range.
class RankError : public Error {
public:
    using Error::Error;
};

class MoveNotApplicable : public Error {
public:
    using Error::Error;
};

class RelationNotApplicable : public Error {
public:
    using Error::Error;
};

class NotATranslation : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class InvalidRepresentation : public Error {
public:
    using Error::Error;
};

class FeasibilityExceeded : public Error {
public:
    using Error::Error;
};

class ProbeSetMismatch : public Error {
public:
    using Error::Error;
};

} // namespace aspectra
