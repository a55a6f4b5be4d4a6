#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fano {

/// Two classes from distinct ring presentations were combined.
class RingMismatchError : public std::logic_error {
public:
    explicit RingMismatchError(const std::string& what)
        : std::logic_error(what) {}
};

/// An operation precondition was violated by the caller.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Input data was internally inconsistent (e.g. an exact sequence that
/// cannot exist formally).
class InconsistentDataError : public std::runtime_error {
public:
    explicit InconsistentDataError(const std::string& what)
        : std::runtime_error(what) {}
};

/// Textual spec could not be parsed; carries the offending position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

/// A sweep was refused because it would enumerate too many cases.
class SweepCapError : public std::runtime_error {
public:
    SweepCapError(std::size_t count, std::size_t cap)
        : std::runtime_error("sweep would enumerate " + std::to_string(count) +
                             " cases, above the cap of " + std::to_string(cap)),
          count(count), cap(cap) {}
    std::size_t count;
    std::size_t cap;
};

} // namespace fano
