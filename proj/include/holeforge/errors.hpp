#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace holeforge {

/// Malformed user input (graph text, parameters below their minimum).
class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class Graph6Error : public InputError
{
public:
    Graph6Error(const std::string & what, std::size_t offset) :
        InputError(what + " at byte " + std::to_string(offset)), offset_(offset)
    {
    }

    auto offset() const -> std::size_t { return offset_; }

private:
    std::size_t offset_;
};

/// A configured size cap was exceeded; the computation was not attempted.
class CapExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed.
class InvariantViolation : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace holeforge
