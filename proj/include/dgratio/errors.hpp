#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dgratio {

/// Malformed user input (distance set, block notation, CLI range).
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A configured size cap (expansion length, state count, arc count) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value was requested exactly but only bounds are known.
class InexactError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Search work budget (node count or wall clock) ran out.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dgratio
