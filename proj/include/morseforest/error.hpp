#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morseforest {

/// Invalid input or a violated precondition.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive enumeration would exceed the configured cell budget.
class GuardExceeded : public Error {
public:
    GuardExceeded(std::size_t cells, std::size_t limit)
        : Error("instance too large: " + std::to_string(cells) +
                " cells in the top two levels exceeds guard " +
                std::to_string(limit)),
          cells_(cells), limit_(limit) {}

    std::size_t cells() const noexcept { return cells_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t cells_;
    std::size_t limit_;
};

} // namespace morseforest
