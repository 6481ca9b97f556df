#pragma once

#include <stdexcept>
#include <string>

namespace tfix {

/// Malformed input or violated precondition on user-supplied data.
class ValidationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A configured desk-scale limit (player count, parameter k, ...) was exceeded.
class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Broken internal invariant; indicates a solver bug rather than bad input.
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace tfix
