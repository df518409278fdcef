#pragma once

#include <stdexcept>
#include <string>

namespace stickbreak {

/// Two generated points compared equal; signals a generator bug.
struct DuplicatePoint : std::logic_error {
    using std::logic_error::logic_error;
};

/// Window width or interval length outside the valid range for the prefix.
struct InvalidWindow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MalformedBits : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InsufficientData : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace stickbreak
