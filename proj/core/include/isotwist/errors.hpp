#pragma once

#include <stdexcept>
#include <string>

namespace isotwist {

// Rejected user input: bad rational, non-square-free d, cusp t, unknown type tag.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A broken internal invariant: table miss, tie in an argmax, precision exhaustion.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace isotwist
