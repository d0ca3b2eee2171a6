#pragma once

#include <stdexcept>
#include <string>

namespace betapack {

// Malformed user input: bad graph text, bad fraction, invalid parameters.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exhaustive search was asked to run above the configured vertex cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A solver produced a result that fails its own postcondition.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace betapack
