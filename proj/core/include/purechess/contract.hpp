#pragma once

#include <stdexcept>
#include <string>

namespace purechess {

/// Thrown when a caller breaks an operation's precondition or a value's
/// invariant (out-of-range coordinate, two pieces on one square, illegal
/// move handed to `move`, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool condition, const char* what) {
    if (!condition)
        throw ContractViolation(what);
}

inline void require(bool condition, const std::string& what) {
    if (!condition)
        throw ContractViolation(what);
}

}  // namespace purechess
