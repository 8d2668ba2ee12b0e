#pragma once

#include <stdexcept>
#include <string>

namespace gorlab {

// Raised on bad input to an operation (dimension mismatch, non-prime
// characteristic, inhomogeneous data where graded data is required, ...).
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency check. These guard invariants that constructors and
// algorithms promise (associativity of a multiplication table, d∘d = 0, ...);
// a failure is a bug, not bad user input.
#define GORLAB_CHECK(cond, msg)                                              \
    do {                                                                     \
        if (!(cond)) throw ::gorlab::error(std::string("invariant: ") + msg); \
    } while (0)

} // namespace gorlab
