#pragma once

#include <stdexcept>
#include <string>

namespace vsgap {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller handed us something outside an operation's precondition.
struct invalid_input : error {
    explicit invalid_input(const std::string& msg) : error(msg) {}
};

// An internal invariant that construction should have made unreachable.
struct invariant_error : error {
    explicit invariant_error(const std::string& msg) : error(msg) {}
};

// quadratic_step at nu(z) == nu(w): no monomial transform remains.
struct chain_terminated : error {
    explicit chain_terminated(const std::string& msg) : error(msg) {}
};

// Exact monomial division hit a term the divisor does not divide.
struct not_divisible : error {
    explicit not_divisible(const std::string& msg) : error(msg) {}
};

// A configured cap (term count, DP size, tuple enumeration) was exceeded.
struct resource_limit : error {
    explicit resource_limit(const std::string& msg) : error(msg) {}
};

}  // namespace vsgap
