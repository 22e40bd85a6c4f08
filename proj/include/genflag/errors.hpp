#pragma once

#include <stdexcept>
#include <string>

namespace genflag {

/// Thrown on malformed or inconsistent user-supplied data (bad documents,
/// precondition violations, unsupported schema kinds). Maps to CLI exit 2.
class bad_input : public std::runtime_error {
public:
    explicit bad_input(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when an internal invariant is violated. Maps to CLI exit 3.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw bad_input(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw invariant_error(msg);
}

} // namespace genflag
