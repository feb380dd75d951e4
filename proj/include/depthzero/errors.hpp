#pragma once

#include <stdexcept>
#include <string>

namespace depthzero {

// Parameters outside an operation's domain (bad q, index out of range, x not dividing m, ...).
struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its configured cap.
struct resource_limit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A census with no members where a ratio was requested.
struct empty_census : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A checked mathematical postcondition failed. Seeing one of these means a bug
// or a counterexample, never bad input.
struct postcondition_violation : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require_param(bool ok, const std::string& what) {
    if (!ok) throw invalid_parameter(what);
}

inline void ensure(bool ok, const std::string& what) {
    if (!ok) throw postcondition_violation(what);
}

}  // namespace depthzero
