#pragma once

#include <stdexcept>
#include <string>

namespace atfbox {

// Malformed input (edge lists, graph6 strings, representation files).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line(line) {}
    int line;
};

// An operation was called outside its contract (disconnected input,
// graph with an asteroidal triple, improper coloring, ...).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Request exceeds a hard size/search cap; the caller should lower n or kmax.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A certified construction failed its own certificate. Signals a bug,
// never a property of the input.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace atfbox
