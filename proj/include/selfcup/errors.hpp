#pragma once

#include <stdexcept>
#include <string>

namespace selfcup {

// Bad user input or broken preconditions (malformed data, mismatched objects).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap (group order, H^2 size, search space) was exceeded.
struct SizeError : std::runtime_error {
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

// The operation is defined but deliberately not supported for these arguments.
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace selfcup
