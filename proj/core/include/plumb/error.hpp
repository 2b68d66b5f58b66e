#pragma once

#include <stdexcept>
#include <string>

namespace plumb {

// All recoverable failures (parse errors, contract violations on inputs)
// are reported through this type.  Internal invariant breakage uses
// internal_error so callers can tell the two apart.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace plumb
