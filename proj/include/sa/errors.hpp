#pragma once

#include <stdexcept>
#include <string>

namespace sa {

// Thrown when two independent computation routes disagree (internal oracle).
// The CLI maps this to exit code 3.
struct CrossCheckError : std::runtime_error {
    explicit CrossCheckError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sa
