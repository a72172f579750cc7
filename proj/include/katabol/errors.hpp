#pragma once

#include <stdexcept>
#include <string>

namespace katabol {

// Violated precondition on user-supplied data (CLI exit code 2).
struct invalid_input : std::invalid_argument {
    explicit invalid_input(const std::string& msg) : std::invalid_argument(msg) {}
};

// Broken internal invariant or failed exact-arithmetic step (CLI exit code 3).
struct arithmetic_error : std::runtime_error {
    explicit arithmetic_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace katabol
