#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopspan {

// Argument exceeds what the object was built to handle.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of the operation.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally invalid input (malformed tree, mismatched map, bad weights).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

}  // namespace hopspan
