#pragma once

#include <stdexcept>
#include <string>

namespace rhombic {

// Malformed input: bad permutation, non-reduced word, invalid tiling, bad JSON.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration would exceed the desk-scale size limits.
class GuardExceeded : public std::length_error {
 public:
  explicit GuardExceeded(const std::string& what) : std::length_error(what) {}
};

/// Largest Coxeter length accepted by the exhaustive enumerations.
inline constexpr int kMaxEnumerationLength = 20;

}  // namespace rhombic
