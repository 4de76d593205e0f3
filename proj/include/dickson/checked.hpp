#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dickson {

using Nat = std::uint64_t;

// Violated precondition, guard rail, or broken internal invariant.
struct ContractError : std::logic_error {
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// All arithmetic on bounds is checked: a result that does not fit in 64 bits
// is an error, never a wrapped value (a wrapped value would fabricate bounds).

inline Nat checked_add(Nat a, Nat b, const char* what) {
  if (b > std::numeric_limits<Nat>::max() - a) {
    throw std::overflow_error(std::string(what) + ": " + std::to_string(a) +
                              " + " + std::to_string(b) + " exceeds 64 bits");
  }
  return a + b;
}

inline Nat checked_mul(Nat a, Nat b, const char* what) {
  if (a != 0 && b > std::numeric_limits<Nat>::max() / a) {
    throw std::overflow_error(std::string(what) + ": " + std::to_string(a) +
                              " * " + std::to_string(b) + " exceeds 64 bits");
  }
  return a * b;
}

}  // namespace dickson
