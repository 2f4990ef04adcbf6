#pragma once

#include <stdexcept>
#include <string>

namespace fano {

// Malformed user input, such as bad syntax or an unknown id.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A rotation system or flag graph that breaks a structural invariant.
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// A request that is well formed but outside the supported domain,
// such as an enumeration exceeding its cap.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fano
