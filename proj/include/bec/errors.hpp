#pragma once

#include <stdexcept>
#include <string>

namespace bec {

/// Thrown when an adaptive summation or iterative solver exhausts its
/// term/iteration budget before reaching the requested tolerance.
class convergence_error : public std::runtime_error {
public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a sign-changing bracket for a root cannot be established.
class bracketing_error : public std::runtime_error {
public:
  explicit bracketing_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bec
