#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fliptoep {

/// Syntax or structural error in the symbol DSL, with byte position.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string msg, size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  size_t position() const { return position_; }

private:
  size_t position_;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(std::string msg, double achieved)
      : std::runtime_error(msg + " (achieved error estimate " + std::to_string(achieved) + ")"),
        achieved_(achieved) {}

  double achieved() const { return achieved_; }

private:
  double achieved_;
};

/// A numerical routine failed to converge or detected an internal inconsistency.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace fliptoep
