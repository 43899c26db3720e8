#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace momentlab {

// Malformed text input (scalars, polynomials, permutations, catalogs).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An enumeration cap was hit; the answer is unknown, not wrong.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Root finding or continuation failed to meet its tolerances.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace momentlab
