#pragma once

#include <stdexcept>
#include <string>

namespace argon {

/// Invalid framework construction (duplicate name, unknown endpoint, bad identifier).
class FrameworkError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input text that does not follow the declared file format.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A transformer handed to fixpoint iteration turned out not to be monotone.
class NotMonotoneError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Exhaustive work refused because it is past the configured budget.
class BudgetError : public std::length_error {
public:
  using std::length_error::length_error;
};

} // namespace argon
