#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weaken {

// A formula mentions a variable the given model does not assign.
class UnboundVariableError : public std::runtime_error {
 public:
  explicit UnboundVariableError(const std::string& variable_name)
      : std::runtime_error("unbound variable: " + variable_name),
        variable_name_(variable_name) {}

  const std::string& variable_name() const noexcept { return variable_name_; }

 private:
  std::string variable_name_;
};

// A user-supplied formula uses the reserved auxiliary-variable prefix.
class ReservedNameError : public std::runtime_error {
 public:
  explicit ReservedNameError(const std::string& name)
      : std::runtime_error("reserved variable name: " + name), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// The solver exceeded its decision cap.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what_happened)
      : std::runtime_error(what_happened) {}
};

// An exhaustive operation was asked to handle more variables than it supports.
class TooManyVariablesError : public std::runtime_error {
 public:
  TooManyVariablesError(std::size_t count, std::size_t limit)
      : std::runtime_error("too many variables: " + std::to_string(count) +
                           " (limit " + std::to_string(limit) + ")"),
        count_(count),
        limit_(limit) {}

  std::size_t count() const noexcept { return count_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t count_;
  std::size_t limit_;
};

// An internal equivalence self-check failed; always an implementation bug.
class InternalEquivalenceError : public std::logic_error {
 public:
  explicit InternalEquivalenceError(const std::string& what_happened)
      : std::logic_error(what_happened) {}
};

}  // namespace weaken
