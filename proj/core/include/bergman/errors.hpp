#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed labels, schema violations, violated preconditions.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// An enumeration was requested on an instance larger than the configured
/// budget allows. Search budgets are not reported this way; exhausting a
/// search budget is an ordinary result, not an exception.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace bergman
