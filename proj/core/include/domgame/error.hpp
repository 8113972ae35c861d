#pragma once

#include <stdexcept>
#include <string>

namespace domgame {

/// Invalid arguments or malformed input handed to the library.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search hit its configured node budget before producing an exact value.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace domgame
