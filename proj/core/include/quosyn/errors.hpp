#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quosyn {

// Partiality is never reported through exceptions: an undefined evaluation,
// splice, or decode comes back as an empty optional.  Exceptions are reserved
// for contract violations: feeding an expression to an operation whose
// language does not contain it (membership_error), or handing an operation
// structurally unacceptable input (input_error, parse_error).

struct membership_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : input_error {
  parse_error(const std::string& what, std::size_t offset)
      : input_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

}  // namespace quosyn
