// errors.hpp
// * Error categories shared by the library and the CLI.

#ifndef FO2ALT_ERRORS_HPP
#define FO2ALT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fo2alt {

/// Malformed or contradictory input (bad schema, unknown letter, violated
/// precondition). CLI exit code 1.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured budget or size cap was exceeded. CLI exit code 2.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal consistency assertion failed. This must never fire on valid
/// inputs; it indicates a construction bug rather than a user mistake.
struct invariant_error : std::logic_error {
  explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace fo2alt

#endif  // FO2ALT_ERRORS_HPP
