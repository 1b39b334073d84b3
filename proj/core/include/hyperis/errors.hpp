#pragma once

#include <stdexcept>
#include <string>

namespace hyperis {

/// Bad argument values: parameter ranges, malformed structures, size mismatches.
struct InvalidParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive computation was requested above the configured vertex cap.
struct InstanceTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A sign (or comparison) could not be certified even at the maximum
/// working precision.
struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The root scanner exhausted its grid refinements without resolving a
/// consistent bracket structure.
struct BracketFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rejection sampling hit its retry cap without producing a valid instance.
struct GenerationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (graph / hypergraph files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hyperis
