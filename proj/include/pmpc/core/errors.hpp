#pragma once

#include <stdexcept>
#include <string>

namespace pmpc {

/// A state or input handed to the model contains non-finite or otherwise
/// unusable components.
class InvalidStateError : public std::runtime_error {
public:
  explicit InvalidStateError(const std::string& what) : std::runtime_error(what) {}
};

/// A root-finding step (axis time synchronization) found no admissible root.
class NoRootError : public std::runtime_error {
public:
  explicit NoRootError(const std::string& what) : std::runtime_error(what) {}
};

/// Track geometry is degenerate (e.g. coincident consecutive waypoints).
class DegenerateTrackError : public std::runtime_error {
public:
  explicit DegenerateTrackError(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario file could not be parsed. Carries a source location.
class ScenarioParseError : public std::runtime_error {
public:
  ScenarioParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Scenario parsed but violates a model/solver invariant.
class ScenarioValidationError : public std::runtime_error {
public:
  explicit ScenarioValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pmpc
