#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace transversal {

// Malformed input: bad file, violated precondition, out-of-range parameter.
// CLI exit code 2.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A randomized stage failed to reach an accepted state (retry/resample budget
// spent), or no solution exists. Carries the pipeline stage that failed.
// CLI exit code 1.
class SolveError : public std::runtime_error {
public:
  SolveError(std::string stage, const std::string& msg)
      : std::runtime_error("[" + stage + "] " + msg), stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }

private:
  std::string stage_;
};

// Exploration budget exceeded (oracle node budget). Distinct from "does not
// exist". CLI exit code 3.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace transversal
