#pragma once

#include <stdexcept>
#include <string>

namespace jtv {

/// Invalid inputs: malformed graphs, inconsistent dimensions, bad configs.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Iterative solver failed to reach its tolerance or diverged.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// File read/write failures and format violations.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jtv
