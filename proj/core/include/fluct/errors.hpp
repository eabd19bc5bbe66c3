#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace fluct {

/// Compact %g rendering for diagnostics.
inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}


/// Base class for every error raised by the library. The message is
/// prefixed with the name of the module that raised it, e.g.
/// "[manybody] log-branch violation at xi=0.3".
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& message)
      : std::runtime_error("[" + module + "] " + message), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

/// Argument outside the domain of the operation (negative frequency,
/// coincident sites, pole of a model, unknown unit tag, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Quadrature, Matsubara tail or photon-cutoff convergence failure.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A matrix log or square root would cross its branch cut: the coupled
/// system has a normal mode with non-positive squared frequency.
class UnboundedSpectrumError : public Error {
 public:
  using Error::Error;
};

}  // namespace fluct
