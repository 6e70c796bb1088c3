#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace nse3d {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class FileFormatError : public Error {
 public:
  using Error::Error;
};

/// Inner fixed-point iteration of an implicit step hit its iteration cap.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, int iterations, double residual)
      : Error(what), iterations_(iterations), residual_(residual) {}
  int iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  int iterations_;
  double residual_;
};

/// A closed-form estimate was requested outside its admissible range.
class RestrictionViolated : public Error {
 public:
  using Error::Error;
};

/// The comparison ODE was evaluated at or beyond its blow-up time.
class BlowUp : public Error {
 public:
  using Error::Error;
};

/// No positive timestep satisfies a constraint of the requested variant.
class Infeasible : public Error {
 public:
  Infeasible(const std::string& what, std::string constraint)
      : Error(what), constraint_(std::move(constraint)) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

/// A run configuration fails its up-front smallness or timestep checks.
class InfeasibleConfig : public Error {
 public:
  InfeasibleConfig(const std::string& what, std::string constraint)
      : Error(what), constraint_(std::move(constraint)) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

/// Malformed configuration text: carries the line (0 when not known) and key.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, int line = 0, std::string key = {})
      : Error(what), line_(line), key_(std::move(key)) {}
  int line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  int line_;
  std::string key_;
};

}  // namespace nse3d
