#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lzda {

/// Invalid physical parameter or scenario value; carries the offending field name.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// aCf == bCr: the lateral-acceleration zero has a vanishing denominator.
class DegenerateGeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inconsistent run configuration (step size, window, missing attack, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lzda
