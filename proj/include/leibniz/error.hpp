#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

class LeibnizError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (scalars, algebra files, catalog product strings).
class ParseError : public LeibnizError {
 public:
  using LeibnizError::LeibnizError;
};

/// Arithmetic that has no value: division by zero, missing square root of -1,
/// mixing scalars from different fields.
class FieldError : public LeibnizError {
 public:
  using LeibnizError::LeibnizError;
};

class DimensionError : public LeibnizError {
 public:
  using LeibnizError::LeibnizError;
};

/// The requested computation is not available for this field or input class.
class Unsupported : public LeibnizError {
 public:
  using LeibnizError::LeibnizError;
};

/// An exhaustive enumeration would exceed its configured budget.
class InfeasibleEnumeration : public LeibnizError {
 public:
  using LeibnizError::LeibnizError;
};

}  // namespace leibniz
