#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "invol/linalg2.hpp"

namespace invol {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed map text; `offset` is a byte offset into the source string.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

/// Raised when a map cannot be evaluated at a point (division by zero, sqrt
/// of a negative number).
class EvaluationError : public Error {
 public:
  EvaluationError(Point where, const std::string& message);
  Point where() const noexcept { return where_; }

 private:
  Point where_;
};

class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(double det);
  double det() const noexcept { return det_; }

 private:
  double det_;
};

/// Jacobian determinant vanishes or changes sign over a sampled region.
class DegeneracyError : public Error {
 public:
  DegeneracyError(Point witness, double det, const std::string& message);
  Point witness() const noexcept { return witness_; }
  double det() const noexcept { return det_; }

 private:
  Point witness_;
  double det_;
};

class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotApplicableError : public Error {
 public:
  using Error::Error;
};

class UnknownEntryError : public Error {
 public:
  using Error::Error;
};

/// Newton inversion of the standard map failed; carries the last iterate.
class InversionError : public Error {
 public:
  InversionError(Point last_iterate, double residual, const std::string& message);
  Point last_iterate() const noexcept { return last_; }
  double residual() const noexcept { return residual_; }

 private:
  Point last_;
  double residual_;
};

}  // namespace invol
