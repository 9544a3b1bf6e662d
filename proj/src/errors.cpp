#include "invol/errors.hpp"

#include <sstream>

namespace invol {

namespace {

std::string at_point(const std::string& message, Point p) {
  std::ostringstream os;
  os << message << " at " << p;
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error("syntax error at offset " + std::to_string(offset) + ": " + message), offset_(offset), detail_(message) {}

EvaluationError::EvaluationError(Point where, const std::string& message)
    : Error(at_point(message, where)), where_(where) {}

SingularMatrixError::SingularMatrixError(double det)
    : Error([det] {
        std::ostringstream os;
        os << "singular matrix (det = " << det << ")";
        return os.str();
      }()),
      det_(det) {}

DegeneracyError::DegeneracyError(Point witness, double det, const std::string& message)
    : Error([&] {
        std::ostringstream os;
        os << message << " (det = " << det << ") at " << witness;
        return os.str();
      }()),
      witness_(witness),
      det_(det) {}

InversionError::InversionError(Point last_iterate, double residual, const std::string& message)
    : Error([&] {
        std::ostringstream os;
        os << message << " (last iterate " << last_iterate << ", residual " << residual << ")";
        return os.str();
      }()),
      last_(last_iterate),
      residual_(residual) {}

}  // namespace invol
