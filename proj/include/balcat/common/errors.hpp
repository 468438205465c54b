#pragma once

#include <stdexcept>
#include <string>

namespace balcat {

/// Operands live over different ground fields.
class FieldMismatch : public std::invalid_argument {
 public:
  explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Shapes of matrices/vectors/objects do not fit together.
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Objects are graded by different groups, or modules over different algebras.
class StructureMismatch : public std::invalid_argument {
 public:
  explicit StructureMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Input data violates an axiom (group, algebra, module, grading).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition was not met; the operation refuses to answer.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace balcat
