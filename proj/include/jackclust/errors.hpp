#pragma once

#include <stdexcept>
#include <string>

namespace jackclust {

// A denominator or triangular pivot vanished at a specialized parameter value.
class PoleError : public std::runtime_error {
 public:
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Arithmetic between elements of two different fraction fields.
class FieldMismatch : public std::invalid_argument {
 public:
  explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A division that must be exact by construction left a remainder.
class InternalDivisionError : public std::logic_error {
 public:
  explicit InternalDivisionError(const std::string& what) : std::logic_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jackclust
