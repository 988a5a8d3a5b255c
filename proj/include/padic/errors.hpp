#pragma once

#include <stdexcept>

namespace padic {

// Mathematically invalid request (wrong residue class, non-unit division,
// malformed group element, ...). The CLI maps these to exit code 4.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAUnit : public DomainError {
 public:
  using DomainError::DomainError;
};

class WrongResidueClass : public DomainError {
 public:
  using DomainError::DomainError;
};

class ModulusMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularDenominator : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInGroup : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInImage : public DomainError {
 public:
  using DomainError::DomainError;
};

class MalformedElement : public DomainError {
 public:
  using DomainError::DomainError;
};

class OddDegree : public DomainError {
 public:
  using DomainError::DomainError;
};

class IndexOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

class BadVariant : public DomainError {
 public:
  using DomainError::DomainError;
};

class IncoherentSequence : public DomainError {
 public:
  using DomainError::DomainError;
};

// An enumeration passed its configured element or visit cap. CLI exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace padic
