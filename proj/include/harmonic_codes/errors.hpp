#pragma once

#include <stdexcept>
#include <string>

namespace harmonic_codes {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematical / precondition failures. The CLI maps these to exit status 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ConstructionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class StructureError : public DomainError {
 public:
  using DomainError::DomainError;
};

class AntipodalityError : public StructureError {
 public:
  using StructureError::StructureError;
};

class EmptyDomainError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Unreadable or malformed files. The CLI maps these to exit status 2.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace harmonic_codes
