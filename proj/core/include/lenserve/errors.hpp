#pragma once

#include <stdexcept>
#include <string>

namespace lenserve {

// A value or lens broke a typing contract it promised to uphold. These are
// defects, never user input problems; the engine answers them with 500.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two boundaries that had to agree (composition, reparametrisation) did not.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or non-conforming JSON text.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by endpoint handlers for inputs outside their domain (division by
// zero and the like). Mapped to HTTP 400.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A server cannot be turned into a running service: a URI grammar, codec or
// state action could not be derived for one of its containers.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lenserve
