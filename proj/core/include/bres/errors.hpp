#pragma once

#include <stdexcept>
#include <string>

namespace bres {

// Operands live in rings of different arity (or modules of different rank).
class ArityError : public std::invalid_argument {
 public:
  explicit ArityError(const std::string& what) : std::invalid_argument(what) {}
};

// An operation was handed an input outside its domain (zero polynomial,
// non-binomial, negative value, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Bad construction parameter, e.g. an odd q2.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Exponent arithmetic left the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

// A routine that requires a Groebner basis was given something else.
class NotGroebnerError : public std::invalid_argument {
 public:
  explicit NotGroebnerError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace bres
