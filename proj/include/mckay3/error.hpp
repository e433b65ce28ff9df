#pragma once

#include <stdexcept>
#include <string>

namespace mckay3 {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

// Input that parses but does not describe a valid object (bad character,
// singular lattice, out-of-range parameter, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// The Dixon-Schneider eigenspace split did not converge.
class SplitFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace mckay3
