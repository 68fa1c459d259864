#pragma once

#include <stdexcept>
#include <string>

namespace dtc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (element tokens, vectors, triples, matrices).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Mathematically invalid request: division by zero, odd length, rank-deficient rows.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search would exceed its configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The equivalence search hit its node cap before reaching a verdict.
class Undecided : public Error {
 public:
  using Error::Error;
};

}  // namespace dtc
