#pragma once

#include <stdexcept>
#include <string>

namespace aimsyn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition.
class ValueError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file (CSV, domain, workload, zeros, trace).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A cell value not present in the attribute's category list.
class UnknownCategoryError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Model or elimination would exceed the configured memory cap.
class MemoryCapError : public Error {
 public:
  using Error::Error;
};

/// A privacy charge would exceed the ledger's total budget.
class OverspendError : public Error {
 public:
  using Error::Error;
};

}  // namespace aimsyn
