#pragma once

#include <stdexcept>
#include <string>

namespace cardiac4d {

// Error taxonomy mirrors the CLI exit-code contract:
//   UsageError -> 1, DataError (and subclasses) -> 2, PipelineError -> 3.

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Distinct I/O failure classes, kept separate so callers and tests can tell
// them apart.
class FormatError : public DataError {
 public:
  using DataError::DataError;
};

class IntegrityError : public DataError {
 public:
  using DataError::DataError;
};

class TruncatedFileError : public DataError {
 public:
  using DataError::DataError;
};

class LabelRangeError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace cardiac4d
