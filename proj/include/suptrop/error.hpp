#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace suptrop {

enum class ErrorCode {
  DimensionMismatch,
  NotADAG,
  ParseError,
  BadScalar,
  InvalidArgument,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotADAG: return "NotADAG";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadScalar: return "BadScalar";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error(ErrorCode::DimensionMismatch,
              "dimensions " + std::to_string(lhs) + " and " + std::to_string(rhs) + " differ"),
        lhs_(lhs),
        rhs_(rhs) {}

  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

 private:
  std::size_t lhs_;
  std::size_t rhs_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message) : Error(ErrorCode::InvalidArgument, message) {}
};

class BadScalar : public Error {
 public:
  explicit BadScalar(const std::string& message) : Error(ErrorCode::BadScalar, message) {}
};

}  // namespace suptrop
