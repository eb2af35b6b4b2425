#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace equicut {

enum class ErrorCode {
  Parse,
  NegativeRadicand,
  DivisionByZero,
  FactorizationBound,
  InvalidArgument,
  Degenerate,
  LengthMismatch,
  Io,
};

const char* to_string(ErrorCode code);

// Single exception type for the core; the C API maps `code()` onto its status
// enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), code_(code), position_(position) {}

  ErrorCode code() const { return code_; }
  // Character offset for parse errors, npos otherwise.
  std::size_t position() const { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  ErrorCode code_;
  std::size_t position_;
};

}  // namespace equicut
