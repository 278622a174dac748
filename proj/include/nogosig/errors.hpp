#pragma once

#include <stdexcept>
#include <string>

namespace nogosig {

enum class ErrorCode {
  LayoutLabelClash,
  DimMismatch,
  ZeroState,
  UnknownFactor,
  BadPermutation,
  BadOverlap,
  DegeneratePair,
  DegenerateSpec,
  OutsideSpan,
  Usage,
};

const char* to_string(ErrorCode code);

/// Domain error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace nogosig
