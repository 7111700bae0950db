#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pblock {

enum class ErrorKind {
  NonGroup,
  ClosureOverflow,
  NotNormal,
  DimensionMismatch,
  NoSolution,
  ContextMismatch,
  NotUnit,
  HypothesisViolated,
  NotNormalizing,
  FactorizationFailed,
  NoCoboundary,
  NoUnitIntertwiner,
  RankTooLarge,
  InputError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the harness, the CLI) can map it without parsing messages.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what);

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace pblock
