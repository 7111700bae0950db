#include "pblock/errors.hpp"

namespace pblock {

std::string_view to_string(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::NonGroup: return "NonGroup";
  case ErrorKind::ClosureOverflow: return "ClosureOverflow";
  case ErrorKind::NotNormal: return "NotNormal";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::NoSolution: return "NoSolution";
  case ErrorKind::ContextMismatch: return "ContextMismatch";
  case ErrorKind::NotUnit: return "NotUnit";
  case ErrorKind::HypothesisViolated: return "HypothesisViolated";
  case ErrorKind::NotNormalizing: return "NotNormalizing";
  case ErrorKind::FactorizationFailed: return "FactorizationFailed";
  case ErrorKind::NoCoboundary: return "NoCoboundary";
  case ErrorKind::NoUnitIntertwiner: return "NoUnitIntertwiner";
  case ErrorKind::RankTooLarge: return "RankTooLarge";
  case ErrorKind::InputError: return "InputError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &what)
  : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{}

} // namespace pblock
