#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fcancel {

enum class Errc {
  Parse,
  InvalidArgument,
  NotPrime,
  DivideByZeroSeries,
  IrrationalSpectrum,
  RepeatedRootMinPoly,
  SingularMatrix,
  DimensionMismatch,
  NotCommuting,
  InvalidBeta,
  RepeatedBeta,
  ConditionsFailed,
  EpsilonOutOfRange,
  XiZero,
  LimitExceeded,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fcancel
