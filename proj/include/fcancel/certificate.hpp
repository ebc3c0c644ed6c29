#pragma once

#include <optional>
#include <string>

#include "fcancel/arith.hpp"

namespace fcancel {

/// A real value as printed, so reports round-trip exactly through JSON.
struct ReportedReal {
  std::string value;
  unsigned digits = kDefaultDigits;

  static ReportedReal from(const Real& x) { return {x.str(), x.digits()}; }
  friend bool operator==(const ReportedReal&, const ReportedReal&) = default;
};

struct CancellationCertificate {
  unsigned long k = 0;
  /// Measured lcm of all denominators at levels n <= k.
  Nat psi_k = 1;
  /// Absent for measurement-only certificates.
  std::optional<Nat> bound_k;
  /// bound_k mod psi_k == 0; false when there is no bound.
  bool divides = false;
  ReportedReal log_ratio_per_k;
  std::optional<ReportedReal> asymptotic_constant;

  friend bool operator==(const CancellationCertificate&, const CancellationCertificate&) = default;
};

/// Fills divides and log_ratio_per_k from psi_k and bound_k.
void finalize(CancellationCertificate& cert, unsigned digits = kDefaultDigits);

}  // namespace fcancel
