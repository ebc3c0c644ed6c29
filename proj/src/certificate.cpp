#include "fcancel/certificate.hpp"

namespace fcancel {

void finalize(CancellationCertificate& cert, unsigned digits) {
  if (cert.psi_k < 1) throw Error(Errc::InvalidArgument, "psi_k must be positive");
  cert.divides = cert.bound_k.has_value() && divides(cert.psi_k, *cert.bound_k);
  Real ratio = log(Real(cert.psi_k, digits));
  if (cert.k > 0) ratio /= Real(static_cast<long>(cert.k), digits);
  cert.log_ratio_per_k = ReportedReal::from(ratio);
}

}  // namespace fcancel
