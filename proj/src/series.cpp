#include "fcancel/series.hpp"

#include <algorithm>

namespace fcancel {

SeriesQ::SeriesQ(unsigned order, std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

SeriesQ SeriesQ::truncate(unsigned order) const {
  std::vector<Rat> v(c_.begin(), c_.begin() + std::min<std::size_t>(order + 1, c_.size()));
  return SeriesQ(order, std::move(v));
}

SeriesQ SeriesQ::shift_up() const {
  SeriesQ out(order());
  for (unsigned n = 1; n <= order(); ++n) out.c_[n] = c_[n - 1];
  return out;
}

SeriesQ SeriesQ::derivative() const {
  const unsigned top = order() == 0 ? 0 : order() - 1;
  SeriesQ out(top);
  for (unsigned n = 1; n <= order(); ++n) out.c_[n - 1] = c_[n] * n;
  return out;
}

SeriesQ operator+(const SeriesQ& a, const SeriesQ& b) {
  const unsigned order = std::min(a.order(), b.order());
  SeriesQ out(order);
  for (unsigned n = 0; n <= order; ++n) out[n] = a[n] + b[n];
  return out;
}

SeriesQ operator-(const SeriesQ& a, const SeriesQ& b) {
  const unsigned order = std::min(a.order(), b.order());
  SeriesQ out(order);
  for (unsigned n = 0; n <= order; ++n) out[n] = a[n] - b[n];
  return out;
}

SeriesQ operator*(const SeriesQ& a, const SeriesQ& b) {
  const unsigned order = std::min(a.order(), b.order());
  SeriesQ out(order);
  for (unsigned i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

SeriesQ operator*(const Rat& s, const SeriesQ& a) {
  SeriesQ out(a.order());
  for (unsigned n = 0; n <= a.order(); ++n) out[n] = s * a[n];
  return out;
}

SeriesQ divide(const SeriesQ& a, const SeriesQ& b) {
  if (b[0] == 0) throw Error(Errc::DivideByZeroSeries, "constant term of divisor is zero");
  const unsigned order = std::min(a.order(), b.order());
  const Rat inv = Rat(1) / b[0];
  SeriesQ out(order);
  for (unsigned n = 0; n <= order; ++n) {
    Rat acc = a[n];
    for (unsigned j = 1; j <= n; ++j) acc -= b[j] * out[n - j];
    out[n] = acc * inv;
  }
  return out;
}

SeriesQ delta_series(const SeriesQ& f) {
  SeriesQ out(f.order());
  for (unsigned n = 1; n <= f.order(); ++n) out[n] = f[n] * n;
  return out;
}

}  // namespace fcancel
