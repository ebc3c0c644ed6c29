#include "fcancel/fuchs.hpp"

#include <algorithm>

#include "fcancel/falling.hpp"

namespace fcancel {

FuchsianSystem FuchsianSystem::make(unsigned m, std::vector<Rat> gammas, std::vector<MatQ> residues,
                                    bool augmented) {
  FuchsianSystem sys;
  sys.m = m;
  sys.augmented = augmented;
  if (gammas.size() != residues.size()) {
    throw Error(Errc::DimensionMismatch, "pole count differs from residue count");
  }
  for (std::size_t i = 0; i < gammas.size(); ++i)
    for (std::size_t j = i + 1; j < gammas.size(); ++j)
      if (gammas[i] == gammas[j]) throw Error(Errc::InvalidArgument, "poles must be distinct");
  const std::size_t d = augmented ? m + 1 : m;
  for (const MatQ& a : residues) {
    if (a.rows() != d || a.cols() != d) throw Error(Errc::DimensionMismatch, "residue has the wrong size");
    if (augmented)
      for (std::size_t j = 0; j < d; ++j)
        if (a(0, j) != 0) throw Error(Errc::InvalidArgument, "augmented residue must have a zero first row");
  }
  sys.T_poly = UniPoly::constant(1);
  for (const Rat& g : gammas) sys.T_poly = sys.T_poly * UniPoly::linear(g);
  sys.gammas = std::move(gammas);
  sys.residues = std::move(residues);
  return sys;
}

// ---------------------------------------------------------------------------
// PolyMat

PolyMat PolyMat::identity(std::size_t n) {
  PolyMat out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = UniPoly::constant(1);
  return out;
}

PolyMat PolyMat::from(const MatQ& a) {
  PolyMat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = UniPoly::constant(a(i, j));
  return out;
}

PolyMat PolyMat::transpose() const {
  PolyMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

PolyMat PolyMat::derivative() const {
  PolyMat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i].derivative();
  return out;
}

Nat PolyMat::coefficient_denominator() const {
  Nat acc = 1;
  for (const UniPoly& p : a_)
    for (const Rat& c : p.coeffs()) absorb_denominator(acc, c);
  return acc;
}

PolyMat& PolyMat::operator+=(const PolyMat& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::DimensionMismatch, "polynomial matrix sum shape");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

PolyMat operator-(const PolyMat& a, const PolyMat& b) { return a + Rat(-1) * b; }

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "polynomial matrix product shape");
  PolyMat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      if (a(i, l).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, l) * b(l, j);
    }
  return out;
}

PolyMat operator*(const UniPoly& p, const PolyMat& a) {
  PolyMat out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = p * a.a_[i];
  return out;
}

PolyMat operator*(const Rat& s, const PolyMat& a) {
  PolyMat out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = s * a.a_[i];
  return out;
}

// ---------------------------------------------------------------------------
// Q^[n]

namespace {

RatFunMat zero_ratfun(std::size_t n) { return RatFunMat(n, std::vector<RatFun>(n)); }

RatFunMat identity_ratfun(std::size_t n) {
  RatFunMat out = zero_ratfun(n);
  for (std::size_t i = 0; i < n; ++i) out[i][i] = RatFun(UniPoly::constant(1));
  return out;
}

RatFunMat mul(const RatFunMat& a, const RatFunMat& b) {
  const std::size_t n = a.size();
  RatFunMat out = zero_ratfun(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

RatFunMat transpose(const RatFunMat& a) {
  RatFunMat out = zero_ratfun(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[j][i] = a[i][j];
  return out;
}

RatFunMat derivative(const RatFunMat& a) {
  RatFunMat out = a;
  for (auto& row : out)
    for (auto& x : row) x = x.derivative();
  return out;
}

RatFunMat add(RatFunMat a, const RatFunMat& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
  return a;
}

// prod_{j != skip} (z - gamma_j), and the full product when skip is out of range.
UniPoly pole_product(const std::vector<Rat>& gammas, std::size_t skip) {
  UniPoly out = UniPoly::constant(1);
  for (std::size_t j = 0; j < gammas.size(); ++j)
    if (j != skip) out = out * UniPoly::linear(gammas[j]);
  return out;
}

// One step of T^n X_n = T (T^{n-1} X_{n-1})' - (n-1) T' T^{n-1} X_{n-1} + [product with TQ].
PolyMat cleared_step(const UniPoly& t, const UniPoly& dt, const PolyMat& prev, unsigned n, const PolyMat& product) {
  PolyMat out = t * prev.derivative();
  if (n > 1) out = out - (Rat(n - 1) * (dt * prev));
  return out + product;
}

}  // namespace

RatFunMat q_matrix(const FuchsianSystem& sys) {
  const std::size_t d = sys.dim();
  RatFunMat out = zero_ratfun(d);
  for (std::size_t i = 0; i < sys.gammas.size(); ++i) {
    const UniPoly den = UniPoly::linear(sys.gammas[i]);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (sys.residues[i](r, c) != 0) out[r][c] += RatFun(UniPoly::constant(sys.residues[i](r, c)), den);
  }
  return out;
}

PolyMat tq_matrix(const FuchsianSystem& sys) {
  const std::size_t d = sys.dim();
  PolyMat out(d, d);
  for (std::size_t i = 0; i < sys.gammas.size(); ++i) {
    out += pole_product(sys.gammas, i) * PolyMat::from(sys.residues[i]);
  }
  return out;
}

std::vector<PolyMat> qn_recurrence_range(const FuchsianSystem& sys, unsigned k) {
  const PolyMat tq = tq_matrix(sys);
  const UniPoly dt = sys.T_poly.derivative();
  std::vector<PolyMat> out{PolyMat::identity(sys.dim())};
  for (unsigned n = 1; n <= k; ++n) {
    const PolyMat& prev = out.back();
    out.push_back(cleared_step(sys.T_poly, dt, prev, n, prev * tq));
  }
  return out;
}

PolyMat qn_recurrence(const FuchsianSystem& sys, unsigned n) { return qn_recurrence_range(sys, n).back(); }

RatFunMat qn_rational(const FuchsianSystem& sys, unsigned n) {
  const RatFunMat q = q_matrix(sys);
  RatFunMat cur = identity_ratfun(sys.dim());
  for (unsigned i = 1; i <= n; ++i) cur = add(derivative(cur), mul(cur, q));
  return cur;
}

PolyMat qn_via_brackets(const FuchsianSystem& sys, unsigned n) {
  const std::size_t d = sys.dim();
  std::vector<MatQ> transposed;
  for (const MatQ& a : sys.residues) transposed.push_back(a.transpose());
  if (transposed.empty()) return n == 0 ? PolyMat::identity(d) : PolyMat(d, d);
  BracketTable table(transposed);
  PolyMat out(d, d);
  for (const BracketKey& key : compositions(n, transposed.size())) {
    UniPoly weight = UniPoly::constant(1);
    for (std::size_t i = 0; i < key.size(); ++i) weight = weight * pow(UniPoly::linear(sys.gammas[i]), n - key[i]);
    out += weight * PolyMat::from(table.get(key));
  }
  return out.transpose();
}

RatFunMat operator_power_identity(const FuchsianSystem& sys, unsigned n) {
  const RatFunMat qt = transpose(q_matrix(sys));
  RatFunMat cur = identity_ratfun(sys.dim());
  for (unsigned i = 1; i <= n; ++i) cur = add(derivative(cur), mul(qt, cur));
  return cur;
}

bool commuting_check(const std::vector<MatQ>& mats) {
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      if (!commutes(mats[i], mats[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Certificates

std::optional<CommutingBoundData> commuting_bound_data(const FuchsianSystem& sys) {
  if (!commuting_check(sys.residues)) return std::nullopt;
  CommutingBoundData data;
  std::vector<Rat> eigenvalues;
  for (const MatQ& a : sys.residues) {
    SpectralData sd;
    try {
      sd = spectral(a);
    } catch (const Error& e) {
      if (e.code() == Errc::IrrationalSpectrum) return std::nullopt;
      throw;
    }
    data.t_product *= sd.t1 * sd.t2;
    data.r_sum += std::max(sd.r_max, 1u) - 1;
    data.r_max = std::max(data.r_max, sd.r_max);
    eigenvalues.insert(eigenvalues.end(), sd.eigenvalues.begin(), sd.eigenvalues.end());
  }
  data.b = common_denominator(eigenvalues);
  for (const Rat& g : sys.gammas) data.q *= denominator(g);
  return data;
}

Nat commuting_bound(const CommutingBoundData& data, unsigned long k) {
  Nat qk;
  mpz_pow_ui(qk.get_mpz_t(), data.q.get_mpz_t(), k);
  return data.t_product * qk * scalar_bound(data.b, k, data.r_sum + 1);
}

std::vector<CancellationCertificate> certify_system_upto(const FuchsianSystem& sys, unsigned long k_max,
                                                         unsigned digits) {
  if (k_max < 1) throw Error(Errc::InvalidArgument, "k must be at least 1");
  const std::vector<PolyMat> range = qn_recurrence_range(sys, static_cast<unsigned>(k_max));
  const auto data = commuting_bound_data(sys);
  std::optional<ReportedReal> asym;
  if (data) {
    asym = ReportedReal::from(Real(Nat(data->q * data->b), digits) *
                              exp(chi(data->b, digits) + Real(static_cast<long>(data->r_max) - 1, digits)));
  }
  std::vector<CancellationCertificate> out;
  Nat psi = 1;
  for (unsigned n = 0; n <= k_max; ++n) {
    psi = lcm(psi, (make_rat(1, factorial(n)) * range[n]).coefficient_denominator());
    if (n == 0) continue;
    CancellationCertificate cert;
    cert.k = n;
    cert.psi_k = psi;
    if (data) {
      cert.bound_k = commuting_bound(*data, n);
      cert.asymptotic_constant = asym;
    }
    finalize(cert, digits);
    out.push_back(std::move(cert));
  }
  return out;
}

CancellationCertificate certify_system(const FuchsianSystem& sys, unsigned long k, unsigned digits) {
  return certify_system_upto(sys, k, digits).back();
}

Nat operator_psi(const FuchsianSystem& sys, unsigned long k, unsigned degree_cap) {
  const PolyMat tq_t = tq_matrix(sys).transpose();
  const UniPoly dt = sys.T_poly.derivative();
  const std::size_t d = sys.dim();
  Nat psi = 1;
  for (unsigned deg = 0; deg <= degree_cap; ++deg) {
    PolyMat cur = UniPoly::monomial(1, deg) * PolyMat::identity(d);
    for (unsigned n = 1; n <= k; ++n) {
      cur = cleared_step(sys.T_poly, dt, cur, n, tq_t * cur);
      psi = lcm(psi, (make_rat(1, factorial(n)) * cur).coefficient_denominator());
    }
  }
  return psi;
}

bool operator_identity_24(const FuchsianSystem& sys, unsigned n, unsigned degree_cap) {
  if (!commuting_check(sys.residues)) throw Error(Errc::NotCommuting, "residues do not commute");
  const PolyMat tq_t = tq_matrix(sys).transpose();
  const UniPoly dt = sys.T_poly.derivative();
  const std::size_t d = sys.dim();
  const std::size_t s = sys.residues.size();
  std::vector<std::vector<MatQ>> deltas;
  for (const MatQ& a : sys.residues) deltas.push_back(matrix_delta_range(a.transpose(), n));
  const Rat inv_fact = make_rat(1, factorial(n));

  for (unsigned deg = 0; deg <= degree_cap; ++deg) {
    PolyMat lhs = UniPoly::monomial(1, deg) * PolyMat::identity(d);
    for (unsigned j = 1; j <= n; ++j) lhs = cleared_step(sys.T_poly, dt, lhs, j, tq_t * lhs);
    lhs = inv_fact * lhs;

    PolyMat rhs(d, d);
    for (const BracketKey& key : compositions(n, s + 1)) {
      const unsigned n0 = key[0];
      if (n0 > deg) continue;
      UniPoly weight = UniPoly::monomial(Rat(binomial(deg, n0)), deg - n0);
      MatQ coeff = MatQ::identity(d);
      for (std::size_t i = 0; i < s; ++i) {
        weight = weight * pow(UniPoly::linear(sys.gammas[i]), n - key[i + 1]);
        coeff = coeff * deltas[i][key[i + 1]];
      }
      rhs += weight * PolyMat::from(coeff);
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

namespace {

UniPoly nth_derivative(UniPoly f, unsigned n) {
  for (unsigned i = 0; i < n; ++i) f = f.derivative();
  return f;
}

}  // namespace

bool scalar_identity_14(const Rat& lambda, unsigned n, const UniPoly& f) {
  return scalar_identity_16({lambda}, {Rat(0)}, n, f);
}

bool scalar_identity_16(const std::vector<Rat>& lambdas, const std::vector<Rat>& gammas, unsigned n,
                        const UniPoly& f) {
  if (lambdas.size() != gammas.size()) throw Error(Errc::DimensionMismatch, "one lambda per pole");
  const std::size_t s = lambdas.size();
  RatFun coeff;
  for (std::size_t i = 0; i < s; ++i) coeff += RatFun(UniPoly::constant(lambdas[i]), UniPoly::linear(gammas[i]));
  RatFun lhs(f);
  for (unsigned j = 0; j < n; ++j) lhs = lhs.derivative() + coeff * lhs;

  RatFun rhs;
  const Nat n_fact = factorial(n);
  for (const BracketKey& key : compositions(n, s + 1)) {
    Nat denom = factorial(key[0]);
    Rat scalar = 1;
    UniPoly pole_den = UniPoly::constant(1);
    for (std::size_t i = 0; i < s; ++i) {
      denom *= factorial(key[i + 1]);
      scalar *= falling(lambdas[i], key[i + 1]);
      pole_den = pole_den * pow(UniPoly::linear(gammas[i]), key[i + 1]);
    }
    scalar *= make_rat(n_fact, denom);
    if (scalar == 0) continue;
    rhs += RatFun(scalar * nth_derivative(f, key[0]), pole_den);
  }
  return lhs == rhs;
}

}  // namespace fcancel
