#include "fcancel/matfun.hpp"

#include <algorithm>
#include <stdexcept>

#include "fcancel/falling.hpp"

namespace fcancel {

UniPoly char_poly(const MatQ& a) {
  const std::size_t n = a.size();
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  MatQ m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -(a * m).trace() / Rat(static_cast<unsigned long>(k));
  }
  return UniPoly(std::move(c));
}

UniPoly min_poly(const MatQ& a) {
  const std::size_t n = a.size();
  std::vector<VecQ> columns;
  MatQ power = MatQ::identity(n);
  for (std::size_t d = 0; d <= n; ++d) {
    columns.push_back(power.data());
    const std::vector<VecQ> ker = kernel(MatQ::from_columns(columns, n * n));
    if (!ker.empty()) {
      // Earlier powers are independent, so the kernel is one-dimensional with
      // the last column free.
      UniPoly mp(ker.front());
      if (!divmod(char_poly(a), mp).second.is_zero()) {
        throw std::logic_error("minimal polynomial does not divide the characteristic polynomial");
      }
      return mp.monic();
    }
    power = power * a;
  }
  throw std::logic_error("no polynomial relation among the first n + 1 powers");
}

namespace {

std::vector<Nat> divisors(const Nat& n) {
  std::vector<Nat> out{1};
  if (n <= 1) return out;
  Nat rest = n;
  for (const Nat& p : prime_divisors(n)) {
    unsigned e = 0;
    while (divides(p, rest)) {
      rest /= p;
      ++e;
    }
    const std::size_t base = out.size();
    Nat pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Root> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw Error(Errc::InvalidArgument, "roots of the zero polynomial");
  std::vector<Root> out;
  std::vector<Int> c = primitive_integer_coeffs(f);
  unsigned zero_mult = 0;
  while (c.size() > 1 && c.front() == 0) {
    c.erase(c.begin());
    ++zero_mult;
  }
  if (zero_mult) out.push_back({Rat(0), zero_mult});
  UniPoly rest(std::vector<Rat>(c.begin(), c.end()));
  if (rest.degree() >= 1) {
    const std::vector<Nat> ps = divisors(abs(c.front()));
    const std::vector<Nat> qs = divisors(abs(c.back()));
    std::vector<Rat> candidates;
    for (const Nat& p : ps) {
      for (const Nat& q : qs) {
        candidates.push_back(make_rat(p, q));
        candidates.push_back(make_rat(-p, q));
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Rat& x : candidates) {
      unsigned mult = 0;
      while (rest.degree() >= 1 && rest.eval(x) == 0) {
        rest = divmod(rest, UniPoly::linear(x)).first;
        ++mult;
      }
      if (mult) out.push_back({x, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Root& l, const Root& r) { return l.value < r.value; });
  return out;
}

MatQ jordan_matrix(const std::vector<JordanBlock>& blocks) {
  std::size_t n = 0;
  for (const auto& blk : blocks) n += blk.size;
  MatQ j(n);
  std::size_t at = 0;
  for (const auto& blk : blocks) {
    for (unsigned i = 0; i < blk.size; ++i) {
      j(at + i, at + i) = blk.eigenvalue;
      if (i + 1 < blk.size) j(at + i, at + i + 1) = 1;
    }
    at += blk.size;
  }
  return j;
}

namespace {

bool extends_span(std::vector<VecQ>& span, const VecQ& v) {
  const std::size_t before = span.empty() ? 0 : rank(MatQ::from_rows(span));
  span.push_back(v);
  if (rank(MatQ::from_rows(span)) > before) return true;
  span.pop_back();
  return false;
}

// Scale a chain jointly to integral primitive vectors, with the first nonzero
// eigenvector entry positive.
void normalize_chain(std::vector<VecQ>& chain) {
  Nat den = 1;
  for (const auto& v : chain)
    for (const Rat& x : v) absorb_denominator(den, x);
  Int g = 0;
  for (auto& v : chain) {
    for (Rat& x : v) {
      x *= den;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
  }
  Rat scale = make_rat(1, g);
  for (const Rat& x : chain.front()) {
    if (x != 0) {
      if (x < 0) scale = -scale;
      break;
    }
  }
  for (auto& v : chain)
    for (Rat& x : v) x *= scale;
}

}  // namespace

SpectralData spectral(const MatQ& a) {
  const std::size_t n = a.size();
  SpectralData sd;
  sd.char_poly = char_poly(a);
  sd.min_poly = min_poly(a);
  const std::vector<Root> roots = rational_roots(sd.char_poly);
  unsigned found = 0;
  for (const Root& r : roots) found += r.multiplicity;
  if (found != n) throw Error(Errc::IrrationalSpectrum, "characteristic polynomial has a non-rational factor");

  std::vector<VecQ> columns;
  for (const Root& root : roots) {
    const Rat& lambda = root.value;
    unsigned r = 0;
    UniPoly rest = sd.min_poly;
    while (rest.degree() >= 1 && rest.eval(lambda) == 0) {
      rest = divmod(rest, UniPoly::linear(lambda)).first;
      ++r;
    }
    sd.eigenvalues.push_back(lambda);
    sd.minpoly_mults.push_back(r);
    sd.r_max = std::max(sd.r_max, r);

    const MatQ nil = shift(a, lambda);
    std::vector<MatQ> nil_pow{MatQ::identity(n)};
    for (unsigned j = 1; j <= r; ++j) nil_pow.push_back(nil_pow.back() * nil);

    std::vector<std::pair<VecQ, unsigned>> heads;
    for (unsigned j = r; j >= 1; --j) {
      std::vector<VecQ> span = kernel(nil_pow[j - 1]);
      for (const auto& [h, size] : heads) span.push_back(nil_pow[size - j] * h);
      for (const VecQ& v : kernel(nil_pow[j])) {
        if (extends_span(span, v)) heads.emplace_back(v, j);
      }
    }
    for (const auto& [h, size] : heads) {
      std::vector<VecQ> chain;
      for (unsigned i = 0; i < size; ++i) chain.push_back(nil_pow[size - 1 - i] * h);
      normalize_chain(chain);
      for (auto& v : chain) columns.push_back(std::move(v));
      sd.blocks.push_back({lambda, size});
    }
  }

  sd.jordan_T = MatQ::from_columns(columns, n);
  sd.jordan_T_inv = inverse(sd.jordan_T);
  if (a * sd.jordan_T != sd.jordan_T * jordan_matrix(sd.blocks)) {
    throw std::logic_error("Jordan decomposition failed verification");
  }
  sd.t1 = entry_denominator(sd.jordan_T);
  sd.t2 = entry_denominator(sd.jordan_T_inv);
  sd.b = common_denominator(sd.eigenvalues);
  return sd;
}

MatQ matrix_falling(const MatQ& a, unsigned long n) {
  MatQ out = MatQ::identity(a.size());
  for (unsigned long i = 0; i < n; ++i) out = out * shift(a, Rat(i));
  return out;
}

MatQ matrix_delta(const MatQ& a, unsigned long n) { return matrix_falling(a, n) * make_rat(1, factorial(n)); }

std::vector<MatQ> matrix_delta_range(const MatQ& a, unsigned long k) {
  std::vector<MatQ> out{MatQ::identity(a.size())};
  for (unsigned long n = 1; n <= k; ++n) {
    out.push_back(out.back() * shift(a, Rat(n - 1)) * make_rat(1, n));
  }
  return out;
}

MatQ jordan_block_delta(const Rat& lambda, unsigned size, unsigned long n) {
  if (size == 0) throw Error(Errc::InvalidArgument, "Jordan block size must be positive");
  const std::vector<Rat> d = delta_derivatives(lambda, n, size);
  MatQ out(size);
  for (unsigned i = 0; i < size; ++i)
    for (unsigned j = i; j < size; ++j) out(i, j) = d[j - i];
  return out;
}

bool conjugation_check(const MatQ& a, const MatQ& t, unsigned long n) {
  const MatQ t_inv = inverse(t);
  return matrix_delta(t * a * t_inv, n) == t * matrix_delta(a, n) * t_inv;
}

Nat matrix_bound(const SpectralData& sd, unsigned long k) {
  return sd.t1 * sd.t2 * scalar_bound(sd.b, k, std::max(sd.r_max, 1u));
}

std::vector<CancellationCertificate> certify_matrix_upto(const MatQ& a, unsigned long k_max, unsigned digits) {
  if (k_max < 1) throw Error(Errc::InvalidArgument, "k must be at least 1");
  const SpectralData sd = spectral(a);
  const unsigned r = std::max(sd.r_max, 1u);
  const Real asym = Real(sd.b, digits) * exp(chi(sd.b, digits) + Real(static_cast<long>(r) - 1, digits));
  std::vector<CancellationCertificate> out;
  MatQ d = MatQ::identity(a.size());
  Nat psi = 1;
  for (unsigned long n = 1; n <= k_max; ++n) {
    d = d * shift(a, Rat(n - 1)) * make_rat(1, n);
    for (const Rat& x : d.data()) absorb_denominator(psi, x);
    CancellationCertificate cert;
    cert.k = n;
    cert.psi_k = psi;
    cert.bound_k = matrix_bound(sd, n);
    cert.asymptotic_constant = ReportedReal::from(asym);
    finalize(cert, digits);
    out.push_back(std::move(cert));
  }
  return out;
}

CancellationCertificate certify_matrix(const MatQ& a, unsigned long k, unsigned digits) {
  return certify_matrix_upto(a, k, digits).back();
}

// ---------------------------------------------------------------------------
// Brackets

namespace {

std::size_t common_size(const std::vector<MatQ>& mats) {
  if (mats.empty()) throw Error(Errc::DimensionMismatch, "bracket of an empty family");
  const std::size_t n = mats.front().size();
  for (const MatQ& m : mats)
    if (m.rows() != n || m.cols() != n) throw Error(Errc::DimensionMismatch, "bracket matrices differ in size");
  return n;
}

void check_key(const std::vector<MatQ>& mats, const BracketKey& n) {
  if (n.size() != mats.size()) throw Error(Errc::DimensionMismatch, "multi-index length differs from family size");
}

}  // namespace

BracketTable::BracketTable(std::vector<MatQ> mats) : mats_(std::move(mats)), dim_(common_size(mats_)) {}

const MatQ& BracketTable::get(const BracketKey& n) {
  check_key(mats_, n);
  if (auto it = memo_.find(n); it != memo_.end()) return it->second;
  MatQ acc(dim_);
  bool base = true;
  BracketKey prev = n;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] == 0) continue;
    base = false;
    --prev[i];
    const MatQ& inner = get(prev);
    acc += shift(mats_[i], Rat(n[i] - 1)) * inner;
    ++prev[i];
  }
  if (base) acc = MatQ::identity(dim_);
  return memo_.emplace(n, std::move(acc)).first->second;
}

MatQ bracket(const std::vector<MatQ>& mats, const BracketKey& n) {
  BracketTable table(mats);
  return table.get(n);
}

MatQ bracket_unmemoized(const std::vector<MatQ>& mats, const BracketKey& n) {
  const std::size_t dim = common_size(mats);
  check_key(mats, n);
  MatQ acc(dim);
  bool base = true;
  BracketKey prev = n;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] == 0) continue;
    base = false;
    --prev[i];
    acc += shift(mats[i], Rat(n[i] - 1)) * bracket_unmemoized(mats, prev);
    ++prev[i];
  }
  return base ? MatQ::identity(dim) : acc;
}

namespace {

void fill_compositions(unsigned left, std::size_t pos, BracketKey& cur, std::vector<BracketKey>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (unsigned x = left + 1; x-- > 0;) {
    cur[pos] = x;
    fill_compositions(left - x, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<BracketKey> compositions(unsigned k, std::size_t s) {
  std::vector<BracketKey> out;
  if (s == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  BracketKey cur(s, 0);
  fill_compositions(k, 0, cur, out);
  return out;
}

bool bracket_sum_identity(const std::vector<MatQ>& mats, unsigned k) {
  const std::size_t dim = common_size(mats);
  MatQ sum(dim);
  for (const MatQ& m : mats) sum += m;
  BracketTable table(mats);
  MatQ rhs(dim);
  for (const BracketKey& n : compositions(k, mats.size())) rhs += table.get(n);
  return matrix_falling(sum, k) == rhs;
}

bool bracket_commuting_identity(const std::vector<MatQ>& mats, const BracketKey& n) {
  common_size(mats);
  check_key(mats, n);
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      if (!commutes(mats[i], mats[j])) throw Error(Errc::NotCommuting, "bracket family does not commute");
  unsigned total = 0;
  Nat denom = 1;
  MatQ rhs = MatQ::identity(mats.front().size());
  for (std::size_t i = 0; i < mats.size(); ++i) {
    total += n[i];
    denom *= factorial(n[i]);
    rhs = rhs * matrix_falling(mats[i], n[i]);
  }
  rhs *= make_rat(factorial(total), denom);
  return bracket(mats, n) == rhs;
}

}  // namespace fcancel
