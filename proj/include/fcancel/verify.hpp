#pragma once

// Seeded generators, parameter catalogs, and the identity / divisibility
// batteries driven by `fcancel verify`.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fcancel/hyper.hpp"
#include "fcancel/io.hpp"
#include "fcancel/matfun.hpp"

namespace fcancel {

using Rng = std::mt19937_64;

/// Uniform in [lo, hi].
long uniform_int(Rng& rng, long lo, long hi);
/// num / den with |num| <= max_num, 1 <= den <= max_den.
Rat random_rat(Rng& rng, long max_num, long max_den);
UniPoly random_int_poly(Rng& rng, unsigned max_degree, long max_coeff);
MatQ random_rat_matrix(Rng& rng, std::size_t n, long max_num, long max_den);
MatQ random_int_matrix(Rng& rng, std::size_t n, long max_abs);
/// Product of random elementary integer row operations; determinant +-1.
MatQ random_unimodular(Rng& rng, std::size_t n, unsigned steps = 6);

/// Twenty rationals with denominators <= 30.
std::vector<Rat> scalar_lambda_set();

struct MatrixCase {
  std::string name;
  MatQ a;
};
/// Matrices from prescribed rational Jordan data conjugated by unimodular
/// matrices, plus the rank-one idempotent [[1/2,1/2],[1/2,1/2]] first.
std::vector<MatrixCase> matrix_catalog(std::uint64_t seed = 7);
/// Rational-spectrum matrices with squarefree minimal polynomial.
std::vector<MatrixCase> semisimple_catalog(std::uint64_t seed = 11);

struct HyperCase {
  std::string name;
  HyperParams params;
};
/// m = 1, 2, 3 instances with pairwise distinct beta.
std::vector<HyperCase> hyper_catalog();
/// An instance with gamma = 0 and distinct beta.
HyperParams gamma_zero_params();

/// Random two-pole system with integer or half-integer poles.
FuchsianSystem random_two_pole_system(Rng& rng, std::size_t dim);

struct CheckResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// First failing input.
  std::optional<Json> counterexample;

  bool ok() const { return failed == 0; }
};

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 42;
  bool force_failure = false;
  unsigned parallel = 1;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

/// Throws InvalidArgument for an unknown suite name.
VerifyReport run_verify(const VerifyOptions& opts);
Json to_json(const VerifyReport& r);

}  // namespace fcancel
