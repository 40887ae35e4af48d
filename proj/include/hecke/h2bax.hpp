#pragma once

// Rank-two building blocks: irreducible representations of the affine Hecke
// algebra on two strands (XY = YX, Y = sigma X sigma, sigma^2 =
// (q - q^-1) sigma + 1) and Baxterized elements
// sigma_i(alpha, beta) = sigma_i + (q - q^-1) beta / (alpha - beta).

#include <optional>

#include "hecke/algebra.hpp"
#include "hecke/matrix.hpp"

namespace hecke {

struct H2Rep {
  int dimension = 1;
  ScalarMatrix x;
  ScalarMatrix y;
  ScalarMatrix sigma;
  Scalar a;
  std::optional<Scalar> b;  // two-dimensional case only
  int sign = 1;             // one-dimensional case only
};

// X = a, Y = q^{2 sign} a, sigma = sign q^{sign}. Throws InvalidArgument when
// a = 0 or sign is not +1 / -1.
H2Rep h2_one_dim(const Scalar& a, int sign);

// The representation with X = diag(a, b), Y = diag(b, a). Throws
// NotDiagonalizable when b = a and Reducible when b = q^{+-2} a.
H2Rep h2_two_dim(const Scalar& a, const Scalar& b);

// The three defining relations as exact matrix identities.
bool verify_affine_relations(const H2Rep& rep);

// True iff two 2x2 matrices are conjugate by an invertible diagonal matrix:
// equal diagonals, equal products of off-diagonal entries, and matching
// zero patterns.
bool diagonally_conjugate(const ScalarMatrix& x, const ScalarMatrix& y);

// sigma_i + (q - q^-1) beta / (alpha - beta). Throws EqualSpectralParameters
// when alpha = beta.
Element baxterize(const Algebra& h, int i, const Scalar& alpha, const Scalar& beta);

// (q alpha - q^-1 beta) / (alpha - beta).
Scalar baxter_f(const Scalar& alpha, const Scalar& beta);

struct BaxterReport {
  // nullopt when n is too small for the identity to apply.
  std::optional<bool> unitarity;     // n >= 2
  std::optional<bool> yang_baxter;   // n >= 3
  std::optional<bool> locality;      // n >= 4

  bool ok() const {
    return unitarity.value_or(true) && yang_baxter.value_or(true) && locality.value_or(true);
  }
};

// Checks, with indeterminate spectral parameters alpha, beta, gamma, delta:
//   sigma_i(a,b) sigma_i(b,a) = f(a,b) f(b,a),
//   sigma_i(a,b) sigma_{i+1}(a,c) sigma_i(b,c) = sigma_{i+1}(b,c) sigma_i(a,c) sigma_{i+1}(a,b),
//   sigma_i(a,b) sigma_j(c,d) = sigma_j(c,d) sigma_i(a,b) for |i - j| > 1,
// for every applicable index.
BaxterReport verify_baxter_relations(const Algebra& h);

}  // namespace hecke
