#pragma once

// Exact arithmetic in Q(q, v1..v7, alpha, beta, gamma, delta).
//
// A Scalar is a reduced fraction of two polynomials with rational
// coefficients. Canonical form: numerator and denominator share no common
// factor, neither carries negative exponents, and the denominator is monic
// with respect to the descending lexicographic term order. Two Scalars are
// equal as field elements iff their encodings are identical.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "hecke/error.hpp"

namespace hecke {

using Rational = mpq_class;

inline constexpr std::size_t kNumVariables = 12;
inline constexpr int kMaxCyclotomicDegree = 7;

// Variable slots. v_k lives at slot k (1 <= k <= 7).
enum Variable : std::size_t {
  kVarQ = 0,
  kVarAlpha = 8,
  kVarBeta = 9,
  kVarGamma = 10,
  kVarDelta = 11,
};

std::string variable_name(std::size_t var);

using Exponents = std::array<std::int16_t, kNumVariables>;

struct Term {
  Exponents exps{};
  Rational coeff;
};

// Multivariate polynomial with rational coefficients. Terms are kept sorted
// strictly descending in lexicographic exponent order with no zero
// coefficients. Exponents may be negative (Laurent) at this level; Scalar
// clears them when it canonicalizes.
class Poly {
 public:
  Poly() = default;

  static Poly constant(const Rational& c);
  static Poly variable(std::size_t var, int power = 1);
  static Poly monomial(const Exponents& exps, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  int degree(std::size_t var) const;
  bool uses(std::size_t var) const;
  Exponents min_exponents() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const Rational& c) const;
  Poly shifted(const Exponents& delta) const;

  // Quotient when `divisor` divides *this exactly, nullopt otherwise.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  // Evaluation; `values[var]` must be set for every variable in use.
  Rational evaluate(std::span<const std::optional<Rational>> values) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  explicit Poly(std::vector<Term> terms) : terms_(std::move(terms)) {}
  static Poly from_unsorted(std::vector<Term> terms);

  std::vector<Term> terms_;
};

// Greatest common divisor over Q, normalized to integer coprime coefficients
// with a positive leading coefficient. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

class Scalar {
 public:
  Scalar() : num_(), den_(Poly::constant(1)) {}
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Scalar q(int power = 1);
  static Scalar v(int k, int power = 1);
  static Scalar variable(std::size_t var, int power = 1);
  static Scalar fraction(const Poly& num, const Poly& den);

  // Parses the scalar text syntax: integers, q, v1..v7, alpha, beta, gamma,
  // delta, + - * / ^ and parentheses.
  static Scalar parse(std::string_view text);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  // Denominator is a unit of Q[q, q^-1, v...], i.e. a pure power of q.
  bool is_laurent_unit_denominator() const;
  bool is_monomial() const;
  bool uses(std::size_t var) const { return num_.uses(var) || den_.uses(var); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(int exponent) const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Scalar(Poly num, Poly den, bool canonical);
  void canonicalize();

  Poly num_;
  Poly den_;
};

// q - q^-1, the coefficient of the quadratic Hecke relation.
const Scalar& q_diff();

// Numeric values for q and v_1..v_m.
struct ParamSpec {
  int m = 1;
  Rational q = 2;
  std::vector<Rational> v;

  // Checks q != 0, v_j != 0 and v.size() == m; throws InvalidArgument.
  void validate() const;
  std::string to_string() const;
};

// q = 2 and v = (1, 3, 7, ...); the first entries of the default oracle spec.
ParamSpec default_param_spec(int m);

// Exact value of `a` at `p`. Throws VanishingDenominator when the
// denominator vanishes and InvalidArgument when `a` mentions a variable
// that `p` does not fix.
Rational substitute(const Scalar& a, const ParamSpec& p);

// True iff 1 + q^2 + ... + q^{2N} != 0 for N < n, q^{2i} v_j != v_k for j != k
// and -n < i < n, and every v_j != 0.
bool is_semisimple_spec(const ParamSpec& p, int n);

std::string rational_to_string(const Rational& r);

}  // namespace hecke
