#pragma once

// The cyclotomic Hecke algebra H(m,1,n): words in tau, sigma_i and their
// inverses, the normal-form basis u_n ... u_1 and products in that basis.
//
// Relations: sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1},
// sigma_i sigma_j = sigma_j sigma_i for |i - j| > 1, tau sigma_1 tau sigma_1 =
// sigma_1 tau sigma_1 tau, tau sigma_i = sigma_i tau for i > 1,
// sigma_i^2 = (q - q^-1) sigma_i + 1 and (tau - v_1)...(tau - v_m) = 0.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

// Upper bound on n; normal words are packed into 64-bit keys.
inline constexpr int kMaxStrands = 9;

struct AlgebraParams {
  int m = 1;
  int n = 0;

  // Throws InvalidArgument unless 1 <= m <= 7 and 0 <= n <= kMaxStrands.
  void validate() const;
  std::string to_string() const;
  auto operator<=>(const AlgebraParams&) const = default;
};

struct Letter {
  enum class Kind { Tau, Sigma, SigmaInverse };
  Kind kind = Kind::Tau;
  int index = 0;  // 1..n-1 for Sigma and SigmaInverse, 0 for Tau

  static Letter tau() { return {Kind::Tau, 0}; }
  static Letter sigma(int i) { return {Kind::Sigma, i}; }
  static Letter sigma_inverse(int i) { return {Kind::SigmaInverse, i}; }

  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// Throws OutOfRange if a letter index is not valid for `params`.
void check_word(const Word& w, const AlgebraParams& params);

// Space separated, powers collapsed: "s1^-1 t^2 s1 s2".
std::string word_to_string(const Word& w);

// Factor u_k = sigma_j^-1 ... sigma_1^-1 tau^alpha sigma_1 ... sigma_{k-1}.
struct Factor {
  int j = 0;
  int alpha = 0;
  auto operator<=>(const Factor&) const = default;
};

class NormalWord {
 public:
  NormalWord() = default;
  // factors[0] is u_n, factors[n-1] is u_1. Throws InvalidArgument unless
  // j_k < k and alpha_k < m.
  NormalWord(std::vector<Factor> factors, int m);

  static NormalWord identity(int n);
  static NormalWord from_key(std::uint64_t key, int n);

  int n() const { return static_cast<int>(factors_.size()); }
  const std::vector<Factor>& factors() const { return factors_; }
  // Factor u_k for 1 <= k <= n.
  const Factor& factor(int k) const { return factors_[factors_.size() - static_cast<std::size_t>(k)]; }

  // Keys compare in basis order.
  std::uint64_t key() const;
  Word to_word() const;
  std::string to_string() const { return word_to_string(to_word()); }

  auto operator<=>(const NormalWord&) const = default;

 private:
  std::vector<Factor> factors_;
};

class Algebra;

// Finite Scalar combination of normal words, sorted in basis order with no
// zero coefficients.
class Element {
 public:
  using Term = std::pair<std::uint64_t, Scalar>;

  Element() = default;
  explicit Element(AlgebraParams params) : params_(params) {}

  static Element scalar(AlgebraParams params, const Scalar& c);
  static Element basis(AlgebraParams params, const NormalWord& w);
  // Takes unsorted terms; merges duplicates and drops zeros.
  static Element from_terms(AlgebraParams params, std::vector<Term> terms);

  const AlgebraParams& params() const { return params_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const NormalWord& w) const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element scaled(const Scalar& c) const;

  // "coeff*[word]" terms joined by " + " / " - "; "0" when empty.
  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.params_ == b.params_ && a.terms_ == b.terms_;
  }

 private:
  friend class Algebra;

  AlgebraParams params_;
  std::vector<Term> terms_;
};

// Rewrite engine for one (m, n). Owns memo tables of one-generator actions;
// all member functions are safe to call from several threads.
class Algebra {
 public:
  explicit Algebra(AlgebraParams params, std::size_t memo_capacity = kDefaultMemoCapacity);
  ~Algebra();
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  static constexpr std::size_t kDefaultMemoCapacity = 4'000'000;
  static constexpr std::uint64_t kMaxBasisSize = 50'000'000;

  const AlgebraParams& params() const { return params_; }

  Element one() const;
  Element generator(const Letter& g) const;

  Element reduce(const Word& w) const;
  Element multiply(const Element& a, const Element& b) const;
  // g * x for a single letter g.
  Element left_act(const Letter& g, const Element& x) const;

  std::vector<NormalWord> enumerate_basis() const;
  std::uint64_t basis_size() const;

  // J_1 = tau, J_{i+1} = sigma_i J_i sigma_i.
  Element jm_element(int i) const;
  // sigma_i - (q - q^-1).
  Element sigma_inverse_expand(int i) const;
  // (-1)^{m+1} e_m^{-1} sum_k (-1)^k e_k tau^{m-1-k}; the inverse of tau,
  // valid because every v_j is a nonzero indeterminate.
  Element tau_inverse() const;

  // e_k(v_1, ..., v_m), 0 <= k <= m.
  const Scalar& elementary_symmetric(int k) const;

  // Coefficients of tau Z_alpha = tau sigma_1^-1 tau^alpha sigma_1 in H(m,1,2)
  // over A_{k,l} = tau^k sigma_1 tau^l and B_{k,l} = sigma_1^-1 tau^k sigma_1 tau^l,
  // k, l < m. Entry [k * m + l].
  struct TwoStrandTable {
    std::vector<Scalar> a;
    std::vector<Scalar> b;
  };
  const TwoStrandTable& two_strand_table(int alpha) const;

  std::size_t memo_entries() const;

 private:
  struct Impl;
  AlgebraParams params_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace hecke
