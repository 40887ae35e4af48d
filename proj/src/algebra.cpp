#include "hecke/algebra.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "hecke/matrix.hpp"

namespace hecke {

namespace {

constexpr int kFactorBits = 7;
constexpr std::uint64_t kFactorMask = (1U << kFactorBits) - 1;

std::uint64_t factor_code(int j, int alpha) { return static_cast<std::uint64_t>(j * 8 + alpha); }

std::uint64_t level_mask(int level) {
  return level == 0 ? 0 : ((std::uint64_t{1} << (kFactorBits * level)) - 1);
}

void sort_and_merge(std::vector<Element::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Element::Term& a, const Element::Term& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t k = i + 1;
    Scalar sum = std::move(terms[i].second);
    while (k < terms.size() && terms[k].first == terms[i].first) {
      sum += terms[k].second;
      ++k;
    }
    if (!sum.is_zero()) {
      terms[out].first = terms[i].first;
      terms[out].second = std::move(sum);
      ++out;
    }
    i = k;
  }
  terms.resize(out);
}

// Adds c * x into an accumulator keyed by word.
void accumulate(std::unordered_map<std::uint64_t, Scalar>& acc, const std::vector<Element::Term>& x,
                const Scalar& c, std::uint64_t prefix) {
  for (const auto& [key, coeff] : x) {
    auto [it, inserted] = acc.try_emplace(prefix | key);
    if (c.is_one()) {
      it->second += coeff;
    } else {
      it->second += coeff * c;
    }
  }
}

std::vector<Element::Term> drain(std::unordered_map<std::uint64_t, Scalar>& acc) {
  std::vector<Element::Term> out;
  out.reserve(acc.size());
  for (auto& [key, coeff] : acc) {
    if (!coeff.is_zero()) out.emplace_back(key, std::move(coeff));
  }
  std::sort(out.begin(), out.end(),
            [](const Element::Term& a, const Element::Term& b) { return a.first < b.first; });
  return out;
}

// Elements of the affine Hecke algebra on two strands in the basis
// X^i Y^j s^e, X = tau, Y = s tau s, s = sigma_1.
class AffineTwo {
 public:
  using Key = std::array<int, 3>;
  std::map<Key, Scalar> terms;

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    Scalar& slot = terms[k];
    slot += c;
    if (slot.is_zero()) terms.erase(k);
  }

  AffineTwo& operator+=(const AffineTwo& o) {
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
  }

  AffineTwo scaled(const Scalar& f) const {
    AffineTwo out;
    for (const auto& [k, c] : terms) out.add(k, c * f);
    return out;
  }

  AffineTwo times_x_left() const {
    AffineTwo out;
    for (const auto& [k, c] : terms) out.add({k[0] + 1, k[1], k[2]}, c);
    return out;
  }

  // s X^i Y^j = X^j Y^i s - (q - q^-1) Y (X^i Y^j - X^j Y^i) / (X - Y).
  static AffineTwo s_times_monomial(int i, int j) {
    const Scalar& c = q_diff();
    AffineTwo out;
    out.add({j, i, 1}, 1);
    if (i > j) {
      for (int p = 0; p < i - j; ++p) out.add({j + p, i - p, 0}, -c);
    } else if (i < j) {
      for (int p = 0; p < j - i; ++p) out.add({i + p, j - p, 0}, c);
    }
    return out;
  }

  AffineTwo times_s_left() const {
    const Scalar& c = q_diff();
    AffineTwo out;
    for (const auto& [k, coeff] : terms) {
      const AffineTwo head = s_times_monomial(k[0], k[1]);
      for (const auto& [h, hc] : head.terms) {
        const Scalar w = hc * coeff;
        if (k[2] == 0) {
          out.add(h, w);
        } else if (h[2] == 0) {
          out.add({h[0], h[1], 1}, w);
        } else {
          // s^2 = (q - q^-1) s + 1
          out.add({h[0], h[1], 1}, w * c);
          out.add({h[0], h[1], 0}, w);
        }
      }
    }
    return out;
  }
};

// Solves a square system over Scalar; nullopt when singular.
std::optional<std::vector<Scalar>> solve(ScalarMatrix a, std::vector<Scalar> rhs) {
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      std::swap(rhs[pivot], rhs[col]);
    }
    const Scalar inv = a(col, col).inverse();
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Scalar f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) {
        if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
      }
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Scalar> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a(i, i);
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------

void AlgebraParams::validate() const {
  if (m < 1 || m > kMaxCyclotomicDegree) {
    fail(ErrorCode::InvalidArgument,
         "m must lie in 1.." + std::to_string(kMaxCyclotomicDegree) + ", got " + std::to_string(m));
  }
  if (n < 0 || n > kMaxStrands) {
    fail(ErrorCode::InvalidArgument,
         "n must lie in 0.." + std::to_string(kMaxStrands) + ", got " + std::to_string(n));
  }
}

std::string AlgebraParams::to_string() const {
  return "H(" + std::to_string(m) + ",1," + std::to_string(n) + ")";
}

void check_word(const Word& w, const AlgebraParams& params) {
  for (const Letter& l : w) {
    if (l.kind == Letter::Kind::Tau) {
      if (params.n < 1) fail(ErrorCode::OutOfRange, "t requires n >= 1");
      continue;
    }
    if (l.index < 1 || l.index > params.n - 1) {
      fail(ErrorCode::OutOfRange, "generator s" + std::to_string(l.index) + " out of range for n = " +
                                      std::to_string(params.n));
    }
  }
}

std::string word_to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t k = i;
    while (k < w.size() && w[k] == w[i]) ++k;
    const int count = static_cast<int>(k - i);
    std::string token = w[i].kind == Letter::Kind::Tau ? "t" : "s" + std::to_string(w[i].index);
    const int power = w[i].kind == Letter::Kind::SigmaInverse ? -count : count;
    if (power != 1) token += "^" + std::to_string(power);
    if (!out.empty()) out += ' ';
    out += token;
    i = k;
  }
  return out;
}

// ---------------------------------------------------------------------------

NormalWord::NormalWord(std::vector<Factor> factors, int m) : factors_(std::move(factors)) {
  const int n = static_cast<int>(factors_.size());
  if (n > kMaxStrands) fail(ErrorCode::InvalidArgument, "too many factors in normal word");
  for (int k = 1; k <= n; ++k) {
    const Factor& f = factor(k);
    if (f.j < 0 || f.j >= k || f.alpha < 0 || f.alpha >= m) {
      fail(ErrorCode::InvalidArgument, "invalid factor (" + std::to_string(f.j) + "," +
                                           std::to_string(f.alpha) + ") at level " + std::to_string(k));
    }
  }
}

NormalWord NormalWord::identity(int n) {
  std::vector<Factor> f;
  for (int k = n; k >= 1; --k) f.push_back({k - 1, 0});
  return NormalWord(std::move(f), 1);
}

NormalWord NormalWord::from_key(std::uint64_t key, int n) {
  NormalWord w;
  for (int k = n; k >= 1; --k) {
    const std::uint64_t code = (key >> (kFactorBits * (k - 1))) & kFactorMask;
    w.factors_.push_back({static_cast<int>(code >> 3), static_cast<int>(code & 7)});
  }
  return w;
}

std::uint64_t NormalWord::key() const {
  std::uint64_t key = 0;
  for (const Factor& f : factors_) key = (key << kFactorBits) | factor_code(f.j, f.alpha);
  return key;
}

Word NormalWord::to_word() const {
  Word w;
  for (int k = n(); k >= 1; --k) {
    const Factor& f = factor(k);
    if (f.alpha == 0) {
      for (int i = f.j + 1; i <= k - 1; ++i) w.push_back(Letter::sigma(i));
      continue;
    }
    for (int i = f.j; i >= 1; --i) w.push_back(Letter::sigma_inverse(i));
    for (int a = 0; a < f.alpha; ++a) w.push_back(Letter::tau());
    for (int i = 1; i <= k - 1; ++i) w.push_back(Letter::sigma(i));
  }
  return w;
}

// ---------------------------------------------------------------------------

Element Element::scalar(AlgebraParams params, const Scalar& c) {
  Element e(params);
  if (!c.is_zero()) e.terms_.emplace_back(NormalWord::identity(params.n).key(), c);
  return e;
}

Element Element::basis(AlgebraParams params, const NormalWord& w) {
  if (w.n() != params.n) fail(ErrorCode::ParamsMismatch, "normal word has the wrong number of factors");
  Element e(params);
  e.terms_.emplace_back(w.key(), Scalar(1));
  return e;
}

Element Element::from_terms(AlgebraParams params, std::vector<Term> terms) {
  Element e(params);
  sort_and_merge(terms);
  e.terms_ = std::move(terms);
  return e;
}

Scalar Element::coefficient(const NormalWord& w) const {
  const std::uint64_t key = w.key();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.first < k; });
  if (it == terms_.end() || it->first != key) return Scalar();
  return it->second;
}

Element& Element::operator+=(const Element& other) {
  if (params_ != other.params_) fail(ErrorCode::ParamsMismatch, "elements of different algebras");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0;
  std::size_t k = 0;
  while (i < terms_.size() || k < other.terms_.size()) {
    if (k == other.terms_.size() || (i < terms_.size() && terms_[i].first < other.terms_[k].first)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || other.terms_[k].first < terms_[i].first) {
      merged.push_back(other.terms_[k++]);
    } else {
      Scalar sum = terms_[i].second + other.terms_[k].second;
      if (!sum.is_zero()) merged.emplace_back(terms_[i].first, std::move(sum));
      ++i;
      ++k;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Element& Element::operator-=(const Element& other) { return *this += -other; }

Element Element::operator-() const {
  Element out = *this;
  for (Term& t : out.terms_) t.second = -t.second;
  return out;
}

Element Element::scaled(const Scalar& c) const {
  Element out(params_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.emplace_back(t.first, t.second * c);
  return out;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, coeff] : terms_) {
    const bool single = coeff.numerator().is_monomial() && coeff.is_laurent_unit_denominator();
    const bool negative = single && coeff.numerator().leading().coeff < 0;
    std::string c = negative ? (-coeff).to_string() : coeff.to_string();
    if (!single) c = "(" + c + ")";
    const std::string term = c + "*[" + NormalWord::from_key(key, params_.n).to_string() + "]";
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct Algebra::Impl {
  using Terms = std::vector<Element::Term>;
  using TermsPtr = std::shared_ptr<const Terms>;

  AlgebraParams params;
  std::size_t capacity;
  std::vector<Scalar> e;                     // e_0 .. e_m
  std::vector<std::vector<Scalar>> tau_pow;  // tau^a in the basis tau^0..tau^{m-1}
  std::vector<TwoStrandTable> tables;        // indexed by alpha

  struct MemoKey {
    std::uint64_t word;
    int level;
    int gen;  // 0 for tau, i for sigma_i
    bool operator==(const MemoKey&) const = default;
  };
  struct MemoHash {
    std::size_t operator()(const MemoKey& k) const {
      return std::hash<std::uint64_t>{}(k.word * 0x9E3779B97F4A7C15ULL ^
                                        static_cast<std::uint64_t>(k.level * 16 + k.gen));
    }
  };

  mutable std::shared_mutex mutex;
  mutable std::unordered_map<MemoKey, TermsPtr, MemoHash> memo;

  Impl(AlgebraParams p, std::size_t cap) : params(p), capacity(cap) {
    const int m = params.m;
    // e_k by expanding prod (1 + v_j x).
    e.assign(static_cast<std::size_t>(m) + 1, Scalar());
    e[0] = 1;
    for (int j = 1; j <= m; ++j) {
      for (int k = j; k >= 1; --k) e[k] += e[k - 1] * Scalar::v(j);
    }
    // tau^m = sum_{k=1}^{m} (-1)^{k+1} e_k tau^{m-k}
    std::vector<Scalar> top(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) top[m - k] = (k % 2 == 1) ? e[k] : -e[k];
    for (int a = 0; a <= m + 1; ++a) {
      std::vector<Scalar> row(static_cast<std::size_t>(m));
      if (a < m) {
        row[a] = 1;
      } else {
        const std::vector<Scalar>& prev = tau_pow[a - 1];
        for (int r = 0; r + 1 < m; ++r) row[r + 1] = prev[r];
        for (int r = 0; r < m; ++r) row[r] += prev[m - 1] * top[r];
      }
      tau_pow.push_back(std::move(row));
    }
    if (params.n >= 2) {
      for (int alpha = 0; alpha < m; ++alpha) tables.push_back(build_table(alpha));
    }
  }

  TwoStrandTable build_table(int alpha) const {
    const Scalar& c = q_diff();
    const int d = alpha + 1;
    auto a_elem = [&](int k, int l) {
      AffineTwo x;
      x.add({l, 0, 0}, 1);
      x = x.times_s_left();
      for (int i = 0; i < k; ++i) x = x.times_x_left();
      return x;
    };
    auto b_elem = [&](int k, int l) {
      const AffineTwo a = a_elem(k, l);
      AffineTwo x = a.times_s_left();
      x += a.scaled(-c);
      return x;
    };
    AffineTwo f;
    f.add({alpha, 0, 1}, 1);
    AffineTwo target = f.times_s_left();
    target += f.scaled(-c);
    target = target.times_x_left();

    const std::size_t size = 2 * static_cast<std::size_t>(d + 1);
    auto row_of = [&](const AffineTwo::Key& k) {
      if (k[0] + k[1] != d) fail(ErrorCode::Internal, "inhomogeneous term in two-strand solve");
      return static_cast<std::size_t>(k[2] * (d + 1) + k[0]);
    };
    std::vector<AffineTwo> columns;
    for (int k = 0; k <= d; ++k) columns.push_back(a_elem(k, d - k));
    for (int k = 0; k <= d; ++k) columns.push_back(b_elem(k, d - k));
    ScalarMatrix mat(size, size);
    for (std::size_t col = 0; col < size; ++col) {
      for (const auto& [key, coeff] : columns[col].terms) mat(row_of(key), col) = coeff;
    }
    std::vector<Scalar> rhs(size);
    for (const auto& [key, coeff] : target.terms) rhs[row_of(key)] = coeff;
    auto x = solve(mat, rhs);
    if (!x) fail(ErrorCode::Internal, "two-strand system is singular");

    AffineTwo check;
    for (std::size_t col = 0; col < size; ++col) check += columns[col].scaled((*x)[col]);
    if (check.terms != target.terms) fail(ErrorCode::Internal, "two-strand solution does not verify");

    const int m = params.m;
    TwoStrandTable t;
    t.a.assign(static_cast<std::size_t>(m * m), Scalar());
    t.b.assign(static_cast<std::size_t>(m * m), Scalar());
    for (int k = 0; k <= d; ++k) {
      const int l = d - k;
      for (int r = 0; r < m; ++r) {
        for (int s = 0; s < m; ++s) {
          const Scalar w = tau_pow[k][r] * tau_pow[l][s];
          if (w.is_zero()) continue;
          t.a[r * m + s] += (*x)[k] * w;
          t.b[r * m + s] += (*x)[d + 1 + k] * w;
        }
      }
    }
    return t;
  }

  // gen * word at `level`, where gen is 0 for tau and i for sigma_i.
  TermsPtr act(int level, std::uint64_t word, int gen) const {
    const MemoKey mk{word, level, gen};
    {
      std::shared_lock lock(mutex);
      auto it = memo.find(mk);
      if (it != memo.end()) return it->second;
    }
    auto result = std::make_shared<const Terms>(compute(level, word, gen));
    std::unique_lock lock(mutex);
    if (memo.size() >= capacity) {
      fail(ErrorCode::Capacity, "rewrite memo table exceeded " + std::to_string(capacity) + " entries");
    }
    return memo.try_emplace(mk, std::move(result)).first->second;
  }

  // Applies letters right to left to the terms at `level`.
  Terms apply(int level, const Word& letters, Terms x) const {
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) x = left(level, *it, x);
    return x;
  }

  Terms left(int level, const Letter& g, const Terms& x) const {
    const int gen = g.kind == Letter::Kind::Tau ? 0 : g.index;
    std::unordered_map<std::uint64_t, Scalar> acc;
    for (const auto& [key, coeff] : x) accumulate(acc, *act(level, key, gen), coeff, 0);
    if (g.kind == Letter::Kind::SigmaInverse) accumulate(acc, x, -q_diff(), 0);
    return drain(acc);
  }

  Terms compute(int level, std::uint64_t word, int gen) const {
    const int shift = kFactorBits * (level - 1);
    const std::uint64_t top = word >> shift;
    const int j = static_cast<int>(top >> 3);
    const int alpha = static_cast<int>(top & 7);
    const std::uint64_t rest = word & level_mask(level - 1);
    const int m = params.m;

    std::unordered_map<std::uint64_t, Scalar> acc;
    auto emit = [&](int nj, int nalpha, const Scalar& c, const Word& tail) {
      const std::uint64_t prefix = factor_code(nj, nalpha) << shift;
      if (tail.empty()) {
        accumulate(acc, Terms{{rest, Scalar(1)}}, c, prefix);
      } else {
        accumulate(acc, apply(level - 1, tail, Terms{{rest, Scalar(1)}}), c, prefix);
      }
    };

    if (gen > 0) {
      const int i = gen;
      if (i == j + 1) {
        emit(j + 1, alpha, 1, {});
        emit(j, alpha, q_diff(), {});
      } else if (i == j) {
        emit(j - 1, alpha, 1, {});
      } else if (i > j + 1) {
        emit(j, alpha, 1, {Letter::sigma(i - 1)});
      } else {
        emit(j, alpha, 1, {Letter::sigma(i)});
      }
    } else if (j == 0) {
      if (alpha + 1 < m) {
        emit(0, alpha + 1, 1, {});
      } else {
        for (int r = 0; r < m; ++r) {
          if (!tau_pow[m][r].is_zero()) emit(0, r, tau_pow[m][r], {});
        }
      }
    } else {
      const TwoStrandTable& t = tables[alpha];
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
          const Scalar& a = t.a[k * m + l];
          if (!a.is_zero()) {
            Word tail;
            for (int i = j - 1; i >= 1; --i) tail.push_back(Letter::sigma_inverse(i));
            for (int p = 0; p < l; ++p) tail.push_back(Letter::tau());
            emit(0, k, a, tail);
          }
          const Scalar& b = t.b[k * m + l];
          if (!b.is_zero()) emit(j, k, b, Word(static_cast<std::size_t>(l), Letter::tau()));
        }
      }
    }
    return drain(acc);
  }
};

Algebra::Algebra(AlgebraParams params, std::size_t memo_capacity) : params_(params) {
  params_.validate();
  impl_ = std::make_unique<Impl>(params_, memo_capacity);
}

Algebra::~Algebra() = default;

Element Algebra::one() const { return Element::scalar(params_, 1); }

Element Algebra::generator(const Letter& g) const { return left_act(g, one()); }

Element Algebra::left_act(const Letter& g, const Element& x) const {
  if (x.params() != params_) fail(ErrorCode::ParamsMismatch, "element belongs to a different algebra");
  check_word({g}, params_);
  Element out(params_);
  out.terms_ = impl_->left(params_.n, g, x.terms_);
  return out;
}

Element Algebra::reduce(const Word& w) const {
  check_word(w, params_);
  Element out(params_);
  out.terms_ = impl_->apply(params_.n, w, one().terms_);
  return out;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  if (a.params() != params_ || b.params() != params_) {
    fail(ErrorCode::ParamsMismatch, "multiply: operands belong to a different algebra");
  }
  std::unordered_map<std::uint64_t, Scalar> acc;
  for (const auto& [key, coeff] : a.terms_) {
    const Word w = NormalWord::from_key(key, params_.n).to_word();
    accumulate(acc, impl_->apply(params_.n, w, b.terms_), coeff, 0);
  }
  Element out(params_);
  out.terms_ = drain(acc);
  return out;
}

std::uint64_t Algebra::basis_size() const {
  std::uint64_t size = 1;
  for (int k = 1; k <= params_.n; ++k) size *= static_cast<std::uint64_t>(k * params_.m);
  return size;
}

std::vector<NormalWord> Algebra::enumerate_basis() const {
  const std::uint64_t size = basis_size();
  if (size > kMaxBasisSize) {
    fail(ErrorCode::Capacity, "basis of " + params_.to_string() + " has " + std::to_string(size) +
                                  " elements, above the limit " + std::to_string(kMaxBasisSize));
  }
  std::vector<NormalWord> out;
  out.reserve(size);
  const int n = params_.n;
  std::vector<Factor> current(static_cast<std::size_t>(n));
  // Odometer over factors u_n .. u_1, last position fastest.
  while (true) {
    out.emplace_back(current, params_.m);
    int pos = n - 1;
    while (pos >= 0) {
      Factor& f = current[pos];
      const int level = n - pos;
      if (++f.alpha < params_.m) break;
      f.alpha = 0;
      if (++f.j < level) break;
      f.j = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

Element Algebra::jm_element(int i) const {
  if (i < 1 || i > params_.n) {
    fail(ErrorCode::OutOfRange, "Jucys-Murphy index " + std::to_string(i) + " out of range 1.." +
                                    std::to_string(params_.n));
  }
  Word w;
  for (int k = i - 1; k >= 1; --k) w.push_back(Letter::sigma(k));
  w.push_back(Letter::tau());
  for (int k = 1; k <= i - 1; ++k) w.push_back(Letter::sigma(k));
  return reduce(w);
}

Element Algebra::sigma_inverse_expand(int i) const {
  if (i < 1 || i > params_.n - 1) {
    fail(ErrorCode::OutOfRange, "generator index " + std::to_string(i) + " out of range");
  }
  return generator(Letter::sigma(i)) - Element::scalar(params_, q_diff());
}

Element Algebra::tau_inverse() const {
  if (params_.n < 1) fail(ErrorCode::OutOfRange, "t requires n >= 1");
  const int m = params_.m;
  Element sum(params_);
  Element power = one();
  std::vector<Element> powers;
  for (int k = 0; k < m; ++k) {
    powers.push_back(power);
    power = left_act(Letter::tau(), power);
  }
  for (int k = 0; k < m; ++k) {
    const Scalar& ek = impl_->e[k];
    sum += powers[m - 1 - k].scaled(k % 2 == 0 ? ek : -ek);
  }
  const Scalar lead = (m % 2 == 1 ? Scalar(1) : Scalar(-1)) / impl_->e[m];
  return sum.scaled(lead);
}

const Scalar& Algebra::elementary_symmetric(int k) const {
  if (k < 0 || k > params_.m) fail(ErrorCode::OutOfRange, "elementary symmetric index out of range");
  return impl_->e[k];
}

const Algebra::TwoStrandTable& Algebra::two_strand_table(int alpha) const {
  if (params_.n < 2) fail(ErrorCode::InvalidArgument, "two-strand table requires n >= 2");
  if (alpha < 0 || alpha >= params_.m) fail(ErrorCode::OutOfRange, "alpha out of range");
  return impl_->tables[alpha];
}

std::size_t Algebra::memo_entries() const {
  std::shared_lock lock(impl_->mutex);
  return impl_->memo.size();
}

}  // namespace hecke
