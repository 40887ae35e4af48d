#include "hecke/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace hecke {

namespace {

std::int16_t checked_exponent(int value) {
  if (value > std::numeric_limits<std::int16_t>::max() ||
      value < std::numeric_limits<std::int16_t>::min()) {
    fail(ErrorCode::Overflow, "exponent overflow in polynomial arithmetic");
  }
  return static_cast<std::int16_t>(value);
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out;
  for (std::size_t i = 0; i < kNumVariables; ++i) {
    out[i] = checked_exponent(int{a[i]} + int{b[i]});
  }
  return out;
}

Exponents sub_exponents(const Exponents& a, const Exponents& b) {
  Exponents out;
  for (std::size_t i = 0; i < kNumVariables; ++i) {
    out[i] = checked_exponent(int{a[i]} - int{b[i]});
  }
  return out;
}

bool divides(const Exponents& small, const Exponents& big) {
  for (std::size_t i = 0; i < kNumVariables; ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

Exponents elementwise_min(const Exponents& a, const Exponents& b) {
  Exponents out;
  for (std::size_t i = 0; i < kNumVariables; ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

Exponents negated(const Exponents& a) {
  Exponents out;
  for (std::size_t i = 0; i < kNumVariables; ++i) {
    out[i] = checked_exponent(-int{a[i]});
  }
  return out;
}

bool is_zero_exponents(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](std::int16_t x) { return x == 0; });
}

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) fail(ErrorCode::DivisionByZero, "negative power of zero");
    Rational inv = 1 / base;
    return rational_pow(inv, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

// Coefficients of `p` viewed as a polynomial in `var`, indexed by degree.
// Requires nonnegative exponents in `var`.
std::vector<Poly> coefficients_in(const Poly& p, std::size_t var) {
  std::vector<Poly> coeffs(static_cast<std::size_t>(std::max(p.degree(var), 0)) + 1);
  for (const Term& t : p.terms()) {
    Exponents e = t.exps;
    const auto d = static_cast<std::size_t>(e[var]);
    e[var] = 0;
    coeffs[d] += Poly::monomial(e, t.coeff);
  }
  return coeffs;
}

Poly leading_coefficient_in(const Poly& p, std::size_t var) {
  const int d = p.degree(var);
  Poly out;
  for (const Term& t : p.terms()) {
    if (t.exps[var] == d) {
      Exponents e = t.exps;
      e[var] = 0;
      out += Poly::monomial(e, t.coeff);
    }
  }
  return out;
}

// Scales by a rational so coefficients are coprime integers with a positive
// leading coefficient.
Poly primitive_rational(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const Term& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading().coeff < 0) scale = -scale;
  return p.scaled(scale);
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) fail(ErrorCode::Internal, "polynomial division expected to be exact");
  return *std::move(q);
}

Poly content_in(const Poly& p, std::size_t var) {
  Poly g;
  for (const Poly& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly primitive_part_in(const Poly& p, std::size_t var) {
  return primitive_rational(exact_quotient(p, content_in(p, var)));
}

// Pseudo-remainder of a by b in `var`, up to a rational scale.
Poly pseudo_remainder(Poly a, const Poly& b, std::size_t var) {
  const int db = b.degree(var);
  const Poly lb = leading_coefficient_in(b, var);
  while (!a.is_zero() && a.degree(var) >= db) {
    Exponents shift{};
    shift[var] = checked_exponent(a.degree(var) - db);
    const Poly la = leading_coefficient_in(a, var);
    a = a * lb - (la * b).shifted(shift);
    a = primitive_rational(a);
  }
  return a;
}

Poly monomial_gcd(const Poly& a, const Poly& b) {
  return Poly::monomial(elementwise_min(a.min_exponents(), b.min_exponents()), 1);
}

}  // namespace

std::string variable_name(std::size_t var) {
  switch (var) {
    case kVarQ: return "q";
    case kVarAlpha: return "alpha";
    case kVarBeta: return "beta";
    case kVarGamma: return "gamma";
    case kVarDelta: return "delta";
    default: return "v" + std::to_string(var);
  }
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(const Rational& c) {
  if (c == 0) return Poly();
  return Poly({Term{Exponents{}, c}});
}

Poly Poly::variable(std::size_t var, int power) {
  Exponents e{};
  e[var] = checked_exponent(power);
  return Poly({Term{e, 1}});
}

Poly Poly::monomial(const Exponents& exps, const Rational& c) {
  if (c == 0) return Poly();
  return Poly({Term{exps, c}});
}

Poly Poly::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exps > b.exps; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Poly(std::move(out));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_zero_exponents(terms_[0].exps));
}

int Poly::degree(std::size_t var) const {
  int d = std::numeric_limits<int>::min();
  for (const Term& t : terms_) d = std::max(d, int{t.exps[var]});
  return terms_.empty() ? 0 : d;
}

bool Poly::uses(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.exps[var] != 0; });
}

Exponents Poly::min_exponents() const {
  if (terms_.empty()) return Exponents{};
  Exponents e = terms_.front().exps;
  for (const Term& t : terms_) e = elementwise_min(e, t.exps);
  return e;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exps > b->exps)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exps > a->exps) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.push_back(Term{a->exps, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.terms_.size() == 1 && is_zero_exponents(a.terms_[0].exps)) {
    return b.scaled(a.terms_[0].coeff);
  }
  if (b.terms_.size() == 1 && is_zero_exponents(b.terms_[0].exps)) {
    return a.scaled(b.terms_[0].coeff);
  }
  // Lex order is a monomial order, so multiplying by one term keeps the
  // terms sorted.
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const Poly& mono = a.terms_.size() == 1 ? a : b;
    const Poly& other = a.terms_.size() == 1 ? b : a;
    const Term& t = mono.terms_[0];
    Poly out = other;
    for (Term& x : out.terms_) {
      x.exps = add_exponents(x.exps, t.exps);
      if (t.coeff != 1) x.coeff *= t.coeff;
    }
    return out;
  }
  const Poly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const Poly& large = a.terms_.size() <= b.terms_.size() ? b : a;
  if (small.terms_.size() <= 4) {
    Poly acc;
    for (const Term& t : small.terms_) acc += Poly::monomial(t.exps, t.coeff) * large;
    return acc;
  }
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& x : a.terms_) {
    for (const Term& y : b.terms_) {
      terms.push_back(Term{add_exponents(x.exps, y.exps), x.coeff * y.coeff});
    }
  }
  return Poly::from_unsorted(std::move(terms));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly();
  if (c == 1) return *this;
  Poly out = *this;
  for (Term& t : out.terms_) t.coeff *= c;
  return out;
}

Poly Poly::shifted(const Exponents& delta) const {
  Poly out = *this;
  for (Term& t : out.terms_) t.exps = add_exponents(t.exps, delta);
  return out;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (divisor.is_constant()) return scaled(1 / divisor.leading().coeff);
  if (divisor.is_monomial()) {
    const Term& d = divisor.leading();
    Poly out = *this;
    for (Term& t : out.terms_) {
      if (!divides(d.exps, t.exps)) return std::nullopt;
      t.exps = sub_exponents(t.exps, d.exps);
      if (d.coeff != 1) t.coeff /= d.coeff;
    }
    return out;
  }
  const Term& lead = divisor.leading();
  Poly rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& t = rem.leading();
    if (!divides(lead.exps, t.exps)) return std::nullopt;
    Term qt{sub_exponents(t.exps, lead.exps), t.coeff / lead.coeff};
    rem -= divisor.shifted(qt.exps).scaled(qt.coeff);
    quotient.push_back(std::move(qt));
  }
  return Poly(std::move(quotient));
}

Rational Poly::evaluate(std::span<const std::optional<Rational>> values) const {
  Rational sum = 0;
  for (const Term& t : terms_) {
    Rational prod = t.coeff;
    for (std::size_t var = 0; var < kNumVariables; ++var) {
      if (t.exps[var] == 0) continue;
      if (var >= values.size() || !values[var]) {
        fail(ErrorCode::InvalidArgument,
             "no value supplied for variable " + variable_name(var));
      }
      prod *= rational_pow(*values[var], t.exps[var]);
    }
    sum += prod;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    const bool negative = t.coeff < 0;
    const Rational mag = abs(t.coeff);
    std::string mono;
    for (std::size_t var = 0; var < kNumVariables; ++var) {
      if (t.exps[var] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variable_name(var);
      if (t.exps[var] != 1) mono += '^' + std::to_string(t.exps[var]);
    }
    std::string body;
    if (mono.empty()) {
      body = rational_to_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = rational_to_string(mag) + '*' + mono;
    }
    if (first) {
      out = (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

// Recursive content / primitive-part scheme with a primitive remainder
// sequence in one chosen variable.
Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return primitive_rational(b);
  if (b.is_zero()) return primitive_rational(a);
  if (a.is_monomial() || b.is_monomial()) return monomial_gcd(a, b);

  const Exponents ma = a.min_exponents();
  const Exponents mb = b.min_exponents();
  const Poly mono = Poly::monomial(elementwise_min(ma, mb), 1);
  const Poly pa = a.shifted(negated(ma));
  const Poly pb = b.shifted(negated(mb));
  if (pa.is_constant() || pb.is_constant()) return mono;
  if (pa == pb || pa == -pb) return primitive_rational(pa * mono);

  // A variable used by only one side can only enter the gcd through that
  // side's content with respect to it.
  for (std::size_t var = 0; var < kNumVariables; ++var) {
    const bool in_a = pa.uses(var);
    const bool in_b = pb.uses(var);
    if (in_a && !in_b) return primitive_rational(gcd(content_in(pa, var), pb) * mono);
    if (in_b && !in_a) return primitive_rational(gcd(pa, content_in(pb, var)) * mono);
  }

  std::size_t main_var = kNumVariables;
  int best = std::numeric_limits<int>::max();
  for (std::size_t var = 0; var < kNumVariables; ++var) {
    if (!pa.uses(var)) continue;
    const int d = std::max(pa.degree(var), pb.degree(var));
    if (d < best) {
      best = d;
      main_var = var;
    }
  }

  const Poly ca = content_in(pa, main_var);
  const Poly cb = content_in(pb, main_var);
  const Poly content = gcd(ca, cb);
  Poly x = primitive_rational(exact_quotient(pa, ca));
  Poly y = primitive_rational(exact_quotient(pb, cb));
  if (x.degree(main_var) < y.degree(main_var)) std::swap(x, y);
  while (true) {
    Poly r = pseudo_remainder(x, y, main_var);
    if (r.is_zero()) break;
    if (r.degree(main_var) == 0) {
      y = Poly::constant(1);
      break;
    }
    x = std::move(y);
    y = primitive_part_in(r, main_var);
  }
  return primitive_rational(content * y * mono);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(long value) : num_(Poly::constant(value)), den_(Poly::constant(1)) {}

Scalar::Scalar(const Rational& value)
    : num_(Poly::constant(value)), den_(Poly::constant(1)) {}

Scalar::Scalar(Poly num, Poly den, bool canonical)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!canonical) canonicalize();
}

Scalar Scalar::variable(std::size_t var, int power) {
  if (var >= kNumVariables) fail(ErrorCode::OutOfRange, "variable index out of range");
  Exponents e{};
  e[var] = checked_exponent(power);
  return Scalar(Poly::monomial(e, 1), Poly::constant(1), false);
}

Scalar Scalar::q(int power) { return variable(kVarQ, power); }

Scalar Scalar::v(int k, int power) {
  if (k < 1 || k > kMaxCyclotomicDegree) {
    fail(ErrorCode::OutOfRange, "v index " + std::to_string(k) + " out of range");
  }
  return variable(static_cast<std::size_t>(k), power);
}

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
  return Scalar(num, den, false);
}

void Scalar::canonicalize() {
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  const Exponents shift = negated(elementwise_min(num_.min_exponents(), den_.min_exponents()));
  if (!is_zero_exponents(shift)) {
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
  }
  if (!den_.is_constant()) {
    const Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  const Rational lead = den_.leading().coeff;
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

bool Scalar::is_one() const {
  return num_.is_constant() && !num_.is_zero() && num_.leading().coeff == 1 &&
         den_.is_constant();
}

bool Scalar::is_laurent_unit_denominator() const {
  if (!den_.is_monomial()) return false;
  const Exponents& e = den_.leading().exps;
  for (std::size_t var = 1; var < kNumVariables; ++var) {
    if (e[var] != 0) return false;
  }
  return true;
}

bool Scalar::is_monomial() const {
  return num_.is_monomial() && den_.is_monomial();
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, true); }

Scalar& Scalar::operator+=(const Scalar& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    num_ += other.num_;
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
    } else if (!den_.is_constant()) {
      canonicalize();
    }
    return *this;
  }
  const Poly g = gcd(den_, other.den_);
  const Poly a = exact_quotient(den_, g);
  const Poly b = exact_quotient(other.den_, g);
  num_ = num_ * b + other.num_ * a;
  den_ = den_ * b;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = Scalar();
  if (other.is_one()) return *this;
  if (is_one()) return *this = other;
  if (den_.is_constant() && other.den_.is_constant()) {
    num_ = num_ * other.num_;
    return *this;
  }
  const Poly g1 = gcd(num_, other.den_);
  const Poly g2 = gcd(other.num_, den_);
  num_ = exact_quotient(num_, g1) * exact_quotient(other.num_, g2);
  den_ = exact_quotient(den_, g2) * exact_quotient(other.den_, g1);
  const Rational lead = den_.leading().coeff;
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero scalar");
  Poly num = den_;
  Poly den = num_;
  const Rational lead = den.leading().coeff;
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return Scalar(std::move(num), std::move(den), true);
}

Scalar Scalar::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result(1);
  Scalar base = *this;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  if (is_laurent_unit_denominator()) {
    return num_.shifted(negated(den_.leading().exps)).to_string();
  }
  std::string num = num_.to_string();
  if (num_.terms().size() > 1) num = "(" + num + ")";
  std::string den = den_.to_string();
  const bool bare = den_.is_monomial() &&
                    den.find_first_of("*/") == std::string::npos;
  if (!bare) den = "(" + den + ")";
  return num + "/" + den;
}

const Scalar& q_diff() {
  static const Scalar value = Scalar::q() - Scalar::q(-1);
  return value;
}

// ---------------------------------------------------------------------------
// Scalar text parser

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar value = expression();
    skip_space();
    if (pos_ != text_.size()) error("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Parse,
         "scalar syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_primary_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  Scalar expression() {
    Scalar value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Scalar term() {
    Scalar value = factor();
    while (true) {
      if (accept('*')) {
        value *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Scalar d = factor();
        if (d.is_zero()) {
          pos_ = at;
          fail(ErrorCode::DivisionByZero,
               "division by zero at position " + std::to_string(at));
        }
        value /= d;
      } else if (at_primary_start()) {
        value *= factor();
      } else {
        return value;
      }
    }
  }

  Scalar factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Scalar base = primary();
    while (accept('^')) {
      skip_space();
      bool negative = false;
      if (accept('-')) negative = true;
      const long e = integer();
      if (e > 10000) error("exponent too large");
      if (negative && base.is_zero()) {
        fail(ErrorCode::DivisionByZero, "negative power of zero");
      }
      base = base.pow(negative ? -static_cast<int>(e) : static_cast<int>(e));
    }
    return base;
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9) error("integer literal too long for an exponent or index");
    return std::stol(digits);
  }

  Scalar primary() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar value = expression();
      if (!accept(')')) error("expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    for (const auto& [name, var] : {std::pair{"alpha", kVarAlpha}, std::pair{"beta", kVarBeta},
                                    std::pair{"gamma", kVarGamma}, std::pair{"delta", kVarDelta}}) {
      const std::string_view n(name);
      if (text_.substr(pos_, n.size()) == n) {
        pos_ += n.size();
        return Scalar::variable(var);
      }
    }
    if (c == 'q') {
      ++pos_;
      return Scalar::q();
    }
    if (c == 'v') {
      ++pos_;
      const std::size_t at = pos_;
      const long k = integer();
      if (k < 1 || k > kMaxCyclotomicDegree) {
        pos_ = at;
        error("parameter index out of range");
      }
      return Scalar::v(static_cast<int>(k));
    }
    error(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

// ---------------------------------------------------------------------------
// Specialization

void ParamSpec::validate() const {
  if (m < 1 || m > kMaxCyclotomicDegree) {
    fail(ErrorCode::InvalidArgument, "m must lie in 1.." + std::to_string(kMaxCyclotomicDegree));
  }
  if (static_cast<int>(v.size()) != m) {
    fail(ErrorCode::InvalidArgument, "parameter spec needs exactly m values for v");
  }
  if (q == 0) fail(ErrorCode::InvalidArgument, "q must be nonzero");
  for (const Rational& x : v) {
    if (x == 0) fail(ErrorCode::InvalidArgument, "every v_j must be nonzero");
  }
}

std::string ParamSpec::to_string() const {
  std::ostringstream os;
  os << "q=" << q << " v=(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

ParamSpec default_param_spec(int m) {
  static const long kValues[kMaxCyclotomicDegree] = {1, 3, 7, 11, 13, 17, 19};
  if (m < 1 || m > kMaxCyclotomicDegree) {
    fail(ErrorCode::InvalidArgument, "m must lie in 1.." + std::to_string(kMaxCyclotomicDegree));
  }
  ParamSpec p;
  p.m = m;
  p.q = 2;
  for (int j = 0; j < m; ++j) p.v.emplace_back(kValues[j]);
  return p;
}

Rational substitute(const Scalar& a, const ParamSpec& p) {
  std::array<std::optional<Rational>, kNumVariables> values;
  values[kVarQ] = p.q;
  for (std::size_t j = 0; j < p.v.size() && j + 1 < kNumVariables; ++j) values[j + 1] = p.v[j];
  const Rational den = a.denominator().evaluate(values);
  if (den == 0) {
    fail(ErrorCode::VanishingDenominator,
         "denominator of " + a.to_string() + " vanishes at " + p.to_string());
  }
  return a.numerator().evaluate(values) / den;
}

bool is_semisimple_spec(const ParamSpec& p, int n) {
  if (static_cast<int>(p.v.size()) != p.m) {
    fail(ErrorCode::InvalidArgument, "parameter spec needs exactly m values for v");
  }
  if (p.q == 0) return false;
  for (const Rational& x : p.v) {
    if (x == 0) return false;
  }
  const Rational q2 = p.q * p.q;
  Rational partial = 1;
  Rational power = 1;
  for (int N = 1; N < n; ++N) {
    power *= q2;
    partial += power;
    if (partial == 0) return false;
  }
  for (int i = -(n - 1); i <= n - 1; ++i) {
    const Rational factor = rational_pow(q2, i);
    for (int j = 0; j < p.m; ++j) {
      for (int k = 0; k < p.m; ++k) {
        if (j != k && factor * p.v[j] == p.v[k]) return false;
      }
    }
  }
  return true;
}

}  // namespace hecke
