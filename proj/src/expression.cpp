#include "hecke/expression.hpp"

#include <cctype>
#include <optional>
#include <string>

namespace hecke {

namespace {

constexpr long kMaxElementPower = 1000;
constexpr long kMaxScalarPower = 10000;

std::optional<Scalar> as_scalar(const Element& e) {
  if (e.terms().empty()) return Scalar();
  if (e.terms().size() == 1 && e.terms()[0].first == NormalWord::identity(e.params().n).key()) {
    return e.terms()[0].second;
  }
  return std::nullopt;
}

class ExpressionParser {
 public:
  ExpressionParser(const Algebra& h, std::string_view text, const ExpressionOptions& options)
      : h_(h), text_(text), options_(options) {}

  Element parse() {
    Element value = expression();
    skip_space();
    if (pos_ != text_.size()) error("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  // What a primary was, for deciding which negative powers are legal.
  enum class Kind { Scalar, Sigma, Tau, Other };
  struct Value {
    Element element;
    Kind kind = Kind::Other;
    int index = 0;
  };

  [[noreturn]] void error(const std::string& what) const { error_at(pos_, what); }
  [[noreturn]] void error_at(std::size_t at, const std::string& what) const {
    fail(ErrorCode::Parse, "syntax error at position " + std::to_string(at) + ": " + what);
  }
  [[noreturn]] void range_error(std::size_t at, const std::string& what) const {
    fail(ErrorCode::OutOfRange, what + " at position " + std::to_string(at) + " in " + h_.params().to_string());
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
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '[';
  }

  Element scalar(const Scalar& c) const { return Element::scalar(h_.params(), c); }

  Element product(const Element& a, const Element& b) const {
    if (auto c = as_scalar(a)) return b.scaled(*c);
    if (auto c = as_scalar(b)) return a.scaled(*c);
    return h_.multiply(a, b);
  }

  Element expression() {
    Element value(h_.params());
    if (accept('-')) {
      value = -term();
    } else {
      accept('+');
      value = term();
    }
    while (true) {
      if (accept('+')) {
        value = value + term();
      } else if (accept('-')) {
        value = value - term();
      } else {
        return value;
      }
    }
  }

  Element term() {
    Element value = factor();
    while (true) {
      if (accept('*')) {
        value = product(value, factor());
      } else if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        const Element d = factor();
        const auto c = as_scalar(d);
        if (!c) error_at(at, "divisor must be a scalar");
        if (c->is_zero()) fail(ErrorCode::DivisionByZero, "division by zero at position " + std::to_string(at));
        value = value.scaled(c->inverse());
      } else if (at_primary_start()) {
        value = product(value, factor());
      } else {
        return value;
      }
    }
  }

  Element factor() {
    skip_space();
    Value base = primary();
    while (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      const bool negative = accept('-');
      const long e = integer();
      base = power(base, negative ? -e : e, at);
    }
    return std::move(base.element);
  }

  Value power(const Value& base, long e, std::size_t at) {
    if (e == 0) return {h_.one(), Kind::Scalar};
    if (auto c = as_scalar(base.element)) {
      if (e > kMaxScalarPower || e < -kMaxScalarPower) error_at(at, "exponent too large");
      if (e < 0 && c->is_zero()) fail(ErrorCode::DivisionByZero, "negative power of zero");
      return {scalar(c->pow(static_cast<int>(e))), Kind::Scalar};
    }
    if (e > kMaxElementPower || e < -kMaxElementPower) error_at(at, "exponent too large");
    Element unit = base.element;
    if (e < 0) {
      if (base.kind == Kind::Sigma) {
        unit = h_.sigma_inverse_expand(base.index);
      } else if (base.kind == Kind::Tau) {
        if (!options_.allow_tau_inverse) error_at(at, "t^-1 requires the tau-inverse option");
        unit = h_.tau_inverse();
      } else {
        error_at(at, "negative powers apply only to scalars, s<k> and t");
      }
      e = -e;
    }
    Element out = unit;
    for (long k = 1; k < e; ++k) out = h_.multiply(out, unit);
    return {std::move(out), Kind::Other};
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9) error_at(start, "integer too long for an index or exponent");
    return std::stol(digits);
  }

  Value primary() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element value = expression();
      if (!accept(')')) error("expected ')'");
      return {std::move(value), Kind::Other};
    }
    if (c == '[') {
      ++pos_;
      if (accept(']')) return {h_.one(), Kind::Scalar};
      Element value = expression();
      if (!accept(']')) error("expected ']'");
      return {std::move(value), Kind::Other};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const Rational r(mpz_class(std::string(text_.substr(at, pos_ - at))));
      return {scalar(Scalar(r)), Kind::Scalar};
    }
    for (const auto& [name, var] : {std::pair{"alpha", kVarAlpha}, std::pair{"beta", kVarBeta},
                                    std::pair{"gamma", kVarGamma}, std::pair{"delta", kVarDelta}}) {
      const std::string_view n(name);
      if (text_.substr(pos_, n.size()) == n) {
        pos_ += n.size();
        return {scalar(Scalar::variable(var)), Kind::Scalar};
      }
    }
    ++pos_;
    switch (c) {
      case 'q':
        return {scalar(Scalar::q()), Kind::Scalar};
      case 'v': {
        const long k = integer();
        if (k < 1 || k > h_.params().m) range_error(at, "parameter v" + std::to_string(k) + " out of range");
        return {scalar(Scalar::v(static_cast<int>(k))), Kind::Scalar};
      }
      case 't':
        if (h_.params().n < 1) range_error(at, "generator t out of range");
        return {h_.generator(Letter::tau()), Kind::Tau};
      case 's': {
        const long k = integer();
        if (k < 1 || k >= h_.params().n) range_error(at, "generator s" + std::to_string(k) + " out of range");
        const int i = static_cast<int>(k);
        return {h_.generator(Letter::sigma(i)), Kind::Sigma, i};
      }
      default:
        error_at(at, "unexpected character '" + std::string(1, c) + "'");
    }
  }

  const Algebra& h_;
  std::string_view text_;
  ExpressionOptions options_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_expression(const Algebra& h, std::string_view text, const ExpressionOptions& options) {
  return ExpressionParser(h, text, options).parse();
}

}  // namespace hecke
