#include "hecke/h2bax.hpp"

namespace hecke {

namespace {

ScalarMatrix diag2(const Scalar& a, const Scalar& b) {
  ScalarMatrix m(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

ScalarMatrix one_by_one(const Scalar& a) {
  ScalarMatrix m(1, 1);
  m(0, 0) = a;
  return m;
}

}  // namespace

H2Rep h2_one_dim(const Scalar& a, int sign) {
  if (a.is_zero()) fail(ErrorCode::InvalidArgument, "one-dimensional representation needs a != 0");
  if (sign != 1 && sign != -1) fail(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  H2Rep rep;
  rep.dimension = 1;
  rep.a = a;
  rep.sign = sign;
  rep.x = one_by_one(a);
  rep.y = one_by_one(Scalar::q(2 * sign) * a);
  rep.sigma = one_by_one(Scalar(sign) * Scalar::q(sign));
  return rep;
}

H2Rep h2_two_dim(const Scalar& a, const Scalar& b) {
  if (a == b) fail(ErrorCode::NotDiagonalizable, "b = a: X and Y are not diagonalizable");
  if (b == Scalar::q(2) * a || b == Scalar::q(-2) * a) {
    fail(ErrorCode::Reducible, "b = q^(+-2) a: the representation is reducible");
  }
  const Scalar& c = q_diff();
  const Scalar d = b - a;
  H2Rep rep;
  rep.dimension = 2;
  rep.a = a;
  rep.b = b;
  rep.x = diag2(a, b);
  rep.y = diag2(b, a);
  rep.sigma = ScalarMatrix(2, 2);
  rep.sigma(0, 0) = c * b / d;
  rep.sigma(0, 1) = Scalar(1) - c * c * a * b / (d * d);
  rep.sigma(1, 0) = 1;
  rep.sigma(1, 1) = -(c * a) / d;
  return rep;
}

bool verify_affine_relations(const H2Rep& rep) {
  const ScalarMatrix id = ScalarMatrix::identity(rep.x.rows());
  return rep.x * rep.y == rep.y * rep.x && rep.y == rep.sigma * rep.x * rep.sigma &&
         rep.sigma * rep.sigma == rep.sigma.scaled(q_diff()) + id;
}

bool diagonally_conjugate(const ScalarMatrix& x, const ScalarMatrix& y) {
  if (x.rows() != 2 || x.cols() != 2 || y.rows() != 2 || y.cols() != 2) return false;
  if (!(x(0, 0) == y(0, 0)) || !(x(1, 1) == y(1, 1))) return false;
  for (auto [r, c] : {std::pair{0, 1}, std::pair{1, 0}}) {
    if (x(r, c).is_zero() != y(r, c).is_zero()) return false;
  }
  return x(0, 1) * x(1, 0) == y(0, 1) * y(1, 0);
}

Element baxterize(const Algebra& h, int i, const Scalar& alpha, const Scalar& beta) {
  if (alpha == beta) fail(ErrorCode::EqualSpectralParameters, "Baxterization needs alpha != beta");
  if (i < 1 || i > h.params().n - 1) {
    fail(ErrorCode::OutOfRange, "generator index " + std::to_string(i) + " out of range");
  }
  return h.generator(Letter::sigma(i)) + h.one().scaled(q_diff() * beta / (alpha - beta));
}

Scalar baxter_f(const Scalar& alpha, const Scalar& beta) {
  return (Scalar::q() * alpha - Scalar::q(-1) * beta) / (alpha - beta);
}

BaxterReport verify_baxter_relations(const Algebra& h) {
  const int n = h.params().n;
  const Scalar a = Scalar::variable(kVarAlpha);
  const Scalar b = Scalar::variable(kVarBeta);
  const Scalar g = Scalar::variable(kVarGamma);
  const Scalar d = Scalar::variable(kVarDelta);
  auto bax = [&](int i, const Scalar& x, const Scalar& y) { return baxterize(h, i, x, y); };

  BaxterReport report;
  if (n >= 2) {
    bool ok = true;
    const Scalar rhs = baxter_f(a, b) * baxter_f(b, a);
    for (int i = 1; i < n && ok; ++i) {
      ok = h.multiply(bax(i, a, b), bax(i, b, a)) == h.one().scaled(rhs);
    }
    report.unitarity = ok;
  }
  if (n >= 3) {
    bool ok = true;
    for (int i = 1; i + 1 < n && ok; ++i) {
      const Element lhs = h.multiply(h.multiply(bax(i, a, b), bax(i + 1, a, g)), bax(i, b, g));
      const Element rhs = h.multiply(h.multiply(bax(i + 1, b, g), bax(i, a, g)), bax(i + 1, a, b));
      ok = lhs == rhs;
    }
    report.yang_baxter = ok;
  }
  if (n >= 4) {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i) {
      for (int j = i + 2; j < n && ok; ++j) {
        ok = h.multiply(bax(i, a, b), bax(j, g, d)) == h.multiply(bax(j, g, d), bax(i, a, b));
      }
    }
    report.locality = ok;
  }
  return report;
}

}  // namespace hecke
