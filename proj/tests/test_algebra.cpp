#include <random>

#include "doctest.h"
#include "hecke/algebra.hpp"
#include "random_scalars.hpp"

using namespace hecke;

namespace {

const Scalar c = q_diff();

Element word_elem(const Algebra& h, std::initializer_list<Letter> w) { return h.reduce(Word(w)); }

NormalWord nw(std::vector<Factor> f, int m) { return NormalWord(std::move(f), m); }

Element random_element(const Algebra& h, const std::vector<NormalWord>& basis, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Element out(h.params());
  for (int i = 0; i < 3; ++i) {
    const int k = coeff(rng);
    Scalar s = k == 0 ? Scalar::q(-1) : Scalar(k);
    out += Element::basis(h.params(), basis[pick(rng)]).scaled(s);
  }
  return out;
}

Element cyclotomic_product(const Algebra& h) {
  Element prod = h.one();
  for (int j = 1; j <= h.params().m; ++j) {
    prod = h.left_act(Letter::tau(), prod) - prod.scaled(Scalar::v(j));
  }
  return prod;
}

}  // namespace

TEST_CASE("reduce examples") {
  {
    Algebra h({1, 2});
    const Element s1 = h.generator(Letter::sigma(1));
    CHECK(word_elem(h, {Letter::sigma(1), Letter::sigma(1)}) == s1.scaled(c) + h.one());
    CHECK(word_elem(h, {Letter::sigma(1), Letter::sigma(1)}).to_string() == "(q - q^-1)*[s1] + 1*[]");
  }
  {
    Algebra h({2, 1});
    const Element t = h.generator(Letter::tau());
    const Element tt = word_elem(h, {Letter::tau(), Letter::tau()});
    CHECK(tt == t.scaled(Scalar::v(1) + Scalar::v(2)) - h.one().scaled(Scalar::v(1) * Scalar::v(2)));
    CHECK(tt.to_string() == "-v1*v2*[] + (v1 + v2)*[t]");
  }
  {
    Algebra h({2, 2});
    const Element r = word_elem(h, {Letter::sigma(1), Letter::tau(), Letter::sigma(1)});
    const Element expected = Element::basis(h.params(), nw({{1, 1}, {0, 0}}, 2)) +
                             Element::basis(h.params(), nw({{0, 1}, {0, 0}}, 2)).scaled(c);
    CHECK(r == expected);
    CHECK(h.jm_element(2) == r);
  }
}

TEST_CASE("reduce range errors") {
  Algebra h({2, 2});
  try {
    (void)h.reduce({Letter::sigma(2)});
    FAIL("expected range error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
  CHECK_THROWS_AS((void)h.jm_element(3), Error);
  CHECK_THROWS_AS((void)h.sigma_inverse_expand(0), Error);
  Algebra h0({3, 0});
  CHECK_THROWS_AS((void)h0.reduce({Letter::tau()}), Error);
  CHECK_THROWS_AS(Algebra({0, 2}), Error);
  CHECK_THROWS_AS(Algebra({8, 2}), Error);
}

TEST_CASE("enumerate_basis") {
  CHECK(Algebra({2, 2}).enumerate_basis().size() == 8);
  CHECK(Algebra({1, 3}).enumerate_basis().size() == 6);
  const auto b0 = Algebra({3, 0}).enumerate_basis();
  REQUIRE(b0.size() == 1);
  CHECK(b0[0].n() == 0);
  const auto b = Algebra({2, 3}).enumerate_basis();
  for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i - 1].key() < b[i].key());
  CHECK(NormalWord::from_key(b[5].key(), 3) == b[5]);
  CHECK(NormalWord::identity(2).to_string().empty());
  CHECK(nw({{1, 1}, {0, 0}}, 2).to_string() == "s1^-1 t s1");
  CHECK(nw({{0, 0}, {0, 1}}, 2).to_string() == "s1 t");
}

TEST_CASE("sigma inverse") {
  Algebra h({2, 3});
  const Element inv = h.sigma_inverse_expand(1);
  CHECK(inv == h.generator(Letter::sigma(1)) - h.one().scaled(c));
  CHECK(h.reduce({Letter::sigma_inverse(1), Letter::sigma(1)}) == h.one());
  CHECK(h.reduce({Letter::sigma(2), Letter::sigma_inverse(2)}) == h.one());
  CHECK(h.multiply(h.tau_inverse(), h.generator(Letter::tau())) == h.one());
  CHECK(h.multiply(h.generator(Letter::tau()), h.tau_inverse()) == h.one());
}

TEST_CASE("tau inverse for m = 3") {
  Algebra h({3, 1});
  CHECK(h.multiply(h.tau_inverse(), h.generator(Letter::tau())) == h.one());
}

TEST_CASE("normal words reduce to themselves") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      Algebra h({m, n});
      for (const NormalWord& w : h.enumerate_basis()) {
        CAPTURE(w.to_string());
        CHECK(h.reduce(w.to_word()) == Element::basis(h.params(), w));
      }
    }
  }
}

TEST_CASE("defining relations lie in the kernel of reduce") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      Algebra h({m, n});
      const Letter t = Letter::tau();
      CHECK(cyclotomic_product(h).is_zero());
      for (int i = 1; i < n; ++i) {
        const Letter si = Letter::sigma(i);
        CHECK(h.reduce({si, si}) == h.generator(si).scaled(c) + h.one());
        if (i + 1 < n) {
          const Letter sj = Letter::sigma(i + 1);
          CHECK(h.reduce({si, sj, si}) == h.reduce({sj, si, sj}));
        }
        for (int k = i + 2; k < n; ++k) {
          const Letter sk = Letter::sigma(k);
          CHECK(h.reduce({si, sk}) == h.reduce({sk, si}));
        }
        if (i == 1) {
          CHECK(h.reduce({t, si, t, si}) == h.reduce({si, t, si, t}));
        } else {
          CHECK(h.reduce({t, si}) == h.reduce({si, t}));
        }
      }
    }
  }
}

TEST_CASE("multiply basics") {
  Algebra h({2, 2});
  std::mt19937_64 rng(7);
  const auto basis = h.enumerate_basis();
  for (int trial = 0; trial < 20; ++trial) {
    const Element x = random_element(h, basis, rng);
    CHECK(h.multiply(h.one(), x) == x);
    CHECK(h.multiply(x, h.one()) == x);
  }
  const Element s1 = h.generator(Letter::sigma(1));
  CHECK(h.multiply(s1, s1) == h.reduce({Letter::sigma(1), Letter::sigma(1)}));
  Algebra other({2, 3});
  CHECK_THROWS_AS((void)h.multiply(s1, other.one()), Error);
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(20240611);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {3, 2}, {1, 4}}) {
    Algebra h({m, n});
    const auto basis = h.enumerate_basis();
    for (int trial = 0; trial < 6; ++trial) {
      const Element a = random_element(h, basis, rng);
      const Element b = random_element(h, basis, rng);
      const Element d = random_element(h, basis, rng);
      CHECK(h.multiply(a, h.multiply(b, d)) == h.multiply(h.multiply(a, b), d));
    }
  }
}

TEST_CASE("Jucys-Murphy elements commute") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {3, 3}, {2, 4}}) {
    Algebra h({m, n});
    CHECK(h.jm_element(1) == h.generator(Letter::tau()));
    for (int i = 1; i <= n; ++i) {
      const Element ji = h.jm_element(i);
      for (int k = i + 1; k <= n; ++k) {
        const Element jk = h.jm_element(k);
        CHECK(h.multiply(ji, jk) == h.multiply(jk, ji));
      }
      for (int k = 1; k < n; ++k) {
        if (k == i - 1 || k == i) continue;
        const Element sk = h.generator(Letter::sigma(k));
        CHECK(h.multiply(ji, sk) == h.multiply(sk, ji));
      }
    }
  }
}

TEST_CASE("structure constants have Laurent denominators") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {1, 3}}) {
    Algebra h({m, n});
    const auto basis = h.enumerate_basis();
    for (const NormalWord& a : basis) {
      for (const NormalWord& b : basis) {
        const Element p = h.multiply(Element::basis(h.params(), a), Element::basis(h.params(), b));
        for (const auto& [key, coeff] : p.terms()) CHECK(coeff.is_laurent_unit_denominator());
      }
    }
  }
}

TEST_CASE("tower embedding") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {3, 2}}) {
    Algebra small({m, n - 1});
    Algebra big({m, n});
    auto extend = [&](const Element& x) {
      std::vector<Element::Term> terms;
      for (const auto& [key, coeff] : x.terms()) {
        std::vector<Factor> f{{n - 1, 0}};
        const NormalWord w = NormalWord::from_key(key, n - 1);
        f.insert(f.end(), w.factors().begin(), w.factors().end());
        terms.emplace_back(NormalWord(f, m).key(), coeff);
      }
      return Element::from_terms(big.params(), std::move(terms));
    };
    const auto basis = small.enumerate_basis();
    for (const NormalWord& a : basis) {
      for (const NormalWord& b : basis) {
        const Element ea = Element::basis(small.params(), a);
        const Element eb = Element::basis(small.params(), b);
        CHECK(extend(small.multiply(ea, eb)) == big.multiply(extend(ea), extend(eb)));
      }
    }
  }
}

TEST_CASE("element rendering") {
  Algebra h({2, 2});
  CHECK(Element(h.params()).to_string() == "0");
  CHECK(h.one().to_string() == "1*[]");
  CHECK(h.one().scaled(-1).to_string() == "-1*[]");
  CHECK(h.generator(Letter::sigma(1)).scaled(Scalar::q(-1)).to_string() == "q^-1*[s1]");
  CHECK(h.one().scaled(Scalar(1) / (Scalar::v(1) - Scalar::v(2))).to_string() == "(1/(v1 - v2))*[]");
}
