#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "hecke/tableaux.hpp"

using namespace hecke;

namespace {

MPartition mp(std::vector<YoungDiagram> comps) { return MPartition{std::move(comps)}; }

// Independent oracle: every m-tuple of row-length vectors inside an n x n box,
// kept when weakly decreasing and of total size n.
std::set<MPartition> brute_force_mpartitions(int m, int n) {
  std::vector<YoungDiagram> diagrams{{}};
  for (int rows = 1; rows <= n; ++rows) {
    std::vector<int> digits(static_cast<std::size_t>(rows), 1);
    while (true) {
      if (std::is_sorted(digits.rbegin(), digits.rend()) &&
          std::accumulate(digits.begin(), digits.end(), 0) <= n) {
        diagrams.push_back(digits);
      }
      std::size_t pos = 0;
      while (pos < digits.size() && digits[pos] == n) digits[pos++] = 1;
      if (pos == digits.size()) break;
      ++digits[pos];
    }
  }
  std::set<MPartition> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
  while (true) {
    MPartition p;
    for (std::size_t idx : pick) p.components.push_back(diagrams[idx]);
    if (p.size() == n) out.insert(p);
    std::size_t pos = 0;
    while (pos < pick.size() && pick[pos] + 1 == diagrams.size()) pick[pos++] = 0;
    if (pos == pick.size()) break;
    ++pick[pos];
  }
  return out;
}

// Independent oracle: all label permutations on the node list, checked for
// increase along rows and columns directly.
std::size_t brute_force_standard_count(const MPartition& shape) {
  std::vector<Node> nodes;
  for (int c = 0; c < shape.m(); ++c) {
    for (int r = 0; r < static_cast<int>(shape.components[c].size()); ++r) {
      for (int s = 0; s < shape.components[c][r]; ++s) nodes.push_back(Node{c, r, s});
    }
  }
  std::vector<int> labels(nodes.size());
  std::iota(labels.begin(), labels.end(), 1);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < nodes.size() && ok; ++a) {
      for (std::size_t b = 0; b < nodes.size() && ok; ++b) {
        const Node& x = nodes[a];
        const Node& y = nodes[b];
        if (x.component != y.component) continue;
        const bool right = x.row == y.row && y.col == x.col + 1;
        const bool down = x.col == y.col && y.row == x.row + 1;
        if ((right || down) && labels[a] > labels[b]) ok = false;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return count;
}

StandardMTableau row_tableau_12() {
  return StandardMTableau(mp({{2}}), {Node{0, 0, 0}, Node{0, 0, 1}});
}

}  // namespace

TEST_CASE("enumerate_mpartitions") {
  const auto p22 = enumerate_mpartitions(2, 2);
  REQUIRE(p22.size() == 5);
  CHECK(p22[0] == mp({{2}, {}}));
  CHECK(p22[1] == mp({{1, 1}, {}}));
  CHECK(p22[2] == mp({{1}, {1}}));
  CHECK(p22[3] == mp({{}, {2}}));
  CHECK(p22[4] == mp({{}, {1, 1}}));
  CHECK(enumerate_mpartitions(1, 3).size() == 3);
  CHECK(enumerate_mpartitions(3, 0).size() == 1);

  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 4; ++n) {
      const auto listed = enumerate_mpartitions(m, n);
      const std::set<MPartition> as_set(listed.begin(), listed.end());
      CHECK(as_set.size() == listed.size());
      CHECK(as_set == brute_force_mpartitions(m, n));
    }
  }
}

TEST_CASE("m-partition text form") {
  const MPartition p = MPartition::parse("[[2,1],[],[1]]");
  CHECK(p == mp({{2, 1}, {}, {1}}));
  CHECK(p.to_string() == "[[2,1],[],[1]]");
  CHECK(p.size() == 4);
  CHECK_THROWS_AS(MPartition::parse("[[1,2]]"), Error);
  CHECK_THROWS_AS(MPartition::parse("[[1,"), Error);
  CHECK_THROWS_AS(MPartition::parse("[[0]]"), Error);
}

TEST_CASE("enumerate_standard_tableaux") {
  CHECK(enumerate_standard_tableaux(mp({{1}, {1}})).size() == 2);
  CHECK(enumerate_standard_tableaux(mp({{2}, {}})).size() == 1);
  CHECK(enumerate_standard_tableaux(mp({{2, 1}})).size() == 2);
  const auto split = enumerate_standard_tableaux(mp({{1}, {1}}));
  CHECK(split[0].node(1).component == 0);
  CHECK(split[1].node(1).component == 1);

  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 4; ++n) {
      for (const MPartition& shape : enumerate_mpartitions(m, n)) {
        const auto tabs = enumerate_standard_tableaux(shape);
        CHECK(tabs.size() == brute_force_standard_count(shape));
        CHECK(count_standard_tableaux(shape) == tabs.size());
        CHECK(std::set<StandardMTableau>(tabs.begin(), tabs.end()).size() == tabs.size());
      }
    }
  }
}

TEST_CASE("node contents") {
  const auto q = Scalar::q();
  CHECK(Content{0, 0}.to_scalar() == Scalar::v(1));
  CHECK(Content{1, 1}.to_scalar() == Scalar::v(2) * q * q);
  CHECK(Content{0, -1}.to_scalar() == Scalar::v(1) * Scalar::q(-2));

  const StandardMTableau row = row_tableau_12();
  CHECK(content(row, 1) == Scalar::v(1));
  CHECK(content(row, 2) == Scalar::v(1) * q * q);
  CHECK_THROWS_AS(content(row, 3), Error);
  CHECK(content_scalars(content_string(row)) == std::vector<Scalar>{Scalar::v(1), Scalar::v(1) * q * q});

  const StandardMTableau column(mp({{1, 1}}), {Node{0, 0, 0}, Node{0, 1, 0}});
  CHECK(content_scalars(content_string(column)) ==
        std::vector<Scalar>{Scalar::v(1), Scalar::v(1) * Scalar::q(-2)});

  const StandardMTableau split(mp({{1}, {1}}), {Node{0, 0, 0}, Node{1, 0, 0}});
  CHECK(content_scalars(content_string(split)) == std::vector<Scalar>{Scalar::v(1), Scalar::v(2)});
}

TEST_CASE("is_content_string") {
  const auto v1 = Scalar::v(1);
  const auto q2 = Scalar::q(2);
  CHECK(is_content_string(std::vector<Scalar>{v1, v1 * q2}, 1));
  CHECK_FALSE(is_content_string(std::vector<Scalar>{v1, v1}, 1));
  CHECK_FALSE(is_content_string(std::vector<Scalar>{v1 * q2}, 1));
  CHECK_FALSE(is_content_string(std::vector<Scalar>{v1 + 1}, 1));
  CHECK_FALSE(is_content_string(std::vector<Scalar>{Scalar::v(2)}, 1));
  CHECK(is_content_string(std::vector<Scalar>{Scalar::v(2)}, 2));
  CHECK_FALSE(is_content_string(std::vector<Scalar>{v1 * Scalar::q(1)}, 1));
  CHECK(is_content_string(std::vector<Scalar>{}, 2));
}

TEST_CASE("tableau_from_content_string") {
  CHECK(tableau_from_content_string({{0, 0}, {0, 1}}, 1) == row_tableau_12());
  const StandardMTableau split(mp({{1}, {1}}), {Node{0, 0, 0}, Node{1, 0, 0}});
  CHECK(tableau_from_content_string({{0, 0}, {1, 0}}, 2) == split);
  try {
    (void)tableau_from_content_string({{0, 0}, {0, 0}}, 1);
    FAIL("expected invalid content string");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidContentString);
  }
  for (int n = 0; n <= 4; ++n) {
    for (const MPartition& shape : enumerate_mpartitions(2, n)) {
      for (const StandardMTableau& t : enumerate_standard_tableaux(shape)) {
        CHECK(tableau_from_content_string(content_string(t), 2) == t);
      }
    }
  }
}

TEST_CASE("apply_transposition") {
  CHECK_FALSE(apply_transposition(row_tableau_12(), 1).has_value());
  CHECK_THROWS_AS(apply_transposition(row_tableau_12(), 2), Error);

  const auto split = enumerate_standard_tableaux(mp({{1}, {1}}));
  REQUIRE(split.size() == 2);
  auto swapped = apply_transposition(split[0], 1);
  REQUIRE(swapped.has_value());
  CHECK(*swapped == split[1]);

  // 1 2 / 3  and  1 3 / 2
  const StandardMTableau t(mp({{2, 1}}), {Node{0, 0, 0}, Node{0, 0, 1}, Node{0, 1, 0}});
  const StandardMTableau u(mp({{2, 1}}), {Node{0, 0, 0}, Node{0, 1, 0}, Node{0, 0, 1}});
  auto tu = apply_transposition(t, 2);
  REQUIRE(tu.has_value());
  CHECK(*tu == u);

  for (int m = 1; m <= 3; ++m) {
    for (int n = 2; n <= 4; ++n) {
      for (const MPartition& shape : enumerate_mpartitions(m, n)) {
        for (const StandardMTableau& x : enumerate_standard_tableaux(shape)) {
          for (int i = 1; i < n; ++i) {
            std::vector<Node> raw = x.positions();
            std::swap(raw[i - 1], raw[i]);
            auto y = apply_transposition(x, i);
            CHECK(y.has_value() == is_standard_filling(shape, raw));
            if (y) {
              auto back = apply_transposition(*y, i);
              REQUIRE(back.has_value());
              CHECK(*back == x);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("content strings have distinct neighbours") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 2; n <= 4; ++n) {
      for (const MPartition& shape : enumerate_mpartitions(m, n)) {
        for (const StandardMTableau& t : enumerate_standard_tableaux(shape)) {
          const ContentString s = content_string(t);
          CHECK(is_content_string(s, m));
          for (std::size_t i = 0; i + 1 < s.size(); ++i) CHECK(s[i] != s[i + 1]);
        }
      }
    }
  }
}

TEST_CASE("content strings biject with standard tableaux (m <= 2, n <= 3)") {
  for (int m = 1; m <= 2; ++m) {
    for (int n = 0; n <= 3; ++n) {
      std::set<ContentString> from_tableaux;
      std::size_t tableaux = 0;
      for (const MPartition& shape : enumerate_mpartitions(m, n)) {
        for (const StandardMTableau& t : enumerate_standard_tableaux(shape)) {
          from_tableaux.insert(content_string(t));
          ++tableaux;
        }
      }
      std::set<ContentString> brute;
      std::vector<Content> alphabet;
      for (int k = 0; k < m; ++k) {
        for (int z = -(n - 1); z <= n - 1; ++z) alphabet.push_back(Content{k, z});
      }
      std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
      while (true) {
        ContentString s;
        for (std::size_t i : idx) s.push_back(alphabet[i]);
        if (is_content_string(s, m)) brute.insert(s);
        std::size_t pos = 0;
        while (pos < idx.size() && idx[pos] + 1 == alphabet.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
        ++idx[pos];
      }
      CHECK(from_tableaux.size() == tableaux);
      CHECK(brute == from_tableaux);
    }
  }
}

TEST_CASE("sum of squared tableau counts is n! m^n") {
  for (int m = 1; m <= 3; ++m) {
    std::uint64_t expected = 1;
    for (int n = 0; n <= 5; ++n) {
      if (n > 0) expected *= static_cast<std::uint64_t>(n * m);
      std::uint64_t total = 0;
      for (const MPartition& shape : enumerate_mpartitions(m, n)) {
        const std::uint64_t d = count_standard_tableaux(shape);
        total += d * d;
      }
      CHECK(total == expected);
    }
  }
}
