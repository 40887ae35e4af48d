#pragma once

// m-partitions, standard m-tableaux and content strings.
//
// Indices are 0-based internally: component k, row r and column s of a node
// correspond to the content v_{k+1} q^{2(s-r)}.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

using YoungDiagram = std::vector<int>;

struct MPartition {
  std::vector<YoungDiagram> components;

  int m() const { return static_cast<int>(components.size()); }
  int size() const;
  // Throws InvalidArgument unless every component is a weakly decreasing
  // list of positive integers.
  void validate() const;

  // Nested-list text form, e.g. "[[2,1],[],[1]]".
  std::string to_string() const;
  static MPartition parse(std::string_view text);

  auto operator<=>(const MPartition&) const = default;
};

struct Node {
  int component = 0;
  int row = 0;
  int col = 0;

  int diagonal() const { return col - row; }
  auto operator<=>(const Node&) const = default;
};

// The content v_{component+1} q^{2 diagonal}, kept structurally.
struct Content {
  int component = 0;
  int diagonal = 0;

  Scalar to_scalar() const;
  auto operator<=>(const Content&) const = default;
};

using ContentString = std::vector<Content>;

class StandardMTableau {
 public:
  StandardMTableau() = default;
  // `positions[i]` is the node holding label i + 1. Throws InvalidArgument
  // unless the filling is a standard m-tableau of `shape`.
  StandardMTableau(MPartition shape, std::vector<Node> positions);

  const MPartition& shape() const { return shape_; }
  int size() const { return static_cast<int>(positions_.size()); }
  // Node of label i, 1 <= i <= n.
  const Node& node(int label) const;
  const std::vector<Node>& positions() const { return positions_; }

  // Per component, per row, the labels left to right.
  std::vector<std::vector<std::vector<int>>> filling() const;
  std::string to_string() const;

  auto operator<=>(const StandardMTableau&) const = default;

 private:
  MPartition shape_;
  std::vector<Node> positions_;
};

// True iff `positions` fills `shape` bijectively with entries increasing
// along rows and down columns of each component.
bool is_standard_filling(const MPartition& shape, std::span<const Node> positions);

// All m-partitions of n. Component 1 takes the largest share first, and
// partitions of a fixed size come in reverse lexicographic order.
std::vector<MPartition> enumerate_mpartitions(int m, int n);

// Standard fillings of `shape`, placing n first at each removable corner in
// reverse (component, row) order, then n - 1, and so on. For ((1),(1)) the
// tableau with 1 in the first component comes first.
std::vector<StandardMTableau> enumerate_standard_tableaux(const MPartition& shape);

// Number of standard fillings; throws Overflow past 2^64.
std::uint64_t count_standard_tableaux(const MPartition& shape);

// v_k q^{2(s-r)} for the node labeled i.
Scalar content(const StandardMTableau& t, int i);
ContentString content_string(const StandardMTableau& t);
std::vector<Scalar> content_scalars(const ContentString& s);

// Reads a scalar of the form v_k q^{2z} with k <= m.
std::optional<Content> as_content(const Scalar& s, int m);

bool is_content_string(const ContentString& s, int m);
// False as soon as an entry is not a monomial v_k q^{2z}.
bool is_content_string(std::span<const Scalar> s, int m);

// Inverse of content_string; throws InvalidContentString.
StandardMTableau tableau_from_content_string(const ContentString& s, int m);

// The filling with i and i + 1 exchanged, or nullopt when it is not standard.
std::optional<StandardMTableau> apply_transposition(const StandardMTableau& t, int i);

std::string content_string_to_string(const ContentString& s);

}  // namespace hecke
