#include "hecke/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace hecke {

namespace {

void partitions_of(int n, int max_part, YoungDiagram& prefix, std::vector<YoungDiagram>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_of(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

std::vector<YoungDiagram> partitions_of(int n) {
  std::vector<YoungDiagram> out;
  YoungDiagram prefix;
  partitions_of(n, n, prefix, out);
  return out;
}

void mpartitions_from(int component, int remaining, MPartition& current,
                      std::vector<MPartition>& out) {
  if (component == current.m()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const bool last = component + 1 == current.m();
  for (int size = remaining; size >= 0; --size) {
    if (last && size != remaining) break;
    for (YoungDiagram& p : partitions_of(size)) {
      current.components[component] = std::move(p);
      mpartitions_from(component + 1, remaining - size, current, out);
    }
  }
  current.components[component].clear();
}

// Removable corners in (component, row) order.
std::vector<Node> removable_corners(const MPartition& shape) {
  std::vector<Node> corners;
  for (int c = 0; c < shape.m(); ++c) {
    const YoungDiagram& rows = shape.components[c];
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      const bool last_row = r + 1 == static_cast<int>(rows.size());
      if (last_row || rows[r + 1] < rows[r]) corners.push_back(Node{c, r, rows[r] - 1});
    }
  }
  return corners;
}

MPartition remove_node(MPartition shape, const Node& node) {
  YoungDiagram& rows = shape.components[node.component];
  if (--rows[node.row] == 0) rows.pop_back();
  return shape;
}

void fill_from_top(const MPartition& shape, int label, std::vector<Node>& positions,
                   const MPartition& full, std::vector<StandardMTableau>& out) {
  if (label == 0) {
    out.emplace_back(full, positions);
    return;
  }
  const std::vector<Node> corners = removable_corners(shape);
  for (auto it = corners.rbegin(); it != corners.rend(); ++it) {
    const Node& corner = *it;
    positions[label - 1] = corner;
    fill_from_top(remove_node(shape, corner), label - 1, positions, full, out);
  }
}

std::uint64_t count_from(const MPartition& shape, std::map<MPartition, std::uint64_t>& memo) {
  if (shape.size() == 0) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (const Node& corner : removable_corners(shape)) {
    if (__builtin_add_overflow(total, count_from(remove_node(shape, corner), memo), &total)) {
      fail(ErrorCode::Overflow, "standard tableau count exceeds 64 bits");
    }
  }
  memo.emplace(shape, total);
  return total;
}

}  // namespace

int MPartition::size() const {
  int n = 0;
  for (const YoungDiagram& d : components) {
    for (int part : d) n += part;
  }
  return n;
}

void MPartition::validate() const {
  if (components.empty()) fail(ErrorCode::InvalidArgument, "an m-partition needs m >= 1 components");
  for (const YoungDiagram& d : components) {
    for (std::size_t r = 0; r < d.size(); ++r) {
      if (d[r] <= 0) fail(ErrorCode::InvalidArgument, "partition parts must be positive");
      if (r > 0 && d[r] > d[r - 1]) {
        fail(ErrorCode::InvalidArgument, "partition parts must be weakly decreasing");
      }
    }
  }
}

std::string MPartition::to_string() const {
  std::string out = "[";
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (c) out += ',';
    out += '[';
    for (std::size_t r = 0; r < components[c].size(); ++r) {
      if (r) out += ',';
      out += std::to_string(components[c][r]);
    }
    out += ']';
  }
  return out + "]";
}

MPartition MPartition::parse(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("m-partition: ") + e.what());
  }
  if (!j.is_array()) fail(ErrorCode::Parse, "m-partition must be a list of lists");
  MPartition p;
  for (const auto& comp : j) {
    if (!comp.is_array()) fail(ErrorCode::Parse, "m-partition components must be lists");
    YoungDiagram d;
    for (const auto& part : comp) {
      if (!part.is_number_integer()) fail(ErrorCode::Parse, "partition parts must be integers");
      d.push_back(part.get<int>());
    }
    p.components.push_back(std::move(d));
  }
  p.validate();
  return p;
}

Scalar Content::to_scalar() const {
  return Scalar::v(component + 1) * Scalar::q(2 * diagonal);
}

bool is_standard_filling(const MPartition& shape, std::span<const Node> positions) {
  if (static_cast<int>(positions.size()) != shape.size()) return false;
  std::vector<std::vector<std::vector<int>>> grid(shape.components.size());
  for (std::size_t c = 0; c < shape.components.size(); ++c) {
    for (int len : shape.components[c]) grid[c].emplace_back(len, 0);
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Node& nd = positions[i];
    if (nd.component < 0 || nd.component >= shape.m()) return false;
    auto& rows = grid[nd.component];
    if (nd.row < 0 || nd.row >= static_cast<int>(rows.size())) return false;
    if (nd.col < 0 || nd.col >= static_cast<int>(rows[nd.row].size())) return false;
    int& cell = rows[nd.row][nd.col];
    if (cell != 0) return false;
    cell = static_cast<int>(i) + 1;
  }
  for (const auto& rows : grid) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t s = 0; s < rows[r].size(); ++s) {
        if (s + 1 < rows[r].size() && rows[r][s] >= rows[r][s + 1]) return false;
        if (r + 1 < rows.size() && s < rows[r + 1].size() && rows[r][s] >= rows[r + 1][s]) {
          return false;
        }
      }
    }
  }
  return true;
}

StandardMTableau::StandardMTableau(MPartition shape, std::vector<Node> positions)
    : shape_(std::move(shape)), positions_(std::move(positions)) {
  if (!is_standard_filling(shape_, positions_)) {
    fail(ErrorCode::InvalidArgument, "filling is not a standard m-tableau");
  }
}

const Node& StandardMTableau::node(int label) const {
  if (label < 1 || label > size()) {
    fail(ErrorCode::OutOfRange, "tableau label " + std::to_string(label) + " out of range");
  }
  return positions_[label - 1];
}

std::vector<std::vector<std::vector<int>>> StandardMTableau::filling() const {
  std::vector<std::vector<std::vector<int>>> grid(shape_.components.size());
  for (std::size_t c = 0; c < shape_.components.size(); ++c) {
    for (int len : shape_.components[c]) grid[c].emplace_back(len, 0);
  }
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    const Node& nd = positions_[i];
    grid[nd.component][nd.row][nd.col] = static_cast<int>(i) + 1;
  }
  return grid;
}

std::string StandardMTableau::to_string() const {
  return nlohmann::json(filling()).dump();
}

std::vector<MPartition> enumerate_mpartitions(int m, int n) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "m must be positive");
  if (n < 0) fail(ErrorCode::InvalidArgument, "n must be nonnegative");
  MPartition current;
  current.components.resize(static_cast<std::size_t>(m));
  std::vector<MPartition> out;
  mpartitions_from(0, n, current, out);
  return out;
}

std::vector<StandardMTableau> enumerate_standard_tableaux(const MPartition& shape) {
  shape.validate();
  std::vector<Node> positions(static_cast<std::size_t>(shape.size()));
  std::vector<StandardMTableau> out;
  fill_from_top(shape, shape.size(), positions, shape, out);
  return out;
}

std::uint64_t count_standard_tableaux(const MPartition& shape) {
  shape.validate();
  std::map<MPartition, std::uint64_t> memo;
  return count_from(shape, memo);
}

Scalar content(const StandardMTableau& t, int i) {
  const Node& nd = t.node(i);
  return Content{nd.component, nd.diagonal()}.to_scalar();
}

ContentString content_string(const StandardMTableau& t) {
  ContentString s;
  s.reserve(t.positions().size());
  for (const Node& nd : t.positions()) s.push_back(Content{nd.component, nd.diagonal()});
  return s;
}

std::vector<Scalar> content_scalars(const ContentString& s) {
  std::vector<Scalar> out;
  out.reserve(s.size());
  for (const Content& c : s) out.push_back(c.to_scalar());
  return out;
}

std::optional<Content> as_content(const Scalar& s, int m) {
  if (!s.is_monomial()) return std::nullopt;
  const Term& num = s.numerator().leading();
  const Term& den = s.denominator().leading();
  if (num.coeff != 1 || den.coeff != 1) return std::nullopt;
  int k = 0;
  for (std::size_t var = 1; var < kNumVariables; ++var) {
    const int e = num.exps[var] - den.exps[var];
    if (e == 0) continue;
    if (e != 1 || var > static_cast<std::size_t>(m) || k != 0) return std::nullopt;
    k = static_cast<int>(var);
  }
  if (k == 0) return std::nullopt;
  const int qexp = num.exps[kVarQ] - den.exps[kVarQ];
  if (qexp % 2 != 0) return std::nullopt;
  return Content{k - 1, qexp / 2};
}

bool is_content_string(const ContentString& s, int m) {
  for (const Content& c : s) {
    if (c.component < 0 || c.component >= m) return false;
  }
  if (s.empty()) return true;
  if (s.front().diagonal != 0) return false;  // (c1)
  for (std::size_t j = 1; j < s.size(); ++j) {  // (c2)
    if (s[j].diagonal == 0) continue;
    const Content below{s[j].component, s[j].diagonal - 1};
    const Content above{s[j].component, s[j].diagonal + 1};
    const auto first = s.begin();
    const auto last = s.begin() + static_cast<std::ptrdiff_t>(j);
    if (std::find(first, last, below) == last && std::find(first, last, above) == last) {
      return false;
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {  // (c3)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] != s[j]) continue;
      const Content below{s[i].component, s[i].diagonal - 1};
      const Content above{s[i].component, s[i].diagonal + 1};
      const auto first = s.begin() + static_cast<std::ptrdiff_t>(i) + 1;
      const auto last = s.begin() + static_cast<std::ptrdiff_t>(j);
      if (std::find(first, last, below) == last || std::find(first, last, above) == last) {
        return false;
      }
    }
  }
  return true;
}

bool is_content_string(std::span<const Scalar> s, int m) {
  ContentString structural;
  structural.reserve(s.size());
  for (const Scalar& x : s) {
    auto c = as_content(x, m);
    if (!c) return false;
    structural.push_back(*c);
  }
  return is_content_string(structural, m);
}

StandardMTableau tableau_from_content_string(const ContentString& s, int m) {
  if (!is_content_string(s, m)) {
    fail(ErrorCode::InvalidContentString,
         "not a content string: " + content_string_to_string(s));
  }
  // The t-th occurrence of diagonal z in a component sits on the t-th node
  // of that diagonal.
  std::map<Content, int> seen;
  std::vector<Node> positions;
  MPartition shape;
  shape.components.resize(static_cast<std::size_t>(m));
  for (const Content& c : s) {
    const int t = seen[c]++;
    const Node nd = c.diagonal >= 0 ? Node{c.component, t, c.diagonal + t}
                                    : Node{c.component, t - c.diagonal, t};
    positions.push_back(nd);
    YoungDiagram& rows = shape.components[c.component];
    if (static_cast<int>(rows.size()) <= nd.row) rows.resize(nd.row + 1, 0);
    rows[nd.row] = std::max(rows[nd.row], nd.col + 1);
  }
  for (const YoungDiagram& rows : shape.components) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r] == 0 || (r > 0 && rows[r] > rows[r - 1])) {
        fail(ErrorCode::InvalidContentString, "content string does not fill a Young diagram");
      }
    }
  }
  if (!is_standard_filling(shape, positions)) {
    fail(ErrorCode::InvalidContentString, "content string does not give a standard filling");
  }
  return StandardMTableau(std::move(shape), std::move(positions));
}

std::optional<StandardMTableau> apply_transposition(const StandardMTableau& t, int i) {
  if (i < 1 || i >= t.size()) {
    fail(ErrorCode::OutOfRange, "transposition index " + std::to_string(i) + " out of range");
  }
  const Node& a = t.node(i);
  const Node& b = t.node(i + 1);
  // i and i + 1 adjacent in a row or column is the only obstruction.
  if (a.component == b.component &&
      ((a.row == b.row && b.col == a.col + 1) || (a.col == b.col && b.row == a.row + 1))) {
    return std::nullopt;
  }
  std::vector<Node> positions = t.positions();
  std::swap(positions[i - 1], positions[i]);
  return StandardMTableau(t.shape(), std::move(positions));
}

std::string content_string_to_string(const ContentString& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s[i].to_scalar().to_string();
  }
  return out + ")";
}

}  // namespace hecke
