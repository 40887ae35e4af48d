#include "hecke/seminormal.hpp"

#include <algorithm>
#include <map>

namespace hecke {

namespace {

StandardMTableau remove_largest(const StandardMTableau& t, const MPartition& restricted) {
  std::vector<Node> pos = t.positions();
  pos.pop_back();
  return StandardMTableau(restricted, std::move(pos));
}

}  // namespace

std::size_t Representation::index_of(const StandardMTableau& t) const {
  auto found = std::find(basis.begin(), basis.end(), t);
  if (found == basis.end()) fail(ErrorCode::InvalidArgument, "tableau not in representation basis");
  return static_cast<std::size_t>(found - basis.begin());
}

Representation build_representation(const MPartition& shape) {
  shape.validate();
  Representation rep;
  rep.shape = shape;
  rep.basis = enumerate_standard_tableaux(shape);
  const int n = shape.size();
  const std::size_t dim = rep.basis.size();
  if (n == 0) return rep;

  std::map<StandardMTableau, std::size_t> index;
  for (std::size_t k = 0; k < dim; ++k) index.emplace(rep.basis[k], k);

  std::vector<std::vector<Scalar>> contents;
  contents.reserve(dim);
  for (const StandardMTableau& t : rep.basis) contents.push_back(content_scalars(content_string(t)));

  const Scalar& c = q_diff();
  const Scalar q = Scalar::q();
  const Scalar qi = Scalar::q(-1);

  rep.tau = ScalarMatrix(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) rep.tau(k, k) = contents[k][0];

  for (int i = 1; i < n; ++i) {
    ScalarMatrix s(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const Scalar& a = contents[k][i - 1];
      const Scalar& b = contents[k][i];
      s(k, k) = -(c * b) / (a - b);
      if (auto swapped = apply_transposition(rep.basis[k], i)) {
        s(index.at(*swapped), k) = (q * b - qi * a) / (b - a);
      }
    }
    rep.sigma.push_back(std::move(s));
  }
  return rep;
}

ScalarMatrix jm_matrix(const Representation& rep, int i) {
  if (i < 1 || i > rep.n()) {
    fail(ErrorCode::OutOfRange, "Jucys-Murphy index " + std::to_string(i) + " out of range 1.." +
                                    std::to_string(rep.n()));
  }
  ScalarMatrix out = rep.tau;
  for (int k = 1; k < i; ++k) out = rep.sigma[k - 1] * out * rep.sigma[k - 1];
  return out;
}

bool verify_defining_relations(const Representation& rep) {
  const int n = rep.n();
  if (n == 0) return true;
  const std::size_t dim = rep.dimension();
  const ScalarMatrix id = ScalarMatrix::identity(dim);
  const ScalarMatrix& t = rep.tau;
  const Scalar& c = q_diff();

  ScalarMatrix cyclotomic = id;
  for (int j = 1; j <= rep.m(); ++j) cyclotomic = (t - id.scaled(Scalar::v(j))) * cyclotomic;
  if (!(cyclotomic == ScalarMatrix(dim, dim))) return false;

  for (int i = 1; i < n; ++i) {
    const ScalarMatrix& si = rep.sigma[i - 1];
    if (!(si * si == si.scaled(c) + id)) return false;
    if (i == 1) {
      if (!(t * si * t * si == si * t * si * t)) return false;
    } else if (!(t * si == si * t)) {
      return false;
    }
    if (i + 1 < n) {
      const ScalarMatrix& sj = rep.sigma[i];
      if (!(si * sj * si == sj * si * sj)) return false;
    }
    for (int k = i + 2; k < n; ++k) {
      const ScalarMatrix& sk = rep.sigma[k - 1];
      if (!(si * sk == sk * si)) return false;
    }
  }
  return true;
}

std::vector<RestrictionBlock> restriction_blocks(const Representation& rep) {
  const int n = rep.n();
  if (n < 1) fail(ErrorCode::InvalidArgument, "restriction requires n >= 1");
  std::vector<RestrictionBlock> blocks;
  for (std::size_t k = 0; k < rep.dimension(); ++k) {
    const Node& node = rep.basis[k].node(n);
    auto it = std::find_if(blocks.begin(), blocks.end(),
                           [&](const RestrictionBlock& b) { return b.removed == node; });
    if (it == blocks.end()) {
      RestrictionBlock b;
      b.removed = node;
      b.restricted = rep.shape;
      YoungDiagram& rows = b.restricted.components[node.component];
      if (--rows[node.row] == 0) rows.pop_back();
      blocks.push_back(std::move(b));
      it = blocks.end() - 1;
    }
    it->indices.push_back(k);
  }
  return blocks;
}

bool verify_restriction(const Representation& rep) {
  const int n = rep.n();
  for (const RestrictionBlock& block : restriction_blocks(rep)) {
    const Representation sub = build_representation(block.restricted);
    std::vector<std::size_t> sub_index;
    for (std::size_t k : block.indices) {
      sub_index.push_back(sub.index_of(remove_largest(rep.basis[k], block.restricted)));
    }
    std::vector<const ScalarMatrix*> big;
    std::vector<const ScalarMatrix*> small;
    if (n >= 2) {
      big.push_back(&rep.tau);
      small.push_back(&sub.tau);
    }
    for (int i = 1; i <= n - 2; ++i) {
      big.push_back(&rep.sigma[i - 1]);
      small.push_back(&sub.sigma[i - 1]);
    }
    for (std::size_t g = 0; g < big.size(); ++g) {
      const ScalarMatrix& a = *big[g];
      const ScalarMatrix& b = *small[g];
      for (std::size_t row = 0; row < rep.dimension(); ++row) {
        const auto pos = std::find(block.indices.begin(), block.indices.end(), row);
        for (std::size_t col = 0; col < block.indices.size(); ++col) {
          const Scalar& entry = a(row, block.indices[col]);
          if (pos == block.indices.end()) {
            if (!entry.is_zero()) return false;
          } else {
            const std::size_t r = static_cast<std::size_t>(pos - block.indices.begin());
            if (!(entry == b(sub_index[r], sub_index[col]))) return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace hecke
