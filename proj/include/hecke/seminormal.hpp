#pragma once

// Seminormal irreducible representations on the span of standard m-tableaux.
//
// sigma_i sends the basis vector X to
//   -(q - q^-1) c(X|i+1) / (c(X|i) - c(X|i+1)) X
//   + (q c(X|i+1) - q^-1 c(X|i)) / (c(X|i+1) - c(X|i)) X s_i,
// where X s_i is dropped when it is not standard; tau acts by c(X|1).

#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/scalar.hpp"
#include "hecke/tableaux.hpp"

namespace hecke {

struct Representation {
  MPartition shape;
  std::vector<StandardMTableau> basis;
  // Empty (0 x 0) when n = 0: the trivial module of the ground field.
  ScalarMatrix tau;
  std::vector<ScalarMatrix> sigma;  // sigma[i - 1] is sigma_i

  int m() const { return shape.m(); }
  int n() const { return shape.size(); }
  std::size_t dimension() const { return basis.size(); }
  // Position of `t` in `basis`; throws InvalidArgument if absent.
  std::size_t index_of(const StandardMTableau& t) const;
};

Representation build_representation(const MPartition& shape);

// sigma_{i-1} ... sigma_1 tau sigma_1 ... sigma_{i-1}.
ScalarMatrix jm_matrix(const Representation& rep, int i);

// Every defining relation of H(m,1,n), with m = rep.m(), as an exact matrix
// identity.
bool verify_defining_relations(const Representation& rep);

struct RestrictionBlock {
  Node removed;             // node holding the letter n
  MPartition restricted;    // shape with that node removed
  std::vector<std::size_t> indices;  // basis positions, ascending
};

// Groups basis tableaux by the node of the letter n, in order of first
// appearance. Requires n >= 1.
std::vector<RestrictionBlock> restriction_blocks(const Representation& rep);

// True iff every block is invariant under tau, sigma_1 .. sigma_{n-2} and the
// induced matrices equal those of build_representation(block.restricted)
// under the tableau correspondence that deletes n.
bool verify_restriction(const Representation& rep);

}  // namespace hecke
