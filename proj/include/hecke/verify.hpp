#pragma once

// Cross-checks between the rewrite engine and the seminormal
// representations: the evaluation map phi into the direct sum of all
// irreducibles, spectra of the Jucys-Murphy elements and dimension counts.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/matrix.hpp"
#include "hecke/seminormal.hpp"

namespace hecke {

class GlobalRep {
 public:
  // One symbolic block per m-partition of n.
  static GlobalRep symbolic(AlgebraParams params);
  // Symbolic blocks specialized at `spec`. Throws ParamsMismatch when
  // spec.m != params.m and NotSemisimple when is_semisimple_spec fails.
  static GlobalRep numeric(AlgebraParams params, const ParamSpec& spec);

  const AlgebraParams& params() const { return params_; }
  const std::optional<ParamSpec>& spec() const { return spec_; }
  bool is_numeric() const { return spec_.has_value(); }
  const std::vector<Representation>& blocks() const { return blocks_; }
  std::size_t total_dimension() const;
  std::uint64_t sum_of_squares() const;

  struct NumericBlock {
    RationalMatrix tau;
    std::vector<RationalMatrix> sigma;
  };
  const std::vector<NumericBlock>& numeric_blocks() const { return numeric_; }

  // Cached images of the normal-word factors; defined in verify.cpp.
  struct Evaluators;
  Evaluators& evaluators() const { return *evaluators_; }

 private:
  GlobalRep() = default;

  AlgebraParams params_;
  std::optional<ParamSpec> spec_;
  std::vector<Representation> blocks_;
  std::vector<NumericBlock> numeric_;
  std::shared_ptr<Evaluators> evaluators_;
};

using RationalBlocks = std::vector<RationalMatrix>;
using ScalarBlocks = std::vector<ScalarMatrix>;

// Image under a numeric GlobalRep, one matrix per block.
RationalBlocks phi(const Element& e, const GlobalRep& g);
// Image under the symbolic blocks (any GlobalRep).
ScalarBlocks phi_symbolic(const Element& e, const GlobalRep& g);

// phi(a) == phi(b); numeric when g is numeric, symbolic otherwise.
bool oracle_equal(const Element& a, const Element& b, const GlobalRep& g);

// phi of every basis word, in basis order, each flattened block by block
// into a row of length n! m^n.
std::vector<std::vector<Rational>> basis_images(const Algebra& h, const GlobalRep& g);

struct InjectivityReport {
  std::uint64_t basis_size = 0;
  std::size_t rank = 0;
  bool ok() const { return rank == basis_size; }
};
InjectivityReport injectivity_report(const Algebra& h, const GlobalRep& g);

struct MorphismReport {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::uint64_t seed = 0;
  bool ok() const { return failures == 0; }
};
// phi(a b) == phi(a) phi(b) on `pairs` random basis pairs.
MorphismReport morphism_report(const Algebra& h, const GlobalRep& g, std::size_t pairs, std::uint64_t seed);

struct FlatnessReport {
  std::size_t products = 0;
  std::size_t coefficients = 0;
  std::size_t non_laurent = 0;
  bool ok() const { return non_laurent == 0; }
};
// Every structure constant on basis pairs has a pure q-power denominator.
FlatnessReport flatness_report(const Algebra& h);

struct SpectrumEntry {
  MPartition shape;
  StandardMTableau tableau;
  std::vector<Scalar> jm_diagonal;
};
struct SpectrumReport {
  std::vector<SpectrumEntry> entries;
  bool jm_diagonal = true;          // every JM matrix is diagonal
  bool all_content_strings = true;  // every diagonal string passes is_content_string
  bool pairwise_distinct = true;    // across all blocks
  bool matches_tableaux = true;     // equals {content_string(t)}
  bool ok() const { return jm_diagonal && all_content_strings && pairwise_distinct && matches_tableaux; }
};
SpectrumReport spectrum_report(const GlobalRep& g);

struct CompletenessReport {
  int m = 1;
  int n = 0;
  std::vector<std::pair<MPartition, std::uint64_t>> dimensions;
  std::uint64_t sum_of_squares = 0;
  std::uint64_t group_order = 0;
  bool equal() const { return sum_of_squares == group_order; }
};
CompletenessReport completeness_report(int m, int n);

struct RelationsReport {
  std::size_t shapes = 0;
  std::vector<MPartition> failures;
  bool ok() const { return failures.empty(); }
};
// verify_defining_relations and verify_restriction on every shape.
RelationsReport relations_report(AlgebraParams params);

struct CheckOptions {
  std::optional<ParamSpec> spec;  // default_param_spec(m) when absent
  std::uint64_t seed = 20240611;
  std::size_t morphism_pairs = 200;
  std::uint64_t max_rank_basis = 400;        // skip the rank check above this
  std::uint64_t max_flatness_basis = 200;    // skip flatness above this
  int max_symbolic_n = 4;                    // skip symbolic relations above this
};

struct CheckReport {
  AlgebraParams params;
  ParamSpec spec;
  CompletenessReport completeness;
  SpectrumReport spectrum;
  std::optional<RelationsReport> relations;
  std::optional<InjectivityReport> injectivity;
  MorphismReport morphism;
  std::optional<FlatnessReport> flatness;
  std::vector<std::string> skipped;
  bool ok() const;
};

// The full suite for one (m, n). Throws NotSemisimple before any work when
// the specialization is rejected.
CheckReport run_check(AlgebraParams params, const CheckOptions& options);

}  // namespace hecke
