#include "hecke/verify.hpp"

#include <mutex>
#include <random>
#include <set>

namespace hecke {

namespace {

// Images of u_k factors for every block, and products of normal words
// evaluated along shared prefixes.
template <typename T>
class Evaluator {
 public:
  Evaluator(int n, int m, std::vector<std::size_t> dims, std::vector<Matrix<T>> tau,
            std::vector<std::vector<Matrix<T>>> sigma, const T& c)
      : n_(n), m_(m), dims_(std::move(dims)) {
    const std::size_t blocks = dims_.size();
    factors_.resize(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      const Matrix<T> id = Matrix<T>::identity(dims_[b]);
      std::vector<Matrix<T>> inv;
      for (const Matrix<T>& s : sigma[b]) inv.push_back(s - id.scaled(c));
      factors_[b].resize(static_cast<std::size_t>(n) + 1);
      for (int k = 1; k <= n; ++k) {
        auto& table = factors_[b][k];
        table.resize(static_cast<std::size_t>(k * m));
        for (int j = 0; j < k; ++j) {
          for (int alpha = 0; alpha < m; ++alpha) {
            Matrix<T> x = id;
            if (alpha == 0) {
              for (int i = j + 1; i <= k - 1; ++i) x = x * sigma[b][i - 1];
            } else {
              for (int i = j; i >= 1; --i) x = x * inv[i - 1];
              for (int a = 0; a < alpha; ++a) x = x * tau[b];
              for (int i = 1; i <= k - 1; ++i) x = x * sigma[b][i - 1];
            }
            table[j * m + alpha] = std::move(x);
          }
        }
      }
    }
  }

  std::size_t blocks() const { return dims_.size(); }

  // sum_i coeffs[i] * phi(keys[i]) for sorted, distinct keys. Keys sharing
  // their top factors are grouped, so each trie node costs one product.
  std::vector<Matrix<T>> linear_combination(const std::vector<std::uint64_t>& keys,
                                            const std::vector<T>& coeffs) const {
    std::vector<std::vector<Factor>> words;
    words.reserve(keys.size());
    for (std::uint64_t key : keys) words.push_back(NormalWord::from_key(key, n_).factors());
    std::vector<Matrix<T>> out;
    for (std::size_t b = 0; b < dims_.size(); ++b) {
      out.push_back(combine(b, words, coeffs, n_, 0, words.size()));
    }
    return out;
  }

  // visit(index, images) for each key in `keys`, which must be sorted.
  template <typename F>
  void for_each(const std::vector<std::uint64_t>& keys, F&& visit) const {
    const std::size_t blocks = dims_.size();
    // prefix[b][k] = phi(u_n ... u_k), prefix[b][n + 1] = identity.
    std::vector<std::vector<Matrix<T>>> prefix(blocks, std::vector<Matrix<T>>(static_cast<std::size_t>(n_) + 2));
    for (std::size_t b = 0; b < blocks; ++b) prefix[b][n_ + 1] = Matrix<T>::identity(dims_[b]);
    std::vector<Factor> previous;
    std::vector<Matrix<T>> images(blocks);
    for (std::size_t idx = 0; idx < keys.size(); ++idx) {
      const NormalWord w = NormalWord::from_key(keys[idx], n_);
      int start = n_;  // highest level that must be recomputed
      if (!previous.empty()) {
        while (start >= 1 && w.factor(start) == previous[n_ - start]) --start;
      }
      for (std::size_t b = 0; b < blocks; ++b) {
        for (int k = start; k >= 1; --k) {
          const Factor& f = w.factor(k);
          prefix[b][k] = prefix[b][k + 1] * factors_[b][k][f.j * m_ + f.alpha];
        }
        images[b] = prefix[b][1];
      }
      previous = w.factors();
      visit(idx, images);
    }
  }

 private:
  // Words in [lo, hi) agree above level k; factors are stored from level n down.
  Matrix<T> combine(std::size_t b, const std::vector<std::vector<Factor>>& words, const std::vector<T>& coeffs, int k,
                    std::size_t lo, std::size_t hi) const {
    Matrix<T> acc(dims_[b], dims_[b]);
    if (k == 0) {
      for (std::size_t r = 0; r < dims_[b]; ++r) acc(r, r) = coeffs[lo];
      return acc;
    }
    const std::size_t slot = static_cast<std::size_t>(n_ - k);
    for (std::size_t i = lo; i < hi;) {
      std::size_t end = i + 1;
      while (end < hi && words[end][slot] == words[i][slot]) ++end;
      const Factor& f = words[i][slot];
      const Matrix<T>& x = factors_[b][k][f.j * m_ + f.alpha];
      if (k == 1) {
        acc += x.scaled(coeffs[i]);
      } else {
        acc += x * combine(b, words, coeffs, k - 1, i, end);
      }
      i = end;
    }
    return acc;
  }

  int n_;
  int m_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<std::vector<Matrix<T>>>> factors_;  // [block][level][j * m + alpha]
};

std::vector<std::uint64_t> keys_of(const Element& e) {
  std::vector<std::uint64_t> keys;
  keys.reserve(e.size());
  for (const auto& [key, coeff] : e.terms()) keys.push_back(key);
  return keys;
}

template <typename T>
std::vector<Matrix<T>> zero_blocks(const std::vector<Representation>& blocks) {
  std::vector<Matrix<T>> out;
  for (const Representation& r : blocks) out.emplace_back(r.dimension(), r.dimension());
  return out;
}

void require_same_params(const Element& e, const GlobalRep& g) {
  if (e.params() != g.params()) {
    fail(ErrorCode::ParamsMismatch, "element of " + e.params().to_string() + " evaluated in a representation of " +
                                        g.params().to_string());
  }
}

std::uint64_t checked_group_order(int m, int n) {
  std::uint64_t order = 1;
  for (int k = 1; k <= n; ++k) {
    if (__builtin_mul_overflow(order, static_cast<std::uint64_t>(k * m), &order)) {
      fail(ErrorCode::Overflow, "n! m^n exceeds 64 bits");
    }
  }
  return order;
}

}  // namespace

struct GlobalRep::Evaluators {
  std::once_flag numeric_once;
  std::unique_ptr<Evaluator<Rational>> numeric;
  std::once_flag symbolic_once;
  std::unique_ptr<Evaluator<Scalar>> symbolic;
};

namespace {

const Evaluator<Rational>& numeric_evaluator(const GlobalRep& g) {
  if (!g.is_numeric()) fail(ErrorCode::InvalidArgument, "numeric evaluation needs a parameter specialization");
  auto& ev = g.evaluators();
  std::call_once(ev.numeric_once, [&] {
    std::vector<std::size_t> dims;
    std::vector<RationalMatrix> tau;
    std::vector<std::vector<RationalMatrix>> sigma;
    for (std::size_t b = 0; b < g.blocks().size(); ++b) {
      dims.push_back(g.blocks()[b].dimension());
      tau.push_back(g.numeric_blocks()[b].tau);
      sigma.push_back(g.numeric_blocks()[b].sigma);
    }
    ev.numeric = std::make_unique<Evaluator<Rational>>(g.params().n, g.params().m, std::move(dims), std::move(tau),
                                                       std::move(sigma), substitute(q_diff(), *g.spec()));
  });
  return *ev.numeric;
}

const Evaluator<Scalar>& symbolic_evaluator(const GlobalRep& g) {
  auto& ev = g.evaluators();
  std::call_once(ev.symbolic_once, [&] {
    std::vector<std::size_t> dims;
    std::vector<ScalarMatrix> tau;
    std::vector<std::vector<ScalarMatrix>> sigma;
    for (const Representation& r : g.blocks()) {
      dims.push_back(r.dimension());
      tau.push_back(r.tau);
      sigma.push_back(r.sigma);
    }
    ev.symbolic = std::make_unique<Evaluator<Scalar>>(g.params().n, g.params().m, std::move(dims), std::move(tau),
                                                      std::move(sigma), q_diff());
  });
  return *ev.symbolic;
}

}  // namespace

// ---------------------------------------------------------------------------

GlobalRep GlobalRep::symbolic(AlgebraParams params) {
  params.validate();
  GlobalRep g;
  g.params_ = params;
  for (const MPartition& shape : enumerate_mpartitions(params.m, params.n)) {
    g.blocks_.push_back(build_representation(shape));
  }
  g.evaluators_ = std::make_shared<Evaluators>();
  return g;
}

GlobalRep GlobalRep::numeric(AlgebraParams params, const ParamSpec& spec) {
  params.validate();
  spec.validate();
  if (spec.m != params.m) {
    fail(ErrorCode::ParamsMismatch, "parameter values for m = " + std::to_string(spec.m) + " used with m = " +
                                        std::to_string(params.m));
  }
  if (!is_semisimple_spec(spec, params.n)) {
    fail(ErrorCode::NotSemisimple, "specialization " + spec.to_string() + " is not semisimple for n = " +
                                       std::to_string(params.n));
  }
  GlobalRep g = symbolic(params);
  g.spec_ = spec;
  for (const Representation& r : g.blocks_) {
    NumericBlock nb;
    nb.tau = specialize(r.tau, spec);
    for (const ScalarMatrix& s : r.sigma) nb.sigma.push_back(specialize(s, spec));
    g.numeric_.push_back(std::move(nb));
  }
  return g;
}

std::size_t GlobalRep::total_dimension() const {
  std::size_t total = 0;
  for (const Representation& r : blocks_) total += r.dimension();
  return total;
}

std::uint64_t GlobalRep::sum_of_squares() const {
  std::uint64_t total = 0;
  for (const Representation& r : blocks_) total += static_cast<std::uint64_t>(r.dimension() * r.dimension());
  return total;
}

RationalBlocks phi(const Element& e, const GlobalRep& g) {
  require_same_params(e, g);
  const auto& ev = numeric_evaluator(g);
  if (e.terms().empty()) return zero_blocks<Rational>(g.blocks());
  std::vector<Rational> coeffs;
  coeffs.reserve(e.size());
  for (const auto& [key, coeff] : e.terms()) coeffs.push_back(substitute(coeff, *g.spec()));
  return ev.linear_combination(keys_of(e), coeffs);
}

ScalarBlocks phi_symbolic(const Element& e, const GlobalRep& g) {
  require_same_params(e, g);
  const auto& ev = symbolic_evaluator(g);
  if (e.terms().empty()) return zero_blocks<Scalar>(g.blocks());
  std::vector<Scalar> coeffs;
  coeffs.reserve(e.size());
  for (const auto& [key, coeff] : e.terms()) coeffs.push_back(coeff);
  return ev.linear_combination(keys_of(e), coeffs);
}

bool oracle_equal(const Element& a, const Element& b, const GlobalRep& g) {
  if (g.is_numeric()) return phi(a, g) == phi(b, g);
  return phi_symbolic(a, g) == phi_symbolic(b, g);
}

std::vector<std::vector<Rational>> basis_images(const Algebra& h, const GlobalRep& g) {
  if (h.params() != g.params()) fail(ErrorCode::ParamsMismatch, "algebra and representation differ");
  const auto& ev = numeric_evaluator(g);
  std::vector<std::uint64_t> keys;
  for (const NormalWord& w : h.enumerate_basis()) keys.push_back(w.key());
  std::vector<std::vector<Rational>> rows(keys.size());
  ev.for_each(keys, [&](std::size_t idx, const std::vector<RationalMatrix>& images) {
    auto& row = rows[idx];
    for (const RationalMatrix& m : images) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      }
    }
  });
  return rows;
}

InjectivityReport injectivity_report(const Algebra& h, const GlobalRep& g) {
  const auto rows = basis_images(h, g);
  InjectivityReport report;
  report.basis_size = rows.size();
  if (rows.empty()) return report;
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  report.rank = rank(m);
  return report;
}

MorphismReport morphism_report(const Algebra& h, const GlobalRep& g, std::size_t pairs, std::uint64_t seed) {
  if (h.params() != g.params()) fail(ErrorCode::ParamsMismatch, "algebra and representation differ");
  const auto basis = h.enumerate_basis();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  MorphismReport report;
  report.seed = seed;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Element a = Element::basis(h.params(), basis[pick(rng)]);
    const Element b = Element::basis(h.params(), basis[pick(rng)]);
    const RationalBlocks pa = phi(a, g);
    const RationalBlocks pb = phi(b, g);
    const RationalBlocks pab = phi(h.multiply(a, b), g);
    bool ok = true;
    for (std::size_t k = 0; k < pa.size() && ok; ++k) ok = pab[k] == pa[k] * pb[k];
    ++report.pairs;
    if (!ok) ++report.failures;
  }
  return report;
}

FlatnessReport flatness_report(const Algebra& h) {
  const auto basis = h.enumerate_basis();
  FlatnessReport report;
  for (const NormalWord& a : basis) {
    const Element ea = Element::basis(h.params(), a);
    for (const NormalWord& b : basis) {
      const Element p = h.multiply(ea, Element::basis(h.params(), b));
      ++report.products;
      for (const auto& [key, coeff] : p.terms()) {
        ++report.coefficients;
        if (!coeff.is_laurent_unit_denominator()) ++report.non_laurent;
      }
    }
  }
  return report;
}

SpectrumReport spectrum_report(const GlobalRep& g) {
  const int n = g.params().n;
  const int m = g.params().m;
  SpectrumReport report;
  std::set<std::vector<std::string>> seen;
  std::set<std::vector<std::string>> from_tableaux;
  for (const Representation& rep : g.blocks()) {
    std::vector<ScalarMatrix> jm;
    for (int i = 1; i <= n; ++i) {
      jm.push_back(jm_matrix(rep, i));
      if (!jm.back().is_diagonal()) report.jm_diagonal = false;
    }
    for (std::size_t k = 0; k < rep.dimension(); ++k) {
      SpectrumEntry entry{rep.shape, rep.basis[k], {}};
      std::vector<std::string> text;
      for (int i = 1; i <= n; ++i) {
        entry.jm_diagonal.push_back(jm[i - 1](k, k));
        text.push_back(entry.jm_diagonal.back().to_string());
      }
      if (!is_content_string(entry.jm_diagonal, m)) report.all_content_strings = false;
      if (!seen.insert(text).second) report.pairwise_distinct = false;
      std::vector<std::string> expected;
      for (const Scalar& s : content_scalars(content_string(rep.basis[k]))) expected.push_back(s.to_string());
      from_tableaux.insert(std::move(expected));
      report.entries.push_back(std::move(entry));
    }
  }
  report.matches_tableaux = seen == from_tableaux;
  return report;
}

CompletenessReport completeness_report(int m, int n) {
  AlgebraParams{m, n}.validate();
  CompletenessReport report;
  report.m = m;
  report.n = n;
  for (const MPartition& shape : enumerate_mpartitions(m, n)) {
    const std::uint64_t d = count_standard_tableaux(shape);
    report.dimensions.emplace_back(shape, d);
    std::uint64_t square = 0;
    if (__builtin_mul_overflow(d, d, &square) ||
        __builtin_add_overflow(report.sum_of_squares, square, &report.sum_of_squares)) {
      fail(ErrorCode::Overflow, "sum of squared dimensions exceeds 64 bits");
    }
  }
  report.group_order = checked_group_order(m, n);
  return report;
}

RelationsReport relations_report(AlgebraParams params) {
  params.validate();
  RelationsReport report;
  for (const MPartition& shape : enumerate_mpartitions(params.m, params.n)) {
    const Representation rep = build_representation(shape);
    ++report.shapes;
    const bool ok = verify_defining_relations(rep) && (params.n == 0 || verify_restriction(rep));
    if (!ok) report.failures.push_back(shape);
  }
  return report;
}

bool CheckReport::ok() const {
  return completeness.equal() && spectrum.ok() && (!relations || relations->ok()) &&
         (!injectivity || injectivity->ok()) && morphism.ok() && (!flatness || flatness->ok());
}

CheckReport run_check(AlgebraParams params, const CheckOptions& options) {
  params.validate();
  CheckReport report;
  report.params = params;
  report.spec = options.spec.value_or(default_param_spec(params.m));
  const GlobalRep g = GlobalRep::numeric(params, report.spec);
  const Algebra h(params);

  report.completeness = completeness_report(params.m, params.n);
  report.spectrum = spectrum_report(g);
  if (params.n <= options.max_symbolic_n) {
    report.relations = relations_report(params);
  } else {
    report.skipped.push_back("relations: n above " + std::to_string(options.max_symbolic_n));
  }
  const std::uint64_t size = h.basis_size();
  if (size <= options.max_rank_basis) {
    report.injectivity = injectivity_report(h, g);
  } else {
    report.skipped.push_back("injectivity: basis size above " + std::to_string(options.max_rank_basis));
  }
  report.morphism = morphism_report(h, g, options.morphism_pairs, options.seed);
  if (size <= options.max_flatness_basis) {
    report.flatness = flatness_report(h);
  } else {
    report.skipped.push_back("flatness: basis size above " + std::to_string(options.max_flatness_basis));
  }
  return report;
}

}  // namespace hecke
