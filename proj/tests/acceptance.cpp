// Acceptance gate: one PASS/FAIL line per criterion. All comparisons are
// exact; there are no tolerances.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hecke/h2bax.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::uint64_t group_order(int m, int n) {
  std::uint64_t order = 1;
  for (int k = 1; k <= n; ++k) order *= static_cast<std::uint64_t>(k * m);
  return order;
}

ParamSpec validated_default_spec(int m, int n) {
  const ParamSpec spec = default_param_spec(m);
  if (!is_semisimple_spec(spec, n)) {
    fail(ErrorCode::NotSemisimple, "default spec " + spec.to_string() + " rejected for n = " + std::to_string(n));
  }
  return spec;
}

Outcome dimension() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t largest = 0;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 5; ++n) {
      const std::size_t count = Algebra({m, n}).enumerate_basis().size();
      largest = std::max<std::uint64_t>(largest, count);
      if (count != group_order(m, n)) {
        out.ok = false;
        out.detail += " m=" + std::to_string(m) + ",n=" + std::to_string(n) + ":" + std::to_string(count);
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 10.0) out.ok = false;
  out.detail += " largest=" + std::to_string(largest) + " time=" + std::to_string(secs) + "s";
  return out;
}

Outcome normal_form_soundness() {
  Outcome out;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {3, 3}}) {
    const Algebra h({m, n});
    const GlobalRep g = GlobalRep::numeric(h.params(), validated_default_spec(m, n));
    const InjectivityReport r = injectivity_report(h, g);
    out.detail += " (" + std::to_string(m) + "," + std::to_string(n) + ") rank " + std::to_string(r.rank) + "/" +
                  std::to_string(r.basis_size);
    if (!r.ok() || r.basis_size != group_order(m, n)) out.ok = false;
  }
  return out;
}

Outcome rewrite_correctness() {
  Outcome out;
  std::size_t pairs = 0;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const Algebra h({m, n});
      const GlobalRep g = GlobalRep::numeric(h.params(), validated_default_spec(m, n));
      const MorphismReport r = morphism_report(h, g, 200, 1000 + 10 * m + n);
      pairs += r.pairs;
      if (!r.ok()) {
        out.ok = false;
        out.detail += " (" + std::to_string(m) + "," + std::to_string(n) + ") failures " + std::to_string(r.failures);
      }
    }
  }
  out.detail += " pairs=" + std::to_string(pairs);
  return out;
}

Outcome flatness() {
  Outcome out;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {1, 4}}) {
    const FlatnessReport r = flatness_report(Algebra({m, n}));
    out.detail += " (" + std::to_string(m) + "," + std::to_string(n) + ") " + std::to_string(r.coefficients) +
                  " constants";
    if (!r.ok()) out.ok = false;
  }
  return out;
}

Outcome representation_relations() {
  Outcome out;
  std::size_t shapes = 0;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (const MPartition& shape : enumerate_mpartitions(m, n)) {
        ++shapes;
        if (!verify_defining_relations(build_representation(shape))) {
          out.ok = false;
          out.detail += " " + shape.to_string();
        }
      }
    }
  }
  out.detail += " shapes=" + std::to_string(shapes);
  return out;
}

Outcome completeness() {
  Outcome out;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 5; ++n) {
      if (!completeness_report(m, n).equal()) {
        out.ok = false;
        out.detail += " (" + std::to_string(m) + "," + std::to_string(n) + ")";
      }
    }
  }
  const auto a = completeness_report(2, 2);
  const auto b = completeness_report(2, 3);
  if (a.sum_of_squares != 8 || b.sum_of_squares != 48) out.ok = false;
  out.detail += " (2,2): " + std::to_string(a.sum_of_squares) + " = " + std::to_string(a.group_order) +
                ", (2,3): " + std::to_string(b.sum_of_squares) + " = " + std::to_string(b.group_order);
  return out;
}

std::set<ContentString> brute_force_content_strings(int m, int n) {
  std::vector<Content> alphabet;
  for (int k = 0; k < m; ++k) {
    for (int z = -(n - 1); z <= n - 1; ++z) alphabet.push_back(Content{k, z});
  }
  std::set<ContentString> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    ContentString s;
    for (std::size_t i : idx) s.push_back(alphabet[i]);
    if (is_content_string(s, m)) out.insert(s);
    std::size_t pos = 0;
    while (pos < idx.size() && idx[pos] + 1 == alphabet.size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
    ++idx[pos];
  }
  return out;
}

Outcome spectrum_structure() {
  Outcome out;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const SpectrumReport r = spectrum_report(GlobalRep::symbolic({m, n}));
      std::set<ContentString> from_tableaux;
      std::size_t tableaux = 0;
      for (const MPartition& shape : enumerate_mpartitions(m, n)) {
        for (const StandardMTableau& t : enumerate_standard_tableaux(shape)) {
          from_tableaux.insert(content_string(t));
          ++tableaux;
        }
      }
      const std::set<ContentString> brute = brute_force_content_strings(m, n);
      const bool ok = r.ok() && r.entries.size() == tableaux && brute.size() == tableaux && brute == from_tableaux;
      if (!ok) {
        out.ok = false;
        out.detail += " (" + std::to_string(m) + "," + std::to_string(n) + ")";
      }
    }
  }
  out.detail += " m<=3, n<=4";
  return out;
}

Outcome rank_two() {
  Outcome out;
  const Scalar v1 = Scalar::v(1);
  const Scalar v2 = Scalar::v(2);
  const bool relations = verify_affine_relations(h2_one_dim(v1, 1)) && verify_affine_relations(h2_one_dim(v1, -1)) &&
                         verify_affine_relations(h2_two_dim(v1, v2));
  auto code_of = [](const Scalar& a, const Scalar& b) {
    try {
      (void)h2_two_dim(a, b);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  const bool errors = code_of(v1, v1) == ErrorCode::NotDiagonalizable &&
                      code_of(v1, Scalar::q(2) * v1) == ErrorCode::Reducible &&
                      code_of(v1, Scalar::q(-2) * v1) == ErrorCode::Reducible;
  out.ok = relations && errors;
  out.detail = std::string(" relations ") + (relations ? "hold" : "fail") + ", error paths " +
               (errors ? "raised" : "missing");
  return out;
}

Outcome baxter() {
  Outcome out;
  for (int m = 1; m <= 2; ++m) {
    const BaxterReport three = verify_baxter_relations(Algebra({m, 3}));
    const BaxterReport four = verify_baxter_relations(Algebra({m, 4}));
    const bool ok = three.unitarity.value_or(false) && three.yang_baxter.value_or(false) &&
                    four.locality.value_or(false) && four.ok();
    if (!ok) out.ok = false;
    out.detail += " m=" + std::to_string(m) + (ok ? " ok" : " failed");
  }
  return out;
}

Outcome semisimplicity_gate() {
  Outcome out;
  ParamSpec bad;
  bad.m = 2;
  bad.q = 2;
  bad.v = {1, 4};
  ParamSpec good = bad;
  good.v = {1, 3};
  const bool rejects = !is_semisimple_spec(bad, 2);
  const bool accepts = is_semisimple_spec(good, 2);
  bool refused = false;
  try {
    CheckOptions opts;
    opts.spec = bad;
    (void)run_check({2, 2}, opts);
  } catch (const Error& e) {
    refused = e.code() == ErrorCode::NotSemisimple;
  }
  bool refused_phi = false;
  try {
    (void)GlobalRep::numeric({2, 2}, bad);
  } catch (const Error& e) {
    refused_phi = e.code() == ErrorCode::NotSemisimple;
  }
  out.ok = rejects && accepts && refused && refused_phi;
  out.detail = std::string(" v=(1,4) ") + (rejects ? "rejected" : "accepted") + ", v=(1,3) " +
               (accepts ? "accepted" : "rejected") + ", suites " + (refused && refused_phi ? "refuse" : "run");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"dimension n!m^n, m<=3, n<=5", dimension},
      {"normal-form soundness (rank)", normal_form_soundness},
      {"rewrite correctness (phi morphism)", rewrite_correctness},
      {"flatness certificate", flatness},
      {"representation relations", representation_relations},
      {"completeness (sum of squares)", completeness},
      {"spectrum structure", spectrum_structure},
      {"rank-2 representations", rank_two},
      {"Baxter identities", baxter},
      {"semisimplicity gate", semisimplicity_gate},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome r;
    const auto start = std::chrono::steady_clock::now();
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string(" exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!r.ok) ++failed;
    std::printf("%s criterion %zu: %s:%s [%.2fs]\n", r.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                r.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
